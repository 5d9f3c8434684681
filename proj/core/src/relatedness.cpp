#include "resonance/relatedness.hpp"

#include <algorithm>
#include <cmath>

#include "resonance/error.hpp"
#include "resonance/parallel.hpp"

namespace resonance {
namespace {

bool RankBefore(const RankedEntity& a, const RankedEntity& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.row < b.row;
}

double Clamp(double cosine) { return std::clamp(cosine, -1.0, 1.0); }

}  // namespace

ResolvedQuery ResolveQuery(const QueryExpression& query, const SemanticMatrix& index) {
  ResolvedQuery out;
  auto add = [&out](std::size_t row) {
    if (std::find(out.rows.begin(), out.rows.end(), row) == out.rows.end()) {
      out.rows.push_back(row);
    }
  };
  for (const auto& phrase : query.free_terms) {
    if (auto row = index.find({EntityKind::kTerm, phrase})) {
      add(*row);
    } else if (auto subject = index.find({EntityKind::kSubject, phrase})) {
      add(*subject);
    } else {
      out.unresolved.push_back(phrase);
    }
  }
  for (const auto& sel : query.selectors) {
    if (auto row = index.find(sel)) {
      add(*row);
    } else {
      out.unresolved.push_back(ToSelector(sel));
    }
  }
  for (const auto& cs : query.class_selectors) out.solution_ids.push_back(cs.solution_id);
  return out;
}

std::vector<double> ComposeQueryVector(const QueryExpression& query,
                                       const SemanticMatrix& index) {
  const ResolvedQuery resolved = ResolveQuery(query, index);
  std::vector<double> v(index.dims(), 0.0);
  if (resolved.rows.empty()) {
    if (!resolved.solution_ids.empty()) return v;
    throw QueryError(QueryError::Reason::kNoResonance,
                     "query resonates with nothing: '" + EchoQuery(query) + "'");
  }
  for (std::size_t row : resolved.rows) {
    const auto vec = index.vector(row);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += vec[j];
  }
  const double n = static_cast<double>(resolved.rows.size());
  for (double& x : v) x /= n;
  return v;
}

double Norm(std::span<const double> v) {
  double sq = 0.0;
  for (double x : v) sq += x * x;
  return std::sqrt(sq);
}

double Cosine(std::span<const double> query, double query_norm, std::span<const float> row,
              double row_norm) {
  if (query_norm == 0.0 || row_norm == 0.0) return 0.0;
  double dot = 0.0;
  for (std::size_t j = 0; j < query.size(); ++j) dot += query[j] * row[j];
  return Clamp(dot / (query_norm * row_norm));
}

double Cosine(std::span<const float> a, std::span<const float> b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    dot += static_cast<double>(a[j]) * b[j];
    na += static_cast<double>(a[j]) * a[j];
    nb += static_cast<double>(b[j]) * b[j];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return Clamp(dot / (std::sqrt(na) * std::sqrt(nb)));
}

RankResult TopRelated(std::span<const double> query, const SemanticMatrix& index,
                      const RankOptions& options) {
  if (query.size() != index.dims()) {
    throw InvalidArgument("query vector has wrong dimensionality");
  }
  const double qnorm = Norm(query);
  if (qnorm == 0.0) {
    throw QueryError(QueryError::Reason::kNoResonance, "query vector is zero");
  }

  std::vector<std::size_t> eligible;
  auto admit = [&](std::size_t row) {
    if (!options.type_filter.contains(index.entity(row).id.kind)) return;
    if (std::find(options.exclude.begin(), options.exclude.end(), row) != options.exclude.end()) {
      return;
    }
    eligible.push_back(row);
  };
  if (options.candidates != nullptr) {
    for (std::size_t row : *options.candidates) admit(row);
    std::sort(eligible.begin(), eligible.end());
    eligible.erase(std::unique(eligible.begin(), eligible.end()), eligible.end());
  } else {
    for (EntityKind kind : kAllKinds) {
      if (!options.type_filter.contains(kind)) continue;
      const auto [first, last] = index.kind_range(kind);
      for (std::size_t row = first; row < last; ++row) admit(row);
    }
  }

  std::vector<RankedEntity> scored(eligible.size());
  ParallelFor(eligible.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t row = eligible[i];
      scored[i] = {row, Cosine(query, qnorm, index.vector(row), index.norm(row))};
    }
  });

  RankResult result;
  const std::size_t keep = std::min(options.show, scored.size());
  result.truncated = scored.size() > options.show;
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep),
                    scored.end(), RankBefore);
  scored.resize(keep);
  result.ranked = std::move(scored);
  return result;
}

std::vector<double> PairwiseCosine(const SemanticMatrix& index,
                                   std::span<const std::size_t> rows) {
  const std::size_t n = rows.size();
  std::vector<double> out(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = index.norm(rows[i]) == 0.0 ? 0.0 : 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = Cosine(index.vector(rows[i]), index.vector(rows[j]));
      out[i * n + j] = c;
      out[j * n + i] = c;
    }
  }
  return out;
}

}  // namespace resonance
