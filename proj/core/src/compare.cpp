#include "resonance/compare.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "resonance/error.hpp"

namespace resonance {
namespace {

double Pairs(double n) { return n * (n - 1.0) / 2.0; }

std::vector<ClusterMatch> BestMatches(const std::vector<std::string>& from,
                                      const std::vector<std::string>& to,
                                      const std::vector<std::vector<std::size_t>>& table,
                                      bool transpose) {
  std::vector<ClusterMatch> out;
  for (std::size_t i = 0; i < from.size(); ++i) {
    ClusterMatch m{from[i], "", 0};
    for (std::size_t j = 0; j < to.size(); ++j) {
      const std::size_t v = transpose ? table[j][i] : table[i][j];
      if (v > m.overlap) m = {from[i], to[j], v};
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

ContextNetwork CompareSolutions(std::span<const std::string> solution_ids,
                                const SemanticMatrix& index, std::size_t show,
                                const LayoutOptions& layout) {
  if (show == 0) throw InvalidArgument("show must be at least 1");
  if (solution_ids.empty()) throw InvalidArgument("no solutions to compare");

  std::vector<std::string> ids;
  for (const auto& raw : solution_ids) {
    std::string id = NormalizeKey(raw);
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(std::move(id));
  }

  std::vector<std::size_t> rows;
  std::vector<std::size_t> group;  // index into ids, per row
  for (std::size_t g = 0; g < ids.size(); ++g) {
    const auto solution_rows = index.cluster_rows(ids[g]);
    if (solution_rows.empty()) {
      throw InvalidArgument("unknown solution '" + ids[g] + "'");
    }
    for (std::size_t r : solution_rows) {
      rows.push_back(r);
      group.push_back(g);
    }
  }

  const std::size_t n = rows.size();
  const std::vector<double> cos = PairwiseCosine(index, rows);
  const bool across = ids.size() > 1;
  std::vector<RankedEntity> ranked(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (across && group[j] == group[i]) continue;
      sum += cos[i * n + j];
      ++count;
    }
    ranked[i] = {rows[i], count == 0 ? 0.0 : sum / static_cast<double>(count)};
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedEntity& a, const RankedEntity& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.row < b.row;
  });

  ContextNetwork net;
  net.truncated = ranked.size() > show;
  if (net.truncated) ranked.resize(show);
  for (const auto& id : ids) {
    if (!net.query_echo.empty()) net.query_echo += ' ';
    net.query_echo += "[cluster:" + id + "]";
  }
  net.nodes = MakeNodes(index, ranked, layout);
  return net;
}

double AdjustedRandIndex(const std::vector<std::vector<std::size_t>>& contingency) {
  double index = 0.0, n = 0.0;
  std::vector<double> row_sums(contingency.size(), 0.0);
  std::vector<double> col_sums(contingency.empty() ? 0 : contingency[0].size(), 0.0);
  for (std::size_t i = 0; i < contingency.size(); ++i) {
    for (std::size_t j = 0; j < contingency[i].size(); ++j) {
      const double v = static_cast<double>(contingency[i][j]);
      index += Pairs(v);
      row_sums[i] += v;
      col_sums[j] += v;
      n += v;
    }
  }
  double sum_a = 0.0, sum_b = 0.0;
  for (double a : row_sums) sum_a += Pairs(a);
  for (double b : col_sums) sum_b += Pairs(b);
  const double total = Pairs(n);
  if (total == 0.0) return 1.0;
  const double expected = sum_a * sum_b / total;
  const double maximum = 0.5 * (sum_a + sum_b);
  if (maximum == expected) return 1.0;
  return std::clamp((index - expected) / (maximum - expected), -1.0, 1.0);
}

OverlapReport SolutionOverlap(const ClusterSolution& a, const ClusterSolution& b) {
  OverlapReport report;
  report.a_id = a.solution_id;
  report.b_id = b.solution_id;

  std::map<std::pair<std::string, std::string>, std::size_t> cells;
  for (const auto& [article, ca] : a.assignments) {
    const auto it = b.assignments.find(article);
    if (it == b.assignments.end()) continue;
    ++cells[{ca, it->second}];
    ++report.shared_articles;
  }
  if (report.shared_articles == 0) {
    throw InvalidArgument("solutions '" + a.solution_id + "' and '" + b.solution_id +
                          "' share no articles");
  }
  for (const auto& [key, count] : cells) {
    report.a_clusters.push_back(key.first);
    report.b_clusters.push_back(key.second);
  }
  for (auto* labels : {&report.a_clusters, &report.b_clusters}) {
    std::sort(labels->begin(), labels->end(), ClusterIdLess);
    labels->erase(std::unique(labels->begin(), labels->end()), labels->end());
  }
  std::map<std::string, std::size_t> row_of, col_of;
  for (std::size_t i = 0; i < report.a_clusters.size(); ++i) row_of[report.a_clusters[i]] = i;
  for (std::size_t j = 0; j < report.b_clusters.size(); ++j) col_of[report.b_clusters[j]] = j;
  report.contingency.assign(report.a_clusters.size(),
                            std::vector<std::size_t>(report.b_clusters.size(), 0));
  for (const auto& [key, count] : cells) {
    report.contingency[row_of[key.first]][col_of[key.second]] = count;
  }
  report.adjusted_rand = AdjustedRandIndex(report.contingency);
  report.a_to_b = BestMatches(report.a_clusters, report.b_clusters, report.contingency, false);
  report.b_to_a = BestMatches(report.b_clusters, report.a_clusters, report.contingency, true);
  return report;
}

std::string FormatOverlapTable(const OverlapReport& report) {
  std::ostringstream out;
  char ari[32];
  std::snprintf(ari, sizeof ari, "%.6f", report.adjusted_rand);
  out << "solutions " << report.a_id << " vs " << report.b_id << ": "
      << report.shared_articles << " shared articles, adjusted rand index " << ari << "\n\n";

  std::size_t width = 4;
  for (const auto& c : report.b_clusters) width = std::max(width, c.size() + 1);
  for (const auto& row : report.contingency) {
    for (std::size_t v : row) width = std::max(width, std::to_string(v).size() + 1);
  }
  std::size_t label_width = report.a_id.size() + report.b_id.size() + 2;
  for (const auto& c : report.a_clusters) label_width = std::max(label_width, c.size());

  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  out << pad(report.a_id + "\\" + report.b_id, label_width);
  for (const auto& c : report.b_clusters) out << pad(c, width);
  out << '\n';
  for (std::size_t i = 0; i < report.a_clusters.size(); ++i) {
    out << pad(report.a_clusters[i], label_width);
    for (std::size_t v : report.contingency[i]) out << pad(std::to_string(v), width);
    out << '\n';
  }
  out << "\nbest matches " << report.a_id << " -> " << report.b_id << ":\n";
  for (const auto& m : report.a_to_b) {
    out << "  " << m.cluster << " -> " << m.best_match << " (" << m.overlap << ")\n";
  }
  out << "best matches " << report.b_id << " -> " << report.a_id << ":\n";
  for (const auto& m : report.b_to_a) {
    out << "  " << m.cluster << " -> " << m.best_match << " (" << m.overlap << ")\n";
  }
  return out.str();
}

std::string FormatOverlapRows(const OverlapReport& report) {
  std::ostringstream out;
  out << report.a_id << '\t' << report.b_id << "\tcount\n";
  for (std::size_t i = 0; i < report.a_clusters.size(); ++i) {
    for (std::size_t j = 0; j < report.b_clusters.size(); ++j) {
      if (report.contingency[i][j] == 0) continue;
      out << report.a_clusters[i] << '\t' << report.b_clusters[j] << '\t'
          << report.contingency[i][j] << '\n';
    }
  }
  return out.str();
}

}  // namespace resonance
