#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "resonance/query.hpp"
#include "resonance/semantic_matrix.hpp"

namespace resonance {

/// Query entities that were found in the index.
struct ResolvedQuery {
  std::vector<std::size_t> rows;          // distinct, in resolution order
  std::vector<std::string> unresolved;    // free terms and selectors not found
  std::vector<std::string> solution_ids;  // from class selectors
};

/// Free terms resolve to a term entity with the same key, else a subject,
/// else stay unresolved. Selectors resolve by exact identity.
ResolvedQuery ResolveQuery(const QueryExpression& query, const SemanticMatrix& index);

/// Unweighted mean of the resolved entities' vectors. Class selectors add
/// nothing; a query made only of class selectors yields the zero vector.
/// Throws QueryError(kNoResonance) when nothing resolves and there are no
/// class selectors.
std::vector<double> ComposeQueryVector(const QueryExpression& query,
                                       const SemanticMatrix& index);

/// Cosine between a dense query and an index row; 0 when either is zero.
double Cosine(std::span<const double> query, double query_norm,
              std::span<const float> row, double row_norm);

double Cosine(std::span<const float> a, std::span<const float> b);

double Norm(std::span<const double> v);

struct RankedEntity {
  std::size_t row = 0;
  double score = 0.0;

  friend bool operator==(const RankedEntity&, const RankedEntity&) = default;
};

struct RankOptions {
  std::size_t show = kDefaultShow;
  KindSet type_filter = KindSet::All();
  std::vector<std::size_t> exclude;        // rows never returned
  const std::vector<std::size_t>* candidates = nullptr;  // restrict scan
};

struct RankResult {
  std::vector<RankedEntity> ranked;
  bool truncated = false;  // more eligible entities than `show`
};

/// Exhaustive cosine scan. Results are ordered by descending score, ties by
/// (kind, key), which is the index row order. Throws QueryError(kNoResonance)
/// for a zero query vector.
RankResult TopRelated(std::span<const double> query, const SemanticMatrix& index,
                      const RankOptions& options);

/// Row-major n x n cosine matrix between index rows.
std::vector<double> PairwiseCosine(const SemanticMatrix& index,
                                   std::span<const std::size_t> rows);

}  // namespace resonance
