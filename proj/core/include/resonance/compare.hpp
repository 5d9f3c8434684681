#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "resonance/cluster_solution.hpp"
#include "resonance/network.hpp"
#include "resonance/semantic_matrix.hpp"

namespace resonance {

/// Network of exactly the cluster entities of the listed solutions. Each
/// node scores the mean cosine to the clusters of the other listed solutions
/// (to the other clusters of the same solution when only one is listed; 0
/// for a lone node), so clusters with close counterparts rank first. Capped
/// at `show` nodes. Throws InvalidArgument for an id with no clusters in the
/// index.
ContextNetwork CompareSolutions(std::span<const std::string> solution_ids,
                                const SemanticMatrix& index, std::size_t show,
                                const LayoutOptions& layout = {});

struct ClusterMatch {
  std::string cluster;
  std::string best_match;
  std::size_t overlap = 0;
};

/// Contingency summary of two partitions over their shared articles.
struct OverlapReport {
  std::string a_id;
  std::string b_id;
  std::vector<std::string> a_clusters;  // row labels, ClusterIdLess order
  std::vector<std::string> b_clusters;  // column labels
  std::vector<std::vector<std::size_t>> contingency;
  std::size_t shared_articles = 0;
  double adjusted_rand = 0.0;  // in [-1, 1]; 1 for identical partitions
  std::vector<ClusterMatch> a_to_b;
  std::vector<ClusterMatch> b_to_a;
};

/// Throws InvalidArgument when the solutions share no article.
OverlapReport SolutionOverlap(const ClusterSolution& a, const ClusterSolution& b);

/// Adjusted Rand index from a contingency table. Degenerate tables where
/// both partitions are a single cluster (or all singletons) score 1.
double AdjustedRandIndex(const std::vector<std::vector<std::size_t>>& contingency);

/// Human-readable report: agreement line, contingency table, best matches.
std::string FormatOverlapTable(const OverlapReport& report);

/// Machine-readable rows: `a_cluster<TAB>b_cluster<TAB>count` for every
/// non-zero cell.
std::string FormatOverlapRows(const OverlapReport& report);

}  // namespace resonance
