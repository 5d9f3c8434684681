#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

namespace resonance {

inline constexpr std::size_t kDefaultMinClusterSize = 4;

/// One algorithm's assignment of articles to clusters.
struct ClusterSolution {
  std::string solution_id;  // short label such as "a"
  std::string source_name;  // provenance, e.g. "cwts 1.8"
  std::map<std::string, std::string> assignments;  // article id -> cluster id

  /// Cluster id -> number of assigned articles, derived from `assignments`.
  std::map<std::string, std::size_t> ClusterSizes() const;
  std::size_t ClusterCount() const { return ClusterSizes().size(); }
};

struct SolutionLoadReport {
  std::size_t raw_clusters = 0;
  std::size_t retained_clusters = 0;
  std::size_t discarded_articles = 0;     // members of clusters below min_size
  std::vector<std::string> unknown_ids;   // assigned ids absent from the corpus
};

struct LoadedSolution {
  ClusterSolution solution;
  SolutionLoadReport report;
};

/// Reads `article_id<TAB>cluster_id` lines. Clusters with fewer than
/// `min_size` members (counted over the whole file) are dropped. When
/// `known_ids` is non-null, ids outside it are removed from the assignments
/// and listed in the report. A duplicate article id throws FormatError naming
/// every duplicated id.
LoadedSolution LoadClusterSolution(std::istream& in, const std::string& solution_id,
                                   std::size_t min_size = kDefaultMinClusterSize,
                                   const std::unordered_set<std::string>* known_ids = nullptr);

LoadedSolution LoadClusterSolutionFile(const std::filesystem::path& path,
                                       const std::string& solution_id,
                                       std::size_t min_size = kDefaultMinClusterSize,
                                       const std::unordered_set<std::string>* known_ids = nullptr);

/// Writes the assignment format, one line per article in `article_order`.
void WriteAssignments(std::ostream& out, const ClusterSolution& solution,
                      const std::vector<std::string>& article_order);

/// Orders cluster ids numerically when both are integers, otherwise
/// lexicographically ("2" < "10" < "x").
bool ClusterIdLess(const std::string& a, const std::string& b);

}  // namespace resonance
