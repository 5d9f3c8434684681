#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resonance/article_entities.hpp"
#include "resonance/cluster_solution.hpp"
#include "resonance/relatedness.hpp"
#include "resonance/semantic_matrix.hpp"

namespace resonance {

struct EmbeddingOptions {
  /// Cluster-label entities are left out by default so a new solution does
  /// not inherit the structure of the solutions already indexed.
  bool include_cluster_entities = false;
};

/// Unweighted mean of the vectors of the article's entities that exist in
/// the index. nullopt when none resolve.
std::optional<std::vector<float>> EmbedArticle(std::span<const EntityOccurrence> entities,
                                               const SemanticMatrix& index,
                                               const EmbeddingOptions& options = {});

/// Dense articles x dims matrix.
struct ArticleMatrix {
  std::vector<std::string> article_ids;
  std::uint32_t dims = 0;
  std::vector<float> data;

  std::size_t rows() const noexcept { return article_ids.size(); }
  std::span<const float> row(std::size_t i) const {
    return std::span<const float>(data).subspan(i * dims, dims);
  }
};

struct ArticleEmbedding {
  ArticleMatrix matrix;
  std::vector<std::string> unembeddable;  // articles with no resolved entity
};

ArticleEmbedding EmbedArticles(std::span<const ArticleEntities> articles,
                               const SemanticMatrix& index,
                               const EmbeddingOptions& options = {});

struct KMeansParams {
  std::size_t k = 20;
  std::size_t batch_size = 1024;
  std::size_t max_iterations = 100;
  /// Stop when every centroid moved less than tolerance x data scale in one
  /// step, where the data scale is the RMS distance of points to their mean.
  double tolerance = 1e-4;
  std::uint64_t seed = 0;
  /// Normalize rows to unit length first (spherical k-means).
  bool spherical = false;
};

struct KMeansResult {
  std::vector<std::uint32_t> labels;       // one per article row
  std::vector<double> centroids;           // k x dims, means of final clusters
  std::vector<double> initial_centroids;   // k-means++ seeds, k x dims
  double initial_inertia = 0.0;            // full-data inertia at the seeds
  double inertia = 0.0;                    // after the final assignment pass
  std::size_t iterations = 0;              // mini-batch steps taken
  std::vector<std::uint32_t> reseeded;     // clusters refilled after emptying
  bool fell_back_to_seeds = false;
};

/// k-means++ over a uniform sample of min(10 * k * batch_size, n) rows.
std::vector<double> KMeansPlusPlusSeeds(const ArticleMatrix& matrix, const KMeansParams& params);

/// Mini-batch k-means with per-centroid learning rates, followed by a
/// full-data assignment pass and a mean update. Throws InvalidArgument when
/// k is 0 or exceeds the number of rows.
KMeansResult MiniBatchKMeans(const ArticleMatrix& matrix, const KMeansParams& params);

/// Sum of squared Euclidean distances of rows to their labelled centroid.
double Inertia(const ArticleMatrix& matrix, std::span<const std::uint32_t> labels,
               std::span<const double> centroids);

/// Wraps k-means labels as a solution. Cluster ids are "0" .. "k-1".
ClusterSolution ToSolution(const ArticleMatrix& matrix, const KMeansResult& result,
                           const std::string& solution_id, const std::string& source_name);

struct ClusterLabel {
  EntityId cluster;
  std::vector<RankedEntity> terms;
};

/// The `n` topical terms most related to each cluster entity of
/// `solution_id`, in cluster order. Throws InvalidArgument when the solution
/// has no cluster entities in the index.
std::vector<ClusterLabel> LabelSolution(std::string_view solution_id,
                                        const SemanticMatrix& index, std::size_t n);

/// Same, for the clusters of an explicit solution. Throws InvalidArgument
/// naming the first cluster entity missing from the index.
std::vector<ClusterLabel> LabelSolution(const ClusterSolution& solution,
                                        const SemanticMatrix& index, std::size_t n);

}  // namespace resonance
