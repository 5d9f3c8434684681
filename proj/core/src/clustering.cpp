#include "resonance/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "resonance/error.hpp"
#include "resonance/parallel.hpp"
#include "resonance/random.hpp"

namespace resonance {
namespace {

double SquaredDistance(std::span<const float> x, const double* c) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - c[j];
    s += d * d;
  }
  return s;
}

struct Nearest {
  std::uint32_t cluster = 0;
  double distance = 0.0;
};

Nearest FindNearest(std::span<const float> x, const std::vector<double>& centroids,
                    std::size_t k) {
  const std::size_t dims = x.size();
  Nearest best{0, std::numeric_limits<double>::infinity()};
  for (std::size_t c = 0; c < k; ++c) {
    const double d = SquaredDistance(x, centroids.data() + c * dims);
    if (d < best.distance) best = {static_cast<std::uint32_t>(c), d};
  }
  return best;
}

std::vector<Nearest> AssignAll(const ArticleMatrix& m, const std::vector<double>& centroids,
                               std::size_t k) {
  std::vector<Nearest> out(m.rows());
  ParallelFor(m.rows(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = FindNearest(m.row(i), centroids, k);
  });
  return out;
}

ArticleMatrix Normalized(const ArticleMatrix& m) {
  ArticleMatrix out = m;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    float* row = out.data.data() + i * out.dims;
    double sq = 0.0;
    for (std::size_t j = 0; j < out.dims; ++j) sq += static_cast<double>(row[j]) * row[j];
    if (sq == 0.0) continue;
    const double inv = 1.0 / std::sqrt(sq);
    for (std::size_t j = 0; j < out.dims; ++j) row[j] = static_cast<float>(row[j] * inv);
  }
  return out;
}

void Validate(const ArticleMatrix& m, const KMeansParams& p) {
  if (p.k == 0) throw InvalidArgument("k must be at least 1");
  if (p.k > m.rows()) {
    throw InvalidArgument("k = " + std::to_string(p.k) + " exceeds the number of articles (" +
                          std::to_string(m.rows()) + ")");
  }
  if (p.batch_size == 0) throw InvalidArgument("batch_size must be at least 1");
  if (m.data.size() != m.rows() * m.dims) throw InvalidArgument("article matrix shape mismatch");
}

// Full assignment, refill empty clusters from the farthest points, then move
// each centroid to the mean of its members.
struct Finalized {
  std::vector<std::uint32_t> labels;
  std::vector<double> centroids;
  double inertia = 0.0;
  std::vector<std::uint32_t> reseeded;
};

Finalized Finalize(const ArticleMatrix& m, std::vector<double> centroids, std::size_t k) {
  const std::size_t dims = m.dims;
  std::vector<Nearest> nearest = AssignAll(m, centroids, k);
  std::vector<std::size_t> sizes(k, 0);
  for (const auto& n : nearest) ++sizes[n.cluster];

  Finalized out;
  for (std::size_t c = 0; c < k; ++c) {
    if (sizes[c] != 0) continue;
    std::size_t far = m.rows();
    double far_d = -1.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (sizes[nearest[i].cluster] > 1 && nearest[i].distance > far_d) {
        far_d = nearest[i].distance;
        far = i;
      }
    }
    if (far == m.rows()) break;  // fewer distinct points than clusters
    --sizes[nearest[far].cluster];
    ++sizes[c];
    nearest[far] = {static_cast<std::uint32_t>(c), 0.0};
    const auto x = m.row(far);
    std::copy(x.begin(), x.end(), centroids.begin() + static_cast<std::ptrdiff_t>(c * dims));
    out.reseeded.push_back(static_cast<std::uint32_t>(c));
  }

  std::vector<double> sums(k * dims, 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto x = m.row(i);
    double* s = sums.data() + nearest[i].cluster * dims;
    for (std::size_t j = 0; j < dims; ++j) s[j] += x[j];
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (sizes[c] == 0) continue;
    for (std::size_t j = 0; j < dims; ++j) {
      centroids[c * dims + j] = sums[c * dims + j] / static_cast<double>(sizes[c]);
    }
  }

  out.labels.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.labels[i] = nearest[i].cluster;
  out.centroids = std::move(centroids);
  out.inertia = Inertia(m, out.labels, out.centroids);
  return out;
}

}  // namespace

std::optional<std::vector<float>> EmbedArticle(std::span<const EntityOccurrence> entities,
                                               const SemanticMatrix& index,
                                               const EmbeddingOptions& options) {
  std::vector<double> sum(index.dims(), 0.0);
  std::size_t resolved = 0;
  for (const auto& occ : entities) {
    if (occ.id.kind == EntityKind::kCluster && !options.include_cluster_entities) continue;
    const auto row = index.find(occ.id);
    if (!row) continue;
    const auto v = index.vector(*row);
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += v[j];
    ++resolved;
  }
  if (resolved == 0) return std::nullopt;
  std::vector<float> out(sum.size());
  for (std::size_t j = 0; j < sum.size(); ++j) {
    out[j] = static_cast<float>(sum[j] / static_cast<double>(resolved));
  }
  return out;
}

ArticleEmbedding EmbedArticles(std::span<const ArticleEntities> articles,
                               const SemanticMatrix& index, const EmbeddingOptions& options) {
  std::vector<std::optional<std::vector<float>>> vectors(articles.size());
  ParallelFor(articles.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      vectors[i] = EmbedArticle(articles[i].entities, index, options);
    }
  });
  ArticleEmbedding out;
  out.matrix.dims = index.dims();
  for (std::size_t i = 0; i < articles.size(); ++i) {
    if (!vectors[i]) {
      out.unembeddable.push_back(articles[i].article_id);
      continue;
    }
    out.matrix.article_ids.push_back(articles[i].article_id);
    out.matrix.data.insert(out.matrix.data.end(), vectors[i]->begin(), vectors[i]->end());
  }
  return out;
}

double Inertia(const ArticleMatrix& matrix, std::span<const std::uint32_t> labels,
               std::span<const double> centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    total += SquaredDistance(matrix.row(i), centroids.data() + labels[i] * matrix.dims);
  }
  return total;
}

std::vector<double> KMeansPlusPlusSeeds(const ArticleMatrix& input, const KMeansParams& params) {
  Validate(input, params);
  const ArticleMatrix normalized = params.spherical ? Normalized(input) : ArticleMatrix{};
  const ArticleMatrix& m = params.spherical ? normalized : input;
  const std::size_t n = m.rows();
  const std::size_t dims = m.dims;
  Rng rng(params.seed);

  // Uniform sample without replacement (partial Fisher-Yates).
  const std::size_t cap = 10 * params.k * params.batch_size;
  const std::size_t sample_size = std::min(n, cap);
  std::vector<std::size_t> sample(n);
  std::iota(sample.begin(), sample.end(), std::size_t{0});
  if (sample_size < n) {
    for (std::size_t i = 0; i < sample_size; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
      std::swap(sample[i], sample[j]);
    }
    sample.resize(sample_size);
  }

  std::vector<double> centroids(params.k * dims, 0.0);
  auto set_centroid = [&](std::size_t c, std::size_t row) {
    const auto x = m.row(row);
    std::copy(x.begin(), x.end(), centroids.begin() + static_cast<std::ptrdiff_t>(c * dims));
  };
  set_centroid(0, sample[static_cast<std::size_t>(rng.below(sample.size()))]);

  std::vector<double> closest(sample.size());
  for (std::size_t s = 0; s < sample.size(); ++s) {
    closest[s] = SquaredDistance(m.row(sample[s]), centroids.data());
  }
  for (std::size_t c = 1; c < params.k; ++c) {
    const double total = std::accumulate(closest.begin(), closest.end(), 0.0);
    std::size_t pick = 0;
    if (total > 0.0) {
      double target = rng.uniform() * total;
      pick = sample.size() - 1;
      for (std::size_t s = 0; s < sample.size(); ++s) {
        target -= closest[s];
        if (target < 0.0) {
          pick = s;
          break;
        }
      }
    } else {
      pick = static_cast<std::size_t>(rng.below(sample.size()));
    }
    set_centroid(c, sample[pick]);
    const double* centre = centroids.data() + c * dims;
    for (std::size_t s = 0; s < sample.size(); ++s) {
      closest[s] = std::min(closest[s], SquaredDistance(m.row(sample[s]), centre));
    }
  }
  return centroids;
}

KMeansResult MiniBatchKMeans(const ArticleMatrix& input, const KMeansParams& params) {
  Validate(input, params);
  const ArticleMatrix normalized = params.spherical ? Normalized(input) : ArticleMatrix{};
  const ArticleMatrix& m = params.spherical ? normalized : input;
  const std::size_t n = m.rows();
  const std::size_t dims = m.dims;
  const std::size_t k = params.k;

  KMeansResult result;
  result.initial_centroids = KMeansPlusPlusSeeds(input, params);
  {
    const auto seeds_assigned = AssignAll(m, result.initial_centroids, k);
    for (const auto& a : seeds_assigned) result.initial_inertia += a.distance;
  }

  // RMS distance to the data mean sets the scale of the stopping rule.
  std::vector<double> mean(dims, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = m.row(i);
    for (std::size_t j = 0; j < dims; ++j) mean[j] += x[j];
  }
  for (double& v : mean) v /= static_cast<double>(n);
  double spread = 0.0;
  for (std::size_t i = 0; i < n; ++i) spread += SquaredDistance(m.row(i), mean.data());
  const double scale = std::sqrt(spread / static_cast<double>(n));
  const double shift_limit = params.tolerance * scale;

  // Stream distinct from the seeding one so changing k does not shift batches.
  Rng rng(params.seed ^ 0xA5A5A5A5DEADBEEFull);
  std::vector<double> centroids = result.initial_centroids;
  std::vector<std::uint64_t> seen(k, 0);
  std::vector<std::size_t> batch(params.batch_size);
  std::vector<std::uint32_t> cached(params.batch_size);
  for (std::size_t iter = 0; iter < params.max_iterations; ++iter) {
    for (auto& b : batch) b = static_cast<std::size_t>(rng.below(n));
    for (std::size_t b = 0; b < batch.size(); ++b) {
      cached[b] = FindNearest(m.row(batch[b]), centroids, k).cluster;
    }
    std::vector<double> shift(k, 0.0);
    std::vector<std::vector<double>> start(k);
    for (std::size_t b = 0; b < batch.size(); ++b) {
      const std::uint32_t c = cached[b];
      double* centre = centroids.data() + c * dims;
      if (start[c].empty()) start[c].assign(centre, centre + dims);
      const double eta = 1.0 / static_cast<double>(++seen[c]);
      const auto x = m.row(batch[b]);
      for (std::size_t j = 0; j < dims; ++j) centre[j] = (1.0 - eta) * centre[j] + eta * x[j];
    }
    double max_shift = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      if (start[c].empty()) continue;
      double moved = 0.0;
      for (std::size_t j = 0; j < dims; ++j) {
        const double d = centroids[c * dims + j] - start[c][j];
        moved += d * d;
      }
      max_shift = std::max(max_shift, std::sqrt(moved));
    }
    result.iterations = iter + 1;
    if (max_shift < shift_limit) break;
  }

  Finalized fin = Finalize(m, std::move(centroids), k);
  if (fin.inertia > result.initial_inertia) {
    fin = Finalize(m, result.initial_centroids, k);
    result.fell_back_to_seeds = true;
  }
  result.labels = std::move(fin.labels);
  result.centroids = std::move(fin.centroids);
  result.inertia = fin.inertia;
  result.reseeded = std::move(fin.reseeded);
  return result;
}

ClusterSolution ToSolution(const ArticleMatrix& matrix, const KMeansResult& result,
                           const std::string& solution_id, const std::string& source_name) {
  ClusterSolution sol;
  sol.solution_id = solution_id;
  sol.source_name = source_name;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    sol.assignments.emplace(matrix.article_ids[i], std::to_string(result.labels[i]));
  }
  return sol;
}

std::vector<ClusterLabel> LabelSolution(std::string_view solution_id,
                                        const SemanticMatrix& index, std::size_t n) {
  const std::vector<std::size_t> rows = index.cluster_rows(solution_id);
  if (rows.empty()) {
    throw InvalidArgument("no cluster entities for solution '" + std::string(solution_id) +
                          "' in the index");
  }
  std::vector<ClusterLabel> out;
  for (std::size_t row : rows) {
    ClusterLabel label{index.entity(row).id, {}};
    if (n > 0 && index.norm(row) > 0.0) {
      const auto v = index.vector(row);
      const std::vector<double> query(v.begin(), v.end());
      RankOptions opts;
      opts.show = n;
      opts.type_filter = KindSet::Of(EntityKind::kTerm);
      label.terms = TopRelated(query, index, opts).ranked;
    }
    out.push_back(std::move(label));
  }
  std::stable_sort(out.begin(), out.end(), [](const ClusterLabel& a, const ClusterLabel& b) {
    const auto sa = a.cluster.key.substr(a.cluster.key.find(' ') + 1);
    const auto sb = b.cluster.key.substr(b.cluster.key.find(' ') + 1);
    return ClusterIdLess(sa, sb);
  });
  return out;
}

std::vector<ClusterLabel> LabelSolution(const ClusterSolution& solution,
                                        const SemanticMatrix& index, std::size_t n) {
  for (const auto& [cluster, size] : solution.ClusterSizes()) {
    const EntityId id = ClusterEntity(solution.solution_id, cluster);
    if (!index.find(id)) {
      throw InvalidArgument("cluster entity " + ToSelector(id) + " is not in the index");
    }
  }
  return LabelSolution(solution.solution_id, index, n);
}

}  // namespace resonance
