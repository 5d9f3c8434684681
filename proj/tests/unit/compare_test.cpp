#include "resonance/compare.hpp"

#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "resonance/error.hpp"
#include "resonance/pipeline.hpp"
#include "resonance/random.hpp"
#include "resonance/relatedness.hpp"
#include "synthetic_corpus.hpp"

namespace resonance {
namespace {

ClusterSolution Partition(const std::string& id, const std::vector<std::vector<int>>& groups) {
  ClusterSolution s;
  s.solution_id = id;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int article : groups[g]) s.assignments[std::to_string(article)] = std::to_string(g + 1);
  }
  return s;
}

// Pair-counting oracle computed directly over article pairs.
double PairCountingAri(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = a.size();
  double both = 0, in_a = 0, in_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool sa = a[i] == a[j], sb = b[i] == b[j];
      both += sa && sb;
      in_a += sa;
      in_b += sb;
    }
  }
  const double pairs = static_cast<double>(n) * (n - 1) / 2;
  const double expected = in_a * in_b / pairs;
  const double max = 0.5 * (in_a + in_b);
  return max == expected ? 1.0 : (both - expected) / (max - expected);
}

TEST(SolutionOverlapTest, HandContingency) {
  const auto a = Partition("A", {{1, 2}, {3, 4}});
  const auto b = Partition("B", {{1, 2}, {3}, {4}});
  const OverlapReport r = SolutionOverlap(a, b);
  EXPECT_EQ(r.contingency,
            (std::vector<std::vector<std::size_t>>{{2, 0, 0}, {0, 1, 1}}));
  EXPECT_EQ(r.shared_articles, 4u);
  EXPECT_EQ(r.a_clusters, (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(r.b_clusters, (std::vector<std::string>{"1", "2", "3"}));
  ASSERT_EQ(r.a_to_b.size(), 2u);
  EXPECT_EQ(r.a_to_b[0].best_match, "1");
  EXPECT_EQ(r.a_to_b[0].overlap, 2u);
  EXPECT_NEAR(r.adjusted_rand, PairCountingAri({1, 1, 2, 2}, {1, 1, 2, 3}), 1e-12);
}

TEST(SolutionOverlapTest, IdenticalPartitionsScoreOne) {
  const auto a = Partition("A", {{1, 2, 3}, {4, 5}, {6, 7, 8, 9}});
  const OverlapReport r = SolutionOverlap(a, a);
  EXPECT_DOUBLE_EQ(r.adjusted_rand, 1.0);
  for (std::size_t i = 0; i < r.contingency.size(); ++i) {
    for (std::size_t j = 0; j < r.contingency[i].size(); ++j) {
      if (i != j) EXPECT_EQ(r.contingency[i][j], 0u);
    }
  }
}

TEST(SolutionOverlapTest, ShuffledPartitionNearZero) {
  Rng rng(31);
  const std::size_t n = 10000;
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i % 20);
  std::vector<int> shuffled = labels;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(shuffled[i], shuffled[rng.below(i + 1)]);
  ClusterSolution a, b;
  a.solution_id = "a";
  b.solution_id = "b";
  for (std::size_t i = 0; i < n; ++i) {
    a.assignments[std::to_string(i)] = std::to_string(labels[i]);
    b.assignments[std::to_string(i)] = std::to_string(shuffled[i]);
  }
  EXPECT_LE(std::abs(SolutionOverlap(a, b).adjusted_rand), 0.05);
}

TEST(SolutionOverlapTest, MatchesPairCountingOracleAndIsSymmetric) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 5 + rng.below(60);
    std::vector<int> la(n), lb(n);
    ClusterSolution a, b;
    a.solution_id = "a";
    b.solution_id = "b";
    for (std::size_t i = 0; i < n; ++i) {
      la[i] = static_cast<int>(rng.below(1 + trial % 5));
      lb[i] = rng.uniform() < 0.5 ? la[i] : static_cast<int>(rng.below(4));
      a.assignments[std::to_string(i)] = std::to_string(la[i]);
      b.assignments[std::to_string(i)] = std::to_string(lb[i]);
    }
    const OverlapReport ab = SolutionOverlap(a, b), ba = SolutionOverlap(b, a);
    EXPECT_NEAR(ab.adjusted_rand, PairCountingAri(la, lb), 1e-9) << trial;
    EXPECT_EQ(ab.adjusted_rand, ba.adjusted_rand);
    for (std::size_t i = 0; i < ab.contingency.size(); ++i) {
      for (std::size_t j = 0; j < ab.contingency[i].size(); ++j) {
        EXPECT_EQ(ab.contingency[i][j], ba.contingency[j][i]);
      }
    }
  }
}

TEST(SolutionOverlapTest, OnlySharedArticlesCount) {
  auto a = Partition("A", {{1, 2}, {3}});
  auto b = Partition("B", {{2, 3, 7}});
  const OverlapReport r = SolutionOverlap(a, b);
  EXPECT_EQ(r.shared_articles, 2u);
  auto c = Partition("C", {{8, 9}});
  EXPECT_THROW(SolutionOverlap(a, c), InvalidArgument);
}

TEST(SolutionOverlapTest, TextAndRowFormats) {
  const OverlapReport r = SolutionOverlap(Partition("A", {{1, 2}, {3, 4}}),
                                          Partition("B", {{1, 2}, {3}, {4}}));
  EXPECT_EQ(FormatOverlapRows(r),
            "A\tB\tcount\n1\t1\t2\n2\t2\t1\n2\t3\t1\n");
  EXPECT_NE(FormatOverlapTable(r).find("adjusted rand"), std::string::npos);
}

TEST(CompareSolutionsTest, SingleClusterSolutionIsOneNode) {
  const std::vector<BibRecord> records = {testing::SsCygRecord()};
  const auto sols = testing::SsCygSolutions();
  BuildConfig config;
  config.extraction.min_df = 1;
  config.projection.dims = 16;
  const BuildResult built = BuildIndex(records, sols, config);
  const std::vector<std::string> ids = {"a"};
  const ContextNetwork net = CompareSolutions(ids, built.index, 25);
  ASSERT_EQ(net.nodes.size(), 1u);
  EXPECT_EQ(net.nodes[0].id, (EntityId{EntityKind::kCluster, "a 19"}));
  EXPECT_EQ(net.nodes[0].position, (Point{0.5, 0.5}));
}

TEST(CompareSolutionsTest, DuplicateSolutionsPairUp) {
  synthetic::CorpusSpec spec;
  spec.documents = 240;
  spec.topics = 4;
  spec.seed = 2;
  const auto corpus = synthetic::MakeCorpus(spec);
  ClusterSolution x = synthetic::PlantedSolution(corpus, "x", 0.3, 9);
  ClusterSolution y = x;
  y.solution_id = "y";
  ClusterSolution z = synthetic::PlantedSolution(corpus, "z", 0.0, 1);
  const std::vector<ClusterSolution> sols = {x, y, z};
  BuildConfig config;
  config.projection.dims = 64;
  const BuildResult built = BuildIndex(corpus.records, sols, config);
  const SemanticMatrix& index = built.index;

  const auto ys = index.cluster_rows("y");
  for (std::size_t xr : index.cluster_rows("x")) {
    const std::string cid(ClusterSolutionOf(index.entity(xr).id.key) == "x"
                              ? index.entity(xr).id.key.substr(2) : "");
    std::size_t best = ys[0];
    double best_cos = -2;
    for (std::size_t yr : ys) {
      const double c = Cosine(index.vector(xr), index.vector(yr));
      if (c > best_cos) best_cos = c, best = yr;
    }
    EXPECT_EQ(index.entity(best).id.key, "y " + cid);
    EXPECT_GE(best_cos, 0.999);
  }

  const std::vector<std::string> ids = {"x", "y"};
  const ContextNetwork net = CompareSolutions(ids, index, 50);
  EXPECT_EQ(net.nodes.size(), ys.size() * 2);
  for (const auto& n : net.nodes) {
    EXPECT_EQ(n.id.kind, EntityKind::kCluster);
    const auto sol = ClusterSolutionOf(n.id.key);
    EXPECT_TRUE(sol == "x" || sol == "y") << n.id.key;
  }
  EXPECT_EQ(net.query_echo, "[cluster:x] [cluster:y]");
}

TEST(CompareSolutionsTest, ShowCapsAndUnknownIdsFail) {
  const auto& index = testing::Synthetic().build.index;
  const std::vector<std::string> ids = {"a", "b"};
  const ContextNetwork net = CompareSolutions(ids, index, 4);
  EXPECT_EQ(net.nodes.size(), 4u);
  EXPECT_TRUE(net.truncated);
  for (std::size_t i = 1; i < net.nodes.size(); ++i) {
    EXPECT_GE(net.nodes[i - 1].score, net.nodes[i].score);
  }
  const std::vector<std::string> bad = {"a", "q"};
  EXPECT_THROW(CompareSolutions(bad, index, 4), InvalidArgument);
}

}  // namespace
}  // namespace resonance
