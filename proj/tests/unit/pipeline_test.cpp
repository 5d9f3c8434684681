#include "resonance/pipeline.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "resonance/clustering.hpp"
#include "resonance/context.hpp"
#include "resonance/error.hpp"
#include "resonance/parallel.hpp"
#include "resonance/query.hpp"

namespace resonance {
namespace {

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() /
                    ("resonance_pipeline_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                     "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void Write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string Bytes(const SemanticMatrix& m) {
  std::ostringstream out(std::ios::binary);
  SaveIndex(m, out);
  return out.str();
}

TEST(LoadBuildConfigTest, ReadsAllKeys) {
  TempDir dir;
  Write(dir / "stop.txt", "# custom\nfoo\nbar\n");
  Write(dir / "config.json",
        R"({"min_df": 3, "stopwords": "stop.txt", "max_phrase_length": 2,
            "dims": 128, "seed": 5, "log_damping": true})");
  const BuildConfig c = LoadBuildConfig(dir / "config.json");
  EXPECT_EQ(c.extraction.min_df, 3u);
  EXPECT_EQ(c.extraction.stopwords, (StopwordSet{"bar", "foo"}));
  EXPECT_EQ(c.projection.dims, 128u);
  EXPECT_EQ(c.projection.seed, 5u);
  EXPECT_EQ(c.weighting, CellWeighting::kLog1p);
}

TEST(LoadBuildConfigTest, DefaultsWhenEmpty) {
  TempDir dir;
  Write(dir / "config.json", "{}");
  const BuildConfig c = LoadBuildConfig(dir / "config.json");
  EXPECT_FALSE(c.extraction.min_df.has_value());
  EXPECT_EQ(c.projection.dims, 600u);
  EXPECT_EQ(c.projection.seed, 20150629u);
  EXPECT_EQ(c.weighting, CellWeighting::kRaw);
}

TEST(LoadBuildConfigTest, RejectsBadInput) {
  TempDir dir;
  for (const char* text : {R"({"dimz": 3})", R"({"dims": 1})", R"({"min_df": 0})",
                           R"({"max_phrase_length": 3})", R"({"seed": "x"})", "[1]", "{"}) {
    Write(dir / "config.json", text);
    EXPECT_THROW(LoadBuildConfig(dir / "config.json"), FormatError) << text;
  }
  EXPECT_THROW(LoadBuildConfig(dir / "absent.json"), FormatError);
}

TEST(BuildIndexTest, CountsAndLabels) {
  const auto& fx = testing::Synthetic();
  const SemanticMatrix& index = fx.build.index;
  EXPECT_EQ(index.dims(), 64u);
  ASSERT_EQ(index.solutions().size(), 2u);
  EXPECT_EQ(index.solutions()[0].cluster_count, 3u);

  // Non-term counts equal the number of articles carrying the entity.
  std::map<EntityId, std::uint64_t> carried;
  for (const auto& a : fx.build.articles) {
    for (const auto& o : a.entities) carried[o.id] += o.multiplicity;
  }
  ASSERT_EQ(carried.size(), index.size());
  for (std::size_t r = 0; r < index.size(); ++r) {
    EXPECT_EQ(index.entity(r).count, carried[index.entity(r).id]);
  }
  const auto journal = index.find({EntityKind::kJournal, "1001-2007"});
  ASSERT_TRUE(journal.has_value());
  EXPECT_EQ(index.entity(*journal).label, "Journal of Cataclysmic variables");
  EXPECT_EQ(index.entity(*journal).count, 100u);
}

TEST(BuildIndexTest, EmptyCorpusIsAnError) {
  EXPECT_THROW(BuildIndex({}, {}, BuildConfig{}), InvalidArgument);
}

TEST(BuildIndexTest, IndependentOfWorkerCount) {
  const auto& fx = testing::Synthetic();
  BuildConfig config;
  config.projection.dims = 64;
  config.projection.seed = 99;
  const unsigned saved = WorkerCount();
  SetWorkerCount(1);
  const std::string one = Bytes(BuildIndex(fx.records, fx.solutions, config).index);
  SetWorkerCount(5);
  const std::string five = Bytes(BuildIndex(fx.records, fx.solutions, config).index);
  SetWorkerCount(saved);
  EXPECT_EQ(one, five);
  EXPECT_EQ(one, Bytes(fx.build.index));
}

TEST(BuildIndexTest, PipelineClosure) {
  const auto& fx = testing::Synthetic();
  const ArticleEmbedding emb = EmbedArticles(fx.build.articles, fx.build.index);
  KMeansParams p;
  p.k = 3;
  p.seed = 1;
  const ClusterSolution produced =
      ToSolution(emb.matrix, MiniBatchKMeans(emb.matrix, p), "oclc", "kmeans");

  std::vector<std::string> order;
  for (const auto& r : fx.records) order.push_back(r.article_id);
  std::stringstream file;
  WriteAssignments(file, produced, order);
  const LoadedSolution loaded = LoadClusterSolution(file, "oclc", 4);
  EXPECT_EQ(loaded.solution.assignments, produced.assignments);

  std::vector<ClusterSolution> sols = fx.solutions;
  sols.push_back(loaded.solution);
  BuildConfig config;
  config.projection.dims = 64;
  const BuildResult rebuilt = BuildIndex(fx.records, sols, config);
  EXPECT_EQ(rebuilt.index.cluster_rows("oclc").size(), 3u);
  const ContextNetwork net = Relate(ParseQuery("[cluster:oclc 0]"), rebuilt.index);
  EXPECT_FALSE(net.nodes.empty());
  const ContextNetwork cmp = Relate(ParseQuery("[cluster:oclc][cluster:a]"), rebuilt.index);
  EXPECT_EQ(cmp.nodes.size(), 6u);
}

TEST(VocabularyFromIndexTest, RecoversTermKeys) {
  const auto& fx = testing::Synthetic();
  const TermVocabulary v = VocabularyFromIndex(fx.build.index);
  EXPECT_EQ(v.size(), fx.build.vocabulary.size());
  for (const auto& [phrase, df] : fx.build.vocabulary.entries()) EXPECT_TRUE(v.contains(phrase));
}

TEST(RelateTest, ShowZeroRejectedAndEchoNormalized) {
  const auto& index = testing::Synthetic().build.index;
  QueryExpression q = ParseQuery("Dark+Energy");
  q.show = 0;
  EXPECT_THROW(Relate(q, index), InvalidArgument);
  q.show = 3;
  EXPECT_EQ(Relate(q, index).query_echo, "dark energy");
}

TEST(RelateTest, ClassSelectorsWithClusterFilteredOut) {
  const auto& index = testing::Synthetic().build.index;
  QueryExpression q = ParseQuery("[cluster:a]");
  q.type_filter = KindSet::Of(EntityKind::kTerm);
  const ContextNetwork net = Relate(q, index);
  EXPECT_TRUE(net.nodes.empty());
  EXPECT_EQ(net.reason, "no_results");
}

TEST(RelateTest, TableFormat) {
  const auto& index = testing::Synthetic().build.index;
  QueryExpression q = ParseQuery("accretion");
  q.show = 2;
  const std::string table = FormatNetworkTable(Relate(q, index));
  EXPECT_EQ(table.substr(0, table.find('\n')), "kind\tkey\tscore\tcount");
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 3);
  EXPECT_EQ(RoundForOutput(-1e-9), 0.0);
  EXPECT_FALSE(std::signbit(RoundForOutput(-1e-9)));
}

}  // namespace
}  // namespace resonance
