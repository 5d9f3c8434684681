#include <benchmark/benchmark.h>

#include "resonance/clustering.hpp"
#include "resonance/cooccurrence.hpp"
#include "resonance/pipeline.hpp"
#include "resonance/projection.hpp"
#include "resonance/random.hpp"
#include "resonance/relatedness.hpp"
#include "synthetic_corpus.hpp"

namespace resonance {
namespace {

const BuildResult& Built() {
  static const BuildResult built = [] {
    synthetic::CorpusSpec spec;
    spec.documents = 2000;
    spec.topics = 8;
    const auto corpus = synthetic::MakeCorpus(spec);
    const std::vector<ClusterSolution> sols = {synthetic::PlantedSolution(corpus, "a", 0.1, 1)};
    return BuildIndex(corpus.records, sols, BuildConfig{});
  }();
  return built;
}

void BM_ProjectRow(benchmark::State& state) {
  const ProjectionSpec spec{600, kDefaultSeed};
  Rng rng(1);
  std::vector<SparseEntry> row;
  for (std::int64_t i = 0; i < state.range(0); ++i) row.push_back({rng.next(), 1 + rng.below(9)});
  for (auto _ : state) benchmark::DoNotOptimize(ProjectRowExact(row, spec));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProjectRow)->Arg(16)->Arg(256)->Arg(4096);

void BM_BuildCooccurrence(benchmark::State& state) {
  const auto& articles = Built().articles;
  for (auto _ : state) benchmark::DoNotOptimize(BuildCooccurrence(articles));
}
BENCHMARK(BM_BuildCooccurrence)->Unit(benchmark::kMillisecond);

void BM_ProjectMatrix(benchmark::State& state) {
  const CooccurrenceMatrix c = BuildCooccurrence(Built().articles);
  for (auto _ : state) benchmark::DoNotOptimize(ProjectMatrix(c, ProjectionSpec{}));
  state.counters["rows"] = static_cast<double>(c.row_count());
}
BENCHMARK(BM_ProjectMatrix)->Unit(benchmark::kMillisecond);

void BM_TopRelated(benchmark::State& state) {
  const SemanticMatrix& index = Built().index;
  const auto v = index.vector(index.kind_range(EntityKind::kTerm).first);
  const std::vector<double> q(v.begin(), v.end());
  RankOptions opts;
  opts.show = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(TopRelated(q, index, opts));
  state.counters["entities"] = static_cast<double>(index.size());
}
BENCHMARK(BM_TopRelated)->Arg(25)->Arg(250)->Unit(benchmark::kMicrosecond);

void BM_MiniBatchKMeans(benchmark::State& state) {
  const ArticleEmbedding emb = EmbedArticles(Built().articles, Built().index);
  KMeansParams p;
  p.k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(MiniBatchKMeans(emb.matrix, p));
  state.counters["articles"] = static_cast<double>(emb.matrix.rows());
}
BENCHMARK(BM_MiniBatchKMeans)->Arg(8)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace resonance

BENCHMARK_MAIN();
