#include "fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "synthetic_corpus.hpp"

namespace resonance::testing {

BibRecord SsCygRecord() {
  BibRecord r;
  r.article_id = "ISI:000276828000006";
  r.title = "On the Mass Transfer Rate in SS Cyg";
  r.abstract =
      "The mass transfer rate in SS Cyg at quiescence, estimated from the observed "
      "luminosity of the hot spot, is log M-tr = 16.8 +/- 0.3. This is safely below the "
      "critical mass transfer rates of log M-crit = 18.1 (corresponding to log T-crit(0) = "
      "3.88) or log M-crit = 17.2 (corresponding to the \"revised\" value of log T-crit(0) = "
      "3.65). The mass transfer rate during outbursts is strongly enhanced";
  r.authors = {"Smak J"};
  r.issn = "0001-5237";
  r.journal_title = "Acta Astronomica";
  r.subjects = {"accretion, accretion disks", "cataclysmic variables", "disc instability model",
                "dwarf novae", "novae, cataclysmic variables", "outbursts", "parameters",
                "stars", "stars dwarf novae", "stars individual SS Cyg", "state",
                "superoutbursts"};
  return r;
}

std::vector<ClusterSolution> SsCygSolutions() {
  const std::vector<std::pair<std::string, std::string>> labels = {
      {"a", "19"}, {"b", "16"}, {"c", "15"}, {"d", "51"}, {"e", "17"}, {"f", "1"}};
  std::vector<ClusterSolution> out;
  for (const auto& [id, cluster] : labels) {
    ClusterSolution s;
    s.solution_id = id;
    s.source_name = id;
    s.assignments["ISI:000276828000006"] = cluster;
    out.push_back(std::move(s));
  }
  return out;
}

const SyntheticFixture& Synthetic() {
  static const SyntheticFixture fixture = [] {
    synthetic::CorpusSpec spec;
    spec.documents = 300;
    spec.topics = 3;
    spec.seed = 11;
    const synthetic::Corpus corpus = synthetic::MakeCorpus(spec);
    SyntheticFixture f;
    f.records = corpus.records;
    f.solutions = {synthetic::PlantedSolution(corpus, "a", 0.0, 3),
                   synthetic::PlantedSolution(corpus, "b", 0.1, 5)};
    BuildConfig config;
    config.projection.dims = 64;
    config.projection.seed = 99;
    f.build = BuildIndex(f.records, f.solutions, config);
    return f;
  }();
  return fixture;
}

SemanticMatrix MatrixFromVectors(const std::vector<EntityId>& ids,
                                 const std::vector<std::vector<float>>& vectors,
                                 std::uint64_t count) {
  ProjectionSpec spec;
  spec.dims = static_cast<std::uint32_t>(vectors.at(0).size());
  std::vector<EntityRecord> entities;
  std::vector<float> data;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    entities.push_back({ids[i], ids[i].key, count});
    data.insert(data.end(), vectors[i].begin(), vectors[i].end());
  }
  return SemanticMatrix(spec, CellWeighting::kRaw, std::move(entities), std::move(data), {});
}

std::string GoldenDir() { return RESONANCE_GOLDEN_DIR; }

std::string CheckGolden(const std::string& name, const std::string& actual) {
  const std::filesystem::path path = std::filesystem::path(GoldenDir()) / name;
  if (std::getenv("RESONANCE_UPDATE_GOLDEN") != nullptr) {
    std::ofstream out(path, std::ios::binary);
    out << actual;
    return {};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return "missing golden file " + path.string();
  std::stringstream expected;
  expected << in.rdbuf();
  if (expected.str() == actual) return {};
  return "golden mismatch for " + name + "\n--- expected\n" + expected.str() + "\n--- actual\n" +
         actual;
}

}  // namespace resonance::testing
