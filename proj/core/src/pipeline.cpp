#include "resonance/pipeline.hpp"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "resonance/cooccurrence.hpp"
#include "resonance/error.hpp"

namespace resonance {

BuildConfig LoadBuildConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open config file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("config " + path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw FormatError("config must be a JSON object");

  BuildConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "min_df") {
        const auto v = value.get<std::int64_t>();
        if (v < 1) throw FormatError("config: min_df must be >= 1");
        config.extraction.min_df = static_cast<std::uint32_t>(v);
      } else if (key == "stopwords") {
        std::filesystem::path p = value.get<std::string>();
        if (p.is_relative()) p = path.parent_path() / p;
        config.extraction.stopwords = LoadStopwords(p);
      } else if (key == "max_phrase_length") {
        if (value.get<std::int64_t>() != static_cast<std::int64_t>(kMaxPhraseLength)) {
          throw FormatError("config: max_phrase_length is fixed at 2");
        }
      } else if (key == "dims") {
        const auto v = value.get<std::int64_t>();
        if (v < 2) throw FormatError("config: dims must be >= 2");
        config.projection.dims = static_cast<std::uint32_t>(v);
      } else if (key == "seed") {
        config.projection.seed = value.get<std::uint64_t>();
      } else if (key == "log_damping") {
        config.weighting = value.get<bool>() ? CellWeighting::kLog1p : CellWeighting::kRaw;
      } else {
        throw FormatError("config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("config " + path.string() + ": " + e.what());
  }
  return config;
}

BuildResult BuildIndex(std::span<const BibRecord> records,
                       std::span<const ClusterSolution> solutions, const BuildConfig& config) {
  Validate(config.projection);
  if (records.empty()) throw InvalidArgument("cannot build an index from an empty corpus");

  BuildResult result;
  result.vocabulary = ExtractTopicalTerms(records, config.extraction);
  result.articles = ExtractAllEntities(records, result.vocabulary, solutions);
  result.census = TakeCensus(result.articles);

  const CooccurrenceMatrix cooc = BuildCooccurrence(result.articles);
  result.cooccurrence_nonzeros = cooc.nonzeros();
  result.cooccurrence_cols = cooc.col_count();
  std::vector<float> vectors = ProjectMatrix(cooc, config.projection, config.weighting);

  std::map<std::string, std::string> journal_titles;
  for (const auto& rec : records) {
    const std::string issn = NormalizeKey(rec.issn);
    if (issn.empty() || rec.journal_title.empty()) continue;
    journal_titles.try_emplace(issn, rec.journal_title);
  }

  std::vector<EntityRecord> entities;
  entities.reserve(cooc.row_count());
  std::map<std::string, std::uint32_t> clusters_per_solution;
  for (std::size_t r = 0; r < cooc.row_count(); ++r) {
    EntityRecord e{cooc.rows()[r], cooc.rows()[r].key, cooc.occurrence_count(r)};
    if (e.id.kind == EntityKind::kJournal) {
      if (auto it = journal_titles.find(e.id.key); it != journal_titles.end()) {
        e.label = it->second;
      }
    } else if (e.id.kind == EntityKind::kCluster) {
      ++clusters_per_solution[std::string(ClusterSolutionOf(e.id.key))];
    }
    entities.push_back(std::move(e));
  }

  std::vector<SolutionInfo> infos;
  for (const auto& s : solutions) {
    const auto it = clusters_per_solution.find(s.solution_id);
    infos.push_back({s.solution_id, s.source_name,
                     it == clusters_per_solution.end() ? 0u : it->second});
  }

  result.index = SemanticMatrix(config.projection, config.weighting, std::move(entities),
                                std::move(vectors), std::move(infos));
  return result;
}

TermVocabulary VocabularyFromIndex(const SemanticMatrix& index) {
  std::map<std::string, std::uint32_t> df;
  const auto [first, last] = index.kind_range(EntityKind::kTerm);
  for (std::size_t r = first; r < last; ++r) {
    df.emplace(index.entity(r).id.key, static_cast<std::uint32_t>(index.entity(r).count));
  }
  return TermVocabulary(std::move(df), 1);
}

}  // namespace resonance
