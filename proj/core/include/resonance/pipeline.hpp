#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "resonance/article_entities.hpp"
#include "resonance/cluster_solution.hpp"
#include "resonance/corpus.hpp"
#include "resonance/projection.hpp"
#include "resonance/semantic_matrix.hpp"
#include "resonance/vocabulary.hpp"

namespace resonance {

struct BuildConfig {
  ExtractionConfig extraction;
  ProjectionSpec projection;
  CellWeighting weighting = CellWeighting::kRaw;
};

/// Reads a JSON config file. Recognized keys: `min_df`, `stopwords` (path,
/// relative to the config file), `max_phrase_length` (must be 2), `dims`,
/// `seed`, `log_damping`. Unknown keys are rejected.
BuildConfig LoadBuildConfig(const std::filesystem::path& path);

struct BuildResult {
  TermVocabulary vocabulary;
  std::vector<ArticleEntities> articles;
  EntityCensus census;
  std::size_t cooccurrence_nonzeros = 0;
  std::size_t cooccurrence_cols = 0;
  SemanticMatrix index;
};

/// Full index construction: topical terms, per-article entities,
/// co-occurrence counts and random projection.
BuildResult BuildIndex(std::span<const BibRecord> records,
                       std::span<const ClusterSolution> solutions, const BuildConfig& config);

/// The term entities of an index, as a vocabulary for matching new text.
TermVocabulary VocabularyFromIndex(const SemanticMatrix& index);

}  // namespace resonance
