#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "resonance/cluster_solution.hpp"
#include "resonance/corpus.hpp"
#include "resonance/entity.hpp"
#include "resonance/vocabulary.hpp"

namespace resonance {

struct EntityOccurrence {
  EntityId id;
  std::uint32_t multiplicity = 1;

  friend bool operator==(const EntityOccurrence&, const EntityOccurrence&) = default;
};

/// The distinct entities of one article, sorted by (kind, key). Terms carry
/// how often they matched in title+abstract; every other kind has
/// multiplicity 1.
struct ArticleEntities {
  std::string article_id;
  std::vector<EntityOccurrence> entities;
};

/// Matched topical terms, subjects, authors, the journal (by ISSN) and one
/// cluster-label entity per solution that assigns this article.
ArticleEntities ExtractEntities(const BibRecord& record, const TermVocabulary& vocab,
                                std::span<const ClusterSolution> solutions);

/// ExtractEntities over a whole corpus; output order follows `records`.
std::vector<ArticleEntities> ExtractAllEntities(std::span<const BibRecord> records,
                                                const TermVocabulary& vocab,
                                                std::span<const ClusterSolution> solutions);

/// Number of distinct entities per kind across a corpus.
struct EntityCensus {
  std::array<std::size_t, kAllKinds.size()> per_kind{};

  std::size_t count(EntityKind kind) const {
    return per_kind[static_cast<std::size_t>(kind)];
  }
  std::size_t total() const;
};

EntityCensus TakeCensus(std::span<const ArticleEntities> articles);

}  // namespace resonance
