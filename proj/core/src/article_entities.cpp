#include "resonance/article_entities.hpp"

#include <map>
#include <numeric>
#include <set>

#include "resonance/parallel.hpp"

namespace resonance {

ArticleEntities ExtractEntities(const BibRecord& record, const TermVocabulary& vocab,
                                std::span<const ClusterSolution> solutions) {
  std::map<EntityId, std::uint32_t> found;

  // Vocabulary phrases never contain stopwords, so matching against an empty
  // stopword set finds exactly the phrases extraction would have produced.
  static const StopwordSet kNoStopwords;
  auto match = [&](const std::string& phrase) {
    if (vocab.contains(phrase)) ++found[EntityId{EntityKind::kTerm, phrase}];
  };
  ForEachCandidatePhrase(record.title, kNoStopwords, match);
  ForEachCandidatePhrase(record.abstract, kNoStopwords, match);

  auto add_once = [&found](EntityKind kind, const std::string& raw) {
    std::string key = NormalizeKey(raw);
    if (!key.empty()) found.try_emplace(EntityId{kind, std::move(key)}, 1u);
  };
  for (const auto& subject : record.subjects) add_once(EntityKind::kSubject, subject);
  for (const auto& author : record.authors) add_once(EntityKind::kAuthor, author);
  add_once(EntityKind::kJournal, record.issn);
  for (const auto& solution : solutions) {
    const auto it = solution.assignments.find(record.article_id);
    if (it == solution.assignments.end()) continue;
    found.try_emplace(ClusterEntity(solution.solution_id, it->second), 1u);
  }

  ArticleEntities out;
  out.article_id = record.article_id;
  out.entities.reserve(found.size());
  for (auto& [id, multiplicity] : found) out.entities.push_back({id, multiplicity});
  return out;
}

std::vector<ArticleEntities> ExtractAllEntities(std::span<const BibRecord> records,
                                                const TermVocabulary& vocab,
                                                std::span<const ClusterSolution> solutions) {
  std::vector<ArticleEntities> out(records.size());
  ParallelFor(records.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      out[i] = ExtractEntities(records[i], vocab, solutions);
    }
  });
  return out;
}

std::size_t EntityCensus::total() const {
  return std::accumulate(per_kind.begin(), per_kind.end(), std::size_t{0});
}

EntityCensus TakeCensus(std::span<const ArticleEntities> articles) {
  std::set<EntityId> distinct;
  for (const auto& article : articles) {
    for (const auto& occ : article.entities) distinct.insert(occ.id);
  }
  EntityCensus census;
  for (const auto& id : distinct) ++census.per_kind[static_cast<std::size_t>(id.kind)];
  return census;
}

}  // namespace resonance
