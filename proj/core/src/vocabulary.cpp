#include "resonance/vocabulary.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "resonance/parallel.hpp"

namespace resonance {

std::uint32_t DefaultMinDf(std::size_t corpus_size) noexcept {
  return corpus_size >= 10000 ? 5u : 2u;
}

std::uint32_t TermVocabulary::document_frequency(const std::string& phrase) const {
  const auto it = df_.find(phrase);
  return it == df_.end() ? 0u : it->second;
}

TermVocabulary ExtractTopicalTerms(std::span<const BibRecord> corpus,
                                   const ExtractionConfig& config) {
  const std::uint32_t min_df =
      std::max<std::uint32_t>(1, config.min_df.value_or(DefaultMinDf(corpus.size())));

  // Per-record phrase sets, then a sequential merge so counts do not depend
  // on the worker count.
  std::vector<std::set<std::string>> per_record(corpus.size());
  ParallelFor(corpus.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto& phrases = per_record[i];
      auto collect = [&phrases](const std::string& p) { phrases.insert(p); };
      ForEachCandidatePhrase(corpus[i].title, config.stopwords, collect);
      ForEachCandidatePhrase(corpus[i].abstract, config.stopwords, collect);
    }
  });

  std::map<std::string, std::uint32_t> df;
  for (const auto& phrases : per_record) {
    for (const auto& p : phrases) ++df[p];
  }
  std::erase_if(df, [min_df](const auto& entry) { return entry.second < min_df; });
  return TermVocabulary(std::move(df), min_df);
}

}  // namespace resonance
