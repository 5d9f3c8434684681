#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "resonance/corpus.hpp"
#include "resonance/text.hpp"

namespace resonance {

inline constexpr std::size_t kMaxPhraseLength = 2;

struct ExtractionConfig {
  /// Minimum document frequency. Unset means DefaultMinDf(corpus size).
  std::optional<std::uint32_t> min_df;
  StopwordSet stopwords = DefaultStopwords();
};

/// 5 for corpora of at least 10,000 records, 2 below.
std::uint32_t DefaultMinDf(std::size_t corpus_size) noexcept;

/// Frequent unigrams and bigrams from titles and abstracts.
class TermVocabulary {
 public:
  TermVocabulary() = default;
  TermVocabulary(std::map<std::string, std::uint32_t> document_frequency,
                 std::uint32_t min_df)
      : df_(std::move(document_frequency)), min_df_(min_df) {}

  bool contains(const std::string& phrase) const { return df_.contains(phrase); }
  std::uint32_t document_frequency(const std::string& phrase) const;
  std::size_t size() const noexcept { return df_.size(); }
  bool empty() const noexcept { return df_.empty(); }
  std::uint32_t min_df() const noexcept { return min_df_; }
  const std::map<std::string, std::uint32_t>& entries() const noexcept { return df_; }

 private:
  std::map<std::string, std::uint32_t> df_;
  std::uint32_t min_df_ = 1;
};

/// Counts, per phrase, the number of records whose title or abstract yields
/// it as a candidate, then keeps phrases with count >= min_df. Title and
/// abstract are tokenized separately so no bigram spans the two fields.
TermVocabulary ExtractTopicalTerms(std::span<const BibRecord> corpus,
                                   const ExtractionConfig& config);

}  // namespace resonance
