#pragma once

#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace resonance {

/// A sentence as a sequence of token slots. An empty slot marks a token that
/// was dropped (single character, pure number); it breaks bigram adjacency.
using Sentence = std::vector<std::string>;

/// Lowercases and splits `text` into sentences on `.`, `?` and `!`, and
/// into tokens on any other non-alphanumeric byte. Hyphens survive only
/// between two word characters. Bytes >= 0x80 count as word characters so
/// UTF-8 letters stay inside their token.
std::vector<Sentence> Tokenize(std::string_view text);

using StopwordSet = std::set<std::string, std::less<>>;

/// Built-in English stopword list.
const StopwordSet& DefaultStopwords();

/// One word per line; `#` starts a comment. Throws FormatError.
StopwordSet LoadStopwords(const std::filesystem::path& path);

/// Calls `emit` for every candidate phrase in `text`, in order: each
/// non-stopword token as a unigram, and each adjacent pair of non-stopword
/// tokens within a sentence as a bigram ("mass transfer").
void ForEachCandidatePhrase(std::string_view text, const StopwordSet& stopwords,
                            const std::function<void(const std::string&)>& emit);

}  // namespace resonance
