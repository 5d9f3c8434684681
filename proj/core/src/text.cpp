#include "resonance/text.hpp"

#include <cctype>
#include <fstream>

#include "resonance/error.hpp"

namespace resonance {
namespace {

bool IsWordByte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

bool IsSentenceEnd(char c) { return c == '.' || c == '?' || c == '!'; }

bool Keep(const std::string& token) {
  if (token.size() < 2) return false;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-') return true;
  }
  return false;
}

}  // namespace

std::vector<Sentence> Tokenize(std::string_view text) {
  std::vector<Sentence> sentences(1);
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    sentences.back().push_back(Keep(current) ? current : std::string());
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (IsWordByte(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
      continue;
    }
    if (c == '-' && !current.empty() && i + 1 < text.size() &&
        IsWordByte(static_cast<unsigned char>(text[i + 1]))) {
      current.push_back('-');
      continue;
    }
    flush();
    if (IsSentenceEnd(static_cast<char>(c)) && !sentences.back().empty()) {
      sentences.emplace_back();
    }
  }
  flush();
  if (sentences.back().empty()) sentences.pop_back();
  return sentences;
}

const StopwordSet& DefaultStopwords() {
  static const StopwordSet words = {
      "a",       "about",   "above",   "after",   "again",   "against", "all",
      "also",    "although", "am",     "among",   "an",      "and",     "any",
      "are",     "as",      "at",      "be",      "because", "been",    "before",
      "being",   "below",   "between", "both",    "but",     "by",      "can",
      "could",   "did",     "do",      "does",    "doing",   "down",    "due",
      "during",  "each",    "either",  "et",      "etc",     "few",     "for",
      "from",    "further", "had",     "has",     "have",    "having",  "he",
      "her",     "here",    "hers",    "herself", "him",     "himself", "his",
      "how",     "however", "i",       "if",      "in",      "into",    "is",
      "it",      "its",     "itself",  "may",     "me",      "might",   "more",
      "most",    "much",    "must",    "my",      "myself",  "no",      "nor",
      "not",     "now",     "of",      "off",     "on",      "once",    "one",
      "only",    "or",      "other",   "our",     "ours",    "ourselves", "out",
      "over",    "own",     "per",     "same",    "shall",   "she",     "should",
      "since",   "so",      "some",    "such",    "than",    "that",    "the",
      "their",   "theirs",  "them",    "themselves", "then", "there",   "therefore",
      "these",   "they",    "this",    "those",   "through", "thus",    "to",
      "too",     "two",     "under",   "until",   "up",      "upon",    "us",
      "very",    "via",     "was",     "we",      "were",    "what",    "when",
      "where",   "whether", "which",   "while",   "who",     "whom",    "why",
      "will",    "with",    "within",  "without", "would",   "yet",     "you",
      "your",    "yours",   "yourself", "yourselves",
  };
  return words;
}

StopwordSet LoadStopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open stopword file " + path.string());
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    std::string word = line.substr(begin, end - begin + 1);
    for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    words.insert(std::move(word));
  }
  return words;
}

void ForEachCandidatePhrase(std::string_view text, const StopwordSet& stopwords,
                            const std::function<void(const std::string&)>& emit) {
  for (const Sentence& sentence : Tokenize(text)) {
    const std::string* previous = nullptr;
    for (const std::string& token : sentence) {
      if (token.empty() || stopwords.contains(token)) {
        previous = nullptr;
        continue;
      }
      emit(token);
      if (previous != nullptr) emit(*previous + ' ' + token);
      previous = &token;
    }
  }
}

}  // namespace resonance
