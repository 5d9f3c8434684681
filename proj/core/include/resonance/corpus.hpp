#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace resonance {

/// One bibliographic record. Author names and subjects are kept as given;
/// canonicalization happens at entity extraction.
struct BibRecord {
  std::string article_id;
  std::string title;
  std::string abstract;
  std::vector<std::string> authors;
  std::string issn;
  std::string journal_title;
  std::vector<std::string> subjects;
};

struct LineError {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct ParseResult {
  std::vector<BibRecord> records;
  std::vector<LineError> errors;
};

/// Reads line-delimited JSON records with keys `id`, `title`, `abstract`,
/// `authors`, `issn`, `journal`, `subjects`. Blank lines are ignored.
/// Lines that violate the schema (missing id, no text, duplicate id, wrong
/// field types) are skipped and reported; record order is preserved.
ParseResult ParseRecords(std::istream& in);

/// Throws FormatError when the file cannot be opened.
ParseResult ParseRecordsFile(const std::filesystem::path& path);

/// Serializes one record to a single line in the corpus format.
std::string FormatRecord(const BibRecord& record);

}  // namespace resonance
