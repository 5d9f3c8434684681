#include "resonance/corpus.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <unordered_set>

#include "resonance/error.hpp"

namespace resonance {
namespace {

using nlohmann::json;

std::string OptionalString(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return {};
  if (!it->is_string()) {
    throw FormatError(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> OptionalStringList(const json& obj, const char* key) {
  std::vector<std::string> out;
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw FormatError(std::string("field '") + key + "' must be a list of strings");
  }
  for (const auto& item : *it) {
    if (!item.is_string()) {
      throw FormatError(std::string("field '") + key + "' must be a list of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

ParseResult ParseRecords(std::istream& in) {
  ParseResult result;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    try {
      const json obj = json::parse(line);
      if (!obj.is_object()) throw FormatError("record must be an object");
      BibRecord rec;
      rec.article_id = OptionalString(obj, "id");
      if (rec.article_id.empty()) throw FormatError("missing article id");
      rec.title = OptionalString(obj, "title");
      rec.abstract = OptionalString(obj, "abstract");
      if (rec.title.empty() && rec.abstract.empty()) {
        throw FormatError("record has neither title nor abstract");
      }
      rec.authors = OptionalStringList(obj, "authors");
      rec.issn = OptionalString(obj, "issn");
      rec.journal_title = OptionalString(obj, "journal");
      rec.subjects = OptionalStringList(obj, "subjects");
      if (!seen.insert(rec.article_id).second) {
        throw FormatError("duplicate article id '" + rec.article_id + "'");
      }
      result.records.push_back(std::move(rec));
    } catch (const json::exception& e) {
      result.errors.push_back({line_no, std::string("invalid JSON: ") + e.what()});
    } catch (const FormatError& e) {
      result.errors.push_back({line_no, e.what()});
    }
  }
  if (in.bad()) throw FormatError("corpus stream is unreadable");
  return result;
}

ParseResult ParseRecordsFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open corpus file " + path.string());
  return ParseRecords(in);
}

std::string FormatRecord(const BibRecord& record) {
  json obj = {
      {"id", record.article_id},         {"title", record.title},
      {"abstract", record.abstract},     {"authors", record.authors},
      {"issn", record.issn},             {"journal", record.journal_title},
      {"subjects", record.subjects},
  };
  return obj.dump();
}

}  // namespace resonance
