#include "resonance/query.hpp"

#include <algorithm>
#include <cctype>

#include "resonance/error.hpp"

namespace resonance {
namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

void AddFreeText(std::string_view text, std::vector<std::string>& out) {
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string phrase = NormalizeKey(text.substr(start, comma - start));
    if (!phrase.empty() && std::find(out.begin(), out.end(), phrase) == out.end()) {
      out.push_back(std::move(phrase));
    }
    start = comma + 1;
  }
}

[[noreturn]] void Malformed(const std::string& why, std::string_view fragment) {
  throw QueryError(QueryError::Reason::kMalformed,
                   why + ": '" + std::string(fragment) + "'");
}

}  // namespace

std::string UrlDecode(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      out.push_back(' ');
    } else if (c == '%' && i + 2 < text.size() && HexValue(text[i + 1]) >= 0 && HexValue(text[i + 2]) >= 0) {
      out.push_back(static_cast<char>(HexValue(text[i + 1]) * 16 + HexValue(text[i + 2])));
      i += 2;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

QueryExpression ParseQuery(std::string_view raw) {
  const std::string text = UrlDecode(raw);
  QueryExpression q;
  std::string free_text;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ']') Malformed("unbalanced ']'", text.substr(i, 16));
    if (c != '[') {
      free_text.push_back(c);
      ++i;
      continue;
    }
    const auto close = text.find(']', i + 1);
    const auto nested = text.find('[', i + 1);
    if (close == std::string::npos || (nested != std::string::npos && nested < close)) {
      Malformed("unterminated '['", text.substr(i, close == std::string::npos ? 32 : close - i + 1));
    }
    const std::string_view group = std::string_view(text).substr(i, close - i + 1);
    const std::string_view inner = group.substr(1, group.size() - 2);
    const auto colon = inner.find(':');
    if (colon == std::string_view::npos) Malformed("selector needs kind:key", group);
    const auto kind = ParseKind(NormalizeKey(inner.substr(0, colon)));
    if (!kind) Malformed("unknown entity kind", group);
    std::string key = NormalizeKey(inner.substr(colon + 1));
    if (key.empty()) Malformed("empty selector key", group);

    if (*kind == EntityKind::kCluster && key.find(' ') == std::string::npos) {
      ClassSelector cs{EntityKind::kCluster, key};
      if (std::find(q.class_selectors.begin(), q.class_selectors.end(), cs) ==
          q.class_selectors.end()) {
        q.class_selectors.push_back(std::move(cs));
      }
    } else {
      EntityId id{*kind, std::move(key)};
      if (std::find(q.selectors.begin(), q.selectors.end(), id) == q.selectors.end()) {
        q.selectors.push_back(std::move(id));
      }
    }
    free_text.push_back(' ');
    i = close + 1;
  }
  AddFreeText(free_text, q.free_terms);
  if (q.empty()) throw QueryError(QueryError::Reason::kEmpty, "empty query");
  return q;
}

std::string EchoQuery(const QueryExpression& query) {
  std::string out;
  for (const auto& term : query.free_terms) {
    if (!out.empty()) out += ", ";
    out += term;
  }
  for (const auto& sel : query.selectors) {
    if (!out.empty()) out += ' ';
    out += ToSelector(sel);
  }
  for (const auto& cs : query.class_selectors) {
    if (!out.empty()) out += ' ';
    out += "[cluster:" + cs.solution_id + "]";
  }
  return out;
}

KindSet ParseKindList(std::string_view text) {
  KindSet set;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string name = NormalizeKey(text.substr(start, comma - start));
    if (!name.empty()) {
      const auto kind = ParseKind(name);
      if (!kind) throw InvalidArgument("unknown entity kind '" + name + "'");
      set.insert(*kind);
    }
    start = comma + 1;
  }
  return set.empty() ? KindSet::All() : set;
}

}  // namespace resonance
