#include "resonance/entity.hpp"

#include <cctype>

#include "resonance/error.hpp"

namespace resonance {

const char* ReasonCode(QueryError::Reason reason) noexcept {
  switch (reason) {
    case QueryError::Reason::kEmpty:
      return "empty_query";
    case QueryError::Reason::kMalformed:
      return "malformed_query";
    case QueryError::Reason::kNoResonance:
      return "no_resonance";
    case QueryError::Reason::kUnknownSolution:
      return "unknown_solution";
  }
  return "unknown";
}

std::string_view KindName(EntityKind kind) noexcept {
  switch (kind) {
    case EntityKind::kTerm:
      return "term";
    case EntityKind::kSubject:
      return "subject";
    case EntityKind::kAuthor:
      return "author";
    case EntityKind::kJournal:
      return "journal";
    case EntityKind::kCluster:
      return "cluster";
  }
  return "term";
}

std::string_view KindPrefix(EntityKind kind) noexcept {
  return kind == EntityKind::kJournal ? std::string_view("issn") : KindName(kind);
}

std::optional<EntityKind> ParseKind(std::string_view text) noexcept {
  for (EntityKind kind : kAllKinds) {
    if (text == KindName(kind) || text == KindPrefix(kind)) return kind;
  }
  return std::nullopt;
}

std::string NormalizeKey(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::string ToSelector(const EntityId& id) {
  std::string out = "[";
  out += KindPrefix(id.kind);
  out += ':';
  out += id.key;
  out += ']';
  return out;
}

std::string ToDisplayKey(const EntityId& id) {
  if (id.kind == EntityKind::kTerm) return id.key;
  std::string out(KindPrefix(id.kind));
  out += ':';
  out += id.key;
  return out;
}

EntityId ClusterEntity(std::string_view solution_id, std::string_view cluster_id) {
  std::string key(solution_id);
  key += ' ';
  key += cluster_id;
  return EntityId{EntityKind::kCluster, NormalizeKey(key)};
}

std::string_view ClusterSolutionOf(std::string_view cluster_key) noexcept {
  const auto space = cluster_key.find(' ');
  return space == std::string_view::npos ? cluster_key : cluster_key.substr(0, space);
}

std::uint64_t StableHash(const EntityId& id) noexcept {
  constexpr std::uint64_t kOffset = 14695981039346656037ull;
  constexpr std::uint64_t kPrime = 1099511628211ull;
  std::uint64_t h = kOffset;
  h ^= static_cast<std::uint64_t>(id.kind) + 1;
  h *= kPrime;
  for (char c : id.key) {
    h ^= static_cast<unsigned char>(c);
    h *= kPrime;
  }
  return h;
}

}  // namespace resonance
