#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace resonance {

/// Entity kinds, in tie-break order.
enum class EntityKind : std::uint8_t {
  kTerm = 0,
  kSubject = 1,
  kAuthor = 2,
  kJournal = 3,
  kCluster = 4,
};

inline constexpr std::array<EntityKind, 5> kAllKinds = {
    EntityKind::kTerm, EntityKind::kSubject, EntityKind::kAuthor,
    EntityKind::kJournal, EntityKind::kCluster};

/// Name used in responses and type filters: term, subject, author, journal,
/// cluster.
std::string_view KindName(EntityKind kind) noexcept;

/// Prefix used inside `[prefix:key]` selectors. Journals use `issn`.
std::string_view KindPrefix(EntityKind kind) noexcept;

/// Accepts both the kind name and the selector prefix (`journal`, `issn`).
std::optional<EntityKind> ParseKind(std::string_view text) noexcept;

/// Bit set of entity kinds used for result filtering.
class KindSet {
 public:
  constexpr KindSet() = default;

  static constexpr KindSet All() {
    KindSet s;
    s.bits_ = 0x1F;
    return s;
  }
  static constexpr KindSet Of(EntityKind kind) {
    KindSet s;
    s.insert(kind);
    return s;
  }

  constexpr void insert(EntityKind kind) {
    bits_ |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(kind));
  }
  constexpr bool contains(EntityKind kind) const {
    return (bits_ >> static_cast<unsigned>(kind)) & 1u;
  }
  constexpr bool empty() const { return bits_ == 0; }

  friend constexpr bool operator==(KindSet, KindSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Typed entity identity. `key` is canonical: lowercase, whitespace
/// collapsed, no kind prefix (a journal key is the bare ISSN, a cluster key is
/// "<solution> <cluster>").
struct EntityId {
  EntityKind kind = EntityKind::kTerm;
  std::string key;

  friend auto operator<=>(const EntityId&, const EntityId&) = default;
  friend bool operator==(const EntityId&, const EntityId&) = default;
};

/// `[author:smak j]` style selector text. Terms print as `[term:...]`.
std::string ToSelector(const EntityId& id);

/// `author:smak j`, or the bare phrase for a term.
std::string ToDisplayKey(const EntityId& id);

/// Lowercases ASCII, collapses runs of whitespace to one space, trims.
std::string NormalizeKey(std::string_view text);

/// Builds a cluster-label entity for `cluster_id` of solution `solution_id`.
EntityId ClusterEntity(std::string_view solution_id, std::string_view cluster_id);

/// Solution id of a cluster entity key ("a 19" -> "a").
std::string_view ClusterSolutionOf(std::string_view cluster_key) noexcept;

/// Stable 64-bit FNV-1a hash of kind and key. Identical on every platform.
std::uint64_t StableHash(const EntityId& id) noexcept;

struct EntityIdHash {
  std::size_t operator()(const EntityId& id) const noexcept {
    return static_cast<std::size_t>(StableHash(id));
  }
};

}  // namespace resonance
