#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "resonance/article_entities.hpp"
#include "resonance/entity.hpp"

namespace resonance {

struct CooccurrenceCell {
  std::uint32_t col = 0;
  std::uint64_t count = 0;

  friend bool operator==(const CooccurrenceCell&, const CooccurrenceCell&) = default;
};

/// Sparse entity x (term | subject) co-occurrence counts.
///
/// Rows hold every entity of the corpus, columns only terms and subjects, both
/// sorted by (kind, key). A cell sums, over all articles, the product of the
/// row entity's and the column entity's multiplicities in that article. A
/// term or subject pairs with itself, so its row has a diagonal entry.
class CooccurrenceMatrix {
 public:
  CooccurrenceMatrix() = default;
  CooccurrenceMatrix(std::vector<EntityId> rows, std::vector<EntityId> cols,
                     std::vector<std::uint64_t> row_offsets,
                     std::vector<CooccurrenceCell> cells,
                     std::vector<std::uint64_t> occurrence_counts);

  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t col_count() const noexcept { return cols_.size(); }
  std::size_t nonzeros() const noexcept { return cells_.size(); }

  const std::vector<EntityId>& rows() const noexcept { return rows_; }
  const std::vector<EntityId>& cols() const noexcept { return cols_; }

  /// Non-zero cells of row `r`, ordered by column.
  std::span<const CooccurrenceCell> row(std::size_t r) const;

  /// Sum of the entity's per-article multiplicities over the corpus.
  std::uint64_t occurrence_count(std::size_t r) const { return occurrences_[r]; }

  std::optional<std::size_t> find_row(const EntityId& id) const;
  std::optional<std::size_t> find_col(const EntityId& id) const;

  /// Cell value, 0 when absent or when either entity is unknown.
  std::uint64_t at(const EntityId& row_id, const EntityId& col_id) const;

 private:
  std::vector<EntityId> rows_;
  std::vector<EntityId> cols_;
  std::vector<std::uint64_t> offsets_;
  std::vector<CooccurrenceCell> cells_;
  std::vector<std::uint64_t> occurrences_;
};

inline bool IsColumnKind(EntityKind kind) {
  return kind == EntityKind::kTerm || kind == EntityKind::kSubject;
}

CooccurrenceMatrix BuildCooccurrence(std::span<const ArticleEntities> articles);

}  // namespace resonance
