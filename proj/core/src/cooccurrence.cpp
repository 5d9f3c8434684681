#include "resonance/cooccurrence.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "resonance/parallel.hpp"

namespace resonance {
namespace {

template <typename T>
std::optional<std::size_t> SortedFind(const std::vector<T>& v, const T& x) {
  const auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

struct Posting {
  std::uint32_t article = 0;
  std::uint32_t multiplicity = 0;
};

}  // namespace

CooccurrenceMatrix::CooccurrenceMatrix(std::vector<EntityId> rows, std::vector<EntityId> cols,
                                       std::vector<std::uint64_t> row_offsets,
                                       std::vector<CooccurrenceCell> cells,
                                       std::vector<std::uint64_t> occurrence_counts)
    : rows_(std::move(rows)),
      cols_(std::move(cols)),
      offsets_(std::move(row_offsets)),
      cells_(std::move(cells)),
      occurrences_(std::move(occurrence_counts)) {}

std::span<const CooccurrenceCell> CooccurrenceMatrix::row(std::size_t r) const {
  return std::span<const CooccurrenceCell>(cells_).subspan(
      offsets_[r], offsets_[r + 1] - offsets_[r]);
}

std::optional<std::size_t> CooccurrenceMatrix::find_row(const EntityId& id) const {
  return SortedFind(rows_, id);
}

std::optional<std::size_t> CooccurrenceMatrix::find_col(const EntityId& id) const {
  return SortedFind(cols_, id);
}

std::uint64_t CooccurrenceMatrix::at(const EntityId& row_id, const EntityId& col_id) const {
  const auto r = find_row(row_id);
  const auto c = find_col(col_id);
  if (!r || !c) return 0;
  const auto cells = row(*r);
  const auto it = std::lower_bound(
      cells.begin(), cells.end(), static_cast<std::uint32_t>(*c),
      [](const CooccurrenceCell& cell, std::uint32_t col) { return cell.col < col; });
  return (it != cells.end() && it->col == *c) ? it->count : 0;
}

CooccurrenceMatrix BuildCooccurrence(std::span<const ArticleEntities> articles) {
  std::set<EntityId> distinct;
  for (const auto& a : articles) {
    for (const auto& occ : a.entities) distinct.insert(occ.id);
  }
  std::vector<EntityId> rows(distinct.begin(), distinct.end());
  std::vector<EntityId> cols;
  for (const auto& id : rows) {
    if (IsColumnKind(id.kind)) cols.push_back(id);
  }

  std::unordered_map<EntityId, std::uint32_t, EntityIdHash> row_of;
  std::unordered_map<EntityId, std::uint32_t, EntityIdHash> col_of;
  row_of.reserve(rows.size());
  col_of.reserve(cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], static_cast<std::uint32_t>(i));
  for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], static_cast<std::uint32_t>(i));

  // Article -> column cells, and row -> article postings.
  std::vector<std::vector<CooccurrenceCell>> article_cols(articles.size());
  std::vector<std::vector<Posting>> postings(rows.size());
  std::vector<std::uint64_t> occurrences(rows.size(), 0);
  for (std::size_t a = 0; a < articles.size(); ++a) {
    for (const auto& occ : articles[a].entities) {
      const std::uint32_t r = row_of.at(occ.id);
      postings[r].push_back({static_cast<std::uint32_t>(a), occ.multiplicity});
      occurrences[r] += occ.multiplicity;
      if (IsColumnKind(occ.id.kind)) {
        article_cols[a].push_back({col_of.at(occ.id), occ.multiplicity});
      }
    }
  }

  std::vector<std::vector<CooccurrenceCell>> row_cells(rows.size());
  ParallelFor(rows.size(), [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint64_t> scratch(cols.size(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t r = begin; r < end; ++r) {
      touched.clear();
      for (const Posting& p : postings[r]) {
        for (const CooccurrenceCell& c : article_cols[p.article]) {
          if (scratch[c.col] == 0) touched.push_back(c.col);
          scratch[c.col] += static_cast<std::uint64_t>(p.multiplicity) * c.count;
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& out = row_cells[r];
      out.reserve(touched.size());
      for (std::uint32_t col : touched) {
        out.push_back({col, scratch[col]});
        scratch[col] = 0;
      }
    }
  });

  std::vector<std::uint64_t> offsets(rows.size() + 1, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) offsets[r + 1] = offsets[r] + row_cells[r].size();
  std::vector<CooccurrenceCell> cells;
  cells.reserve(offsets.back());
  for (auto& rc : row_cells) cells.insert(cells.end(), rc.begin(), rc.end());

  return CooccurrenceMatrix(std::move(rows), std::move(cols), std::move(offsets),
                            std::move(cells), std::move(occurrences));
}

}  // namespace resonance
