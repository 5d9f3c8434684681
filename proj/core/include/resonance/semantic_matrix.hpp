#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "resonance/entity.hpp"
#include "resonance/projection.hpp"

namespace resonance {

struct EntityRecord {
  EntityId id;
  std::string label;         // display label; journal title for journals
  std::uint64_t count = 0;   // corpus occurrence count

  friend bool operator==(const EntityRecord&, const EntityRecord&) = default;
};

struct SolutionInfo {
  std::string solution_id;
  std::string source_name;
  std::uint32_t cluster_count = 0;

  friend bool operator==(const SolutionInfo&, const SolutionInfo&) = default;
};

/// Dense entity x dims matrix, one semantic vector per entity. Entities are
/// sorted by (kind, key) and the matrix is immutable after construction, so
/// it can be shared freely between threads.
class SemanticMatrix {
 public:
  SemanticMatrix() = default;

  /// `vectors` is row-major, entities.size() x spec.dims. Throws
  /// InvalidArgument on shape mismatch, unsorted entities or non-finite
  /// values.
  SemanticMatrix(ProjectionSpec spec, CellWeighting weighting,
                 std::vector<EntityRecord> entities, std::vector<float> vectors,
                 std::vector<SolutionInfo> solutions);

  std::size_t size() const noexcept { return entities_.size(); }
  std::uint32_t dims() const noexcept { return spec_.dims; }
  const ProjectionSpec& projection() const noexcept { return spec_; }
  CellWeighting weighting() const noexcept { return weighting_; }

  const EntityRecord& entity(std::size_t row) const { return entities_[row]; }
  const std::vector<EntityRecord>& entities() const noexcept { return entities_; }
  std::span<const float> vector(std::size_t row) const {
    return std::span<const float>(vectors_).subspan(row * spec_.dims, spec_.dims);
  }
  std::span<const float> data() const noexcept { return vectors_; }

  /// Euclidean norm of a row, computed once at construction.
  double norm(std::size_t row) const { return norms_[row]; }

  std::optional<std::size_t> find(const EntityId& id) const;

  /// Rows [first, last) holding entities of `kind`.
  std::pair<std::size_t, std::size_t> kind_range(EntityKind kind) const;

  /// Rows of every cluster entity belonging to `solution_id`, in key order.
  std::vector<std::size_t> cluster_rows(std::string_view solution_id) const;

  const std::vector<SolutionInfo>& solutions() const noexcept { return solutions_; }
  const SolutionInfo* find_solution(std::string_view solution_id) const;

  friend bool operator==(const SemanticMatrix& a, const SemanticMatrix& b) {
    return a.spec_ == b.spec_ && a.weighting_ == b.weighting_ &&
           a.entities_ == b.entities_ && a.vectors_ == b.vectors_ &&
           a.solutions_ == b.solutions_;
  }

 private:
  ProjectionSpec spec_;
  CellWeighting weighting_ = CellWeighting::kRaw;
  std::vector<EntityRecord> entities_;
  std::vector<float> vectors_;
  std::vector<double> norms_;
  std::vector<SolutionInfo> solutions_;
};

/// Binary index format, little-endian:
///   magic "RSNIDX\r\n", u32 version, u32 dims, u64 seed, u8 scheme,
///   u8 weighting, u64 entity count, entity dictionary (u8 kind, string key,
///   string label, u64 count), u32 solution count, solutions (string id,
///   string source, u32 clusters), then row-major float32 vectors.
/// Strings are u32 length + bytes.
inline constexpr std::uint32_t kIndexFormatVersion = 1;

void SaveIndex(const SemanticMatrix& matrix, std::ostream& out);
void SaveIndex(const SemanticMatrix& matrix, const std::filesystem::path& path);

/// Throws FormatError on a bad magic header, unsupported version, truncated
/// or oversized payload.
SemanticMatrix LoadIndex(std::istream& in);
SemanticMatrix LoadIndex(const std::filesystem::path& path);

}  // namespace resonance
