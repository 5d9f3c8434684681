#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "resonance/cooccurrence.hpp"

namespace resonance {

enum class ProjectionScheme : std::uint8_t { kDensePlusMinusOne = 0 };

/// How co-occurrence counts enter the projection.
enum class CellWeighting : std::uint8_t {
  kRaw = 0,    // counts as-is
  kLog1p = 1,  // log(1 + count)
};

inline constexpr std::uint32_t kDefaultDims = 600;
inline constexpr std::uint64_t kDefaultSeed = 20150629;

struct ProjectionSpec {
  std::uint32_t dims = kDefaultDims;
  std::uint64_t seed = kDefaultSeed;
  ProjectionScheme scheme = ProjectionScheme::kDensePlusMinusOne;

  friend bool operator==(const ProjectionSpec&, const ProjectionSpec&) = default;
};

/// Throws InvalidArgument when dims < 2.
void Validate(const ProjectionSpec& spec);

/// Entry (c, j) of the implicit random matrix for the column whose stable
/// hash is `column_hash`. A pure function of (column_hash, j, seed).
int ProjectionSign(std::uint64_t column_hash, std::uint32_t j, const ProjectionSpec& spec);

/// Fills `signs[j]` with ProjectionSign(column_hash, j, spec) for all j in
/// [0, spec.dims), generating 64 entries per hash evaluation.
void ColumnSigns(std::uint64_t column_hash, const ProjectionSpec& spec,
                 std::span<std::int8_t> signs);

/// A sparse row addressed by column hash rather than column index, so rows
/// from different matrices project consistently.
struct SparseEntry {
  std::uint64_t column_hash = 0;
  std::uint64_t count = 0;
};

/// Exact integer image of one sparse row: out[j] = sum_c count_c * sign(c, j).
std::vector<std::int64_t> ProjectRowExact(std::span<const SparseEntry> row,
                                          const ProjectionSpec& spec);

/// Projects every row of `matrix` into a row-major float matrix of
/// row_count x dims. With kRaw the accumulation is exact in 64-bit integers
/// before the final conversion. Rows are processed in parallel; the output
/// does not depend on the worker count.
std::vector<float> ProjectMatrix(const CooccurrenceMatrix& matrix, const ProjectionSpec& spec,
                                 CellWeighting weighting = CellWeighting::kRaw);

}  // namespace resonance
