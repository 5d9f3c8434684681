#include "resonance/projection.hpp"

#include <climits>
#include <cmath>

#include "resonance/error.hpp"
#include "resonance/parallel.hpp"

namespace resonance {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer.
constexpr std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t ColumnBase(std::uint64_t column_hash, std::uint64_t seed) {
  return Mix(column_hash ^ Mix(seed + kGolden));
}

constexpr std::uint64_t SignWord(std::uint64_t base, std::uint32_t block) {
  return Mix(base + (static_cast<std::uint64_t>(block) + 1) * kGolden);
}

}  // namespace

void Validate(const ProjectionSpec& spec) {
  if (spec.dims < 2) {
    throw InvalidArgument("projection dims must be at least 2, got " +
                          std::to_string(spec.dims));
  }
  if (spec.scheme != ProjectionScheme::kDensePlusMinusOne) {
    throw InvalidArgument("unsupported projection scheme");
  }
}

int ProjectionSign(std::uint64_t column_hash, std::uint32_t j, const ProjectionSpec& spec) {
  const std::uint64_t word = SignWord(ColumnBase(column_hash, spec.seed), j / 64);
  return ((word >> (j % 64)) & 1u) ? 1 : -1;
}

void ColumnSigns(std::uint64_t column_hash, const ProjectionSpec& spec,
                 std::span<std::int8_t> signs) {
  const std::uint64_t base = ColumnBase(column_hash, spec.seed);
  const std::uint32_t dims = static_cast<std::uint32_t>(signs.size());
  for (std::uint32_t block = 0; block * 64 < dims; ++block) {
    std::uint64_t word = SignWord(base, block);
    const std::uint32_t end = std::min(dims, (block + 1) * 64);
    for (std::uint32_t j = block * 64; j < end; ++j, word >>= 1) {
      signs[j] = (word & 1u) ? std::int8_t{1} : std::int8_t{-1};
    }
  }
}

std::vector<std::int64_t> ProjectRowExact(std::span<const SparseEntry> row,
                                          const ProjectionSpec& spec) {
  Validate(spec);
  std::vector<std::int64_t> out(spec.dims, 0);
  std::vector<std::int8_t> signs(spec.dims);
  for (const SparseEntry& e : row) {
    ColumnSigns(e.column_hash, spec, signs);
    const auto count = static_cast<std::int64_t>(e.count);
    for (std::uint32_t j = 0; j < spec.dims; ++j) out[j] += count * signs[j];
  }
  return out;
}

std::vector<float> ProjectMatrix(const CooccurrenceMatrix& matrix, const ProjectionSpec& spec,
                                 CellWeighting weighting) {
  Validate(spec);
  const std::size_t dims = spec.dims;
  const std::size_t cols = matrix.col_count();

  // One sign row per column; above the cap signs are derived per cell instead.
  constexpr std::size_t kSignTableCap = std::size_t{1} << 30;
  const bool tabled = cols * dims <= kSignTableCap;
  std::vector<std::uint64_t> col_hash(cols);
  for (std::size_t c = 0; c < cols; ++c) col_hash[c] = StableHash(matrix.cols()[c]);
  std::vector<std::int8_t> table;
  if (tabled) {
    table.resize(cols * dims);
    ParallelFor(cols, [&](std::size_t begin, std::size_t end) {
      for (std::size_t c = begin; c < end; ++c) {
        ColumnSigns(col_hash[c], spec, std::span<std::int8_t>(table.data() + c * dims, dims));
      }
    });
  }

  std::vector<float> out(matrix.row_count() * dims, 0.0f);
  ParallelFor(matrix.row_count(), [&](std::size_t begin, std::size_t end) {
    std::vector<std::int8_t> scratch(tabled ? 0 : dims);
    auto signs_of = [&](std::uint32_t col) -> const std::int8_t* {
      if (tabled) return table.data() + static_cast<std::size_t>(col) * dims;
      ColumnSigns(col_hash[col], spec, scratch);
      return scratch.data();
    };
    std::vector<std::int32_t> narrow(dims);
    std::vector<std::int64_t> exact(dims);
    std::vector<double> weighted(dims);
    for (std::size_t r = begin; r < end; ++r) {
      float* dst = out.data() + r * dims;
      const auto row = matrix.row(r);
      if (weighting == CellWeighting::kRaw) {
        std::uint64_t total = 0;
        for (const auto& cell : row) total += cell.count;
        if (total <= static_cast<std::uint64_t>(INT32_MAX)) {
          std::fill(narrow.begin(), narrow.end(), 0);
          for (const auto& cell : row) {
            const std::int8_t* signs = signs_of(cell.col);
            const auto count = static_cast<std::int32_t>(cell.count);
            for (std::size_t j = 0; j < dims; ++j) narrow[j] += count * signs[j];
          }
          for (std::size_t j = 0; j < dims; ++j) dst[j] = static_cast<float>(narrow[j]);
        } else {
          std::fill(exact.begin(), exact.end(), 0);
          for (const auto& cell : row) {
            const std::int8_t* signs = signs_of(cell.col);
            const auto count = static_cast<std::int64_t>(cell.count);
            for (std::size_t j = 0; j < dims; ++j) exact[j] += count * signs[j];
          }
          for (std::size_t j = 0; j < dims; ++j) dst[j] = static_cast<float>(exact[j]);
        }
      } else {
        std::fill(weighted.begin(), weighted.end(), 0.0);
        for (const auto& cell : row) {
          const std::int8_t* signs = signs_of(cell.col);
          const double w = std::log1p(static_cast<double>(cell.count));
          for (std::size_t j = 0; j < dims; ++j) weighted[j] += w * signs[j];
        }
        for (std::size_t j = 0; j < dims; ++j) dst[j] = static_cast<float>(weighted[j]);
      }
    }
  });
  return out;
}

}  // namespace resonance
