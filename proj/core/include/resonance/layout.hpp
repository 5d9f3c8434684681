#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace resonance {

struct Point {
  double x = 0.5;
  double y = 0.5;

  friend bool operator==(const Point&, const Point&) = default;
};

inline constexpr double kMinSeparation = 0.01;
inline constexpr std::uint64_t kDefaultLayoutSeed = 7;

struct LayoutOptions {
  std::uint64_t seed = kDefaultLayoutSeed;
  std::size_t max_iterations = 400;
  double margin = 0.05;
  double min_separation = kMinSeparation;
};

/// Places n nodes in the unit square so that pairs with higher cosine sit
/// closer, by stress-majorization (SMACOF) on the dissimilarity 1 - cosine
/// from a seeded random start. `cosine` is a row-major n x n matrix. The
/// result is a pure function of (cosine, options); a single node sits at
/// (0.5, 0.5).
std::vector<Point> LayoutNetwork(std::span<const double> cosine, std::size_t n,
                                 const LayoutOptions& options = {});

/// Raw Kruskal stress of `points` against the dissimilarities 1 - cosine.
double LayoutStress(std::span<const double> cosine, std::span<const Point> points);

}  // namespace resonance
