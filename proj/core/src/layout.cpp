#include "resonance/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "resonance/error.hpp"
#include "resonance/random.hpp"

namespace resonance {
namespace {

double Dissimilarity(double cosine) { return std::clamp(1.0 - cosine, 0.0, 2.0); }

double Distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// One Guttman transform with unit weights: X <- B(X) X / n.
void GuttmanStep(std::span<const double> cosine, std::size_t n, std::vector<Point>& x) {
  std::vector<Point> next(n, Point{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    double bii = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = Distance(x[i], x[j]);
      if (d <= 1e-12) continue;
      const double bij = -Dissimilarity(cosine[i * n + j]) / d;
      next[i].x += bij * x[j].x;
      next[i].y += bij * x[j].y;
      bii -= bij;
    }
    next[i].x += bii * x[i].x;
    next[i].y += bii * x[i].y;
  }
  for (auto& p : next) {
    p.x /= static_cast<double>(n);
    p.y /= static_cast<double>(n);
  }
  x = std::move(next);
}

double RawStress(std::span<const double> cosine, std::size_t n, const std::vector<Point>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = Dissimilarity(cosine[i * n + j]) - Distance(x[i], x[j]);
      s += r * r;
    }
  }
  return s;
}

constexpr std::size_t kRandomStarts = 3;

// Runs Guttman steps until the stress stops falling; returns the final stress.
double Smacof(std::span<const double> cosine, std::size_t n, std::vector<Point>& x,
              std::size_t max_iterations) {
  double stress = RawStress(cosine, n, x);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    GuttmanStep(cosine, n, x);
    const double next = RawStress(cosine, n, x);
    const bool converged = stress - next <= 1e-10 * std::max(stress, 1e-30);
    stress = next;
    if (converged) break;
  }
  return stress;
}

// Torgerson start: top two eigenvectors of the double-centred squared
// dissimilarities, found by shifted power iteration with deflation.
std::vector<Point> ClassicalScaling(std::span<const double> cosine, std::size_t n, Rng& rng) {
  std::vector<double> b(n * n);
  std::vector<double> row_mean(n, 0.0);
  double all_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = i == j ? 0.0 : Dissimilarity(cosine[i * n + j]);
      b[i * n + j] = d * d;
      row_mean[i] += d * d / static_cast<double>(n);
    }
    all_mean += row_mean[i] / static_cast<double>(n);
  }
  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double abs_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      double& v = b[i * n + j];
      v = -0.5 * (v - row_mean[i] - row_mean[j] + all_mean);
      abs_sum += std::abs(v);
    }
    shift = std::max(shift, abs_sum);
  }

  std::vector<std::vector<double>> vecs;
  std::vector<double> vals;
  for (int component = 0; component < 2; ++component) {
    std::vector<double> v(n), w(n);
    for (auto& x : v) x = rng.uniform() - 0.5;
    double lambda = 0.0;
    for (int it = 0; it < 300; ++it) {
      for (const auto& u : vecs) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += u[i] * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
      }
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      if (norm < 1e-300) break;
      for (auto& x : v) x /= norm;
      for (std::size_t i = 0; i < n; ++i) {
        double s = shift * v[i];
        for (std::size_t j = 0; j < n; ++j) s += b[i * n + j] * v[j];
        w[i] = s;
      }
      lambda = 0.0;
      for (std::size_t i = 0; i < n; ++i) lambda += v[i] * w[i];
      v.swap(w);
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (auto& x : v) x = norm > 0.0 ? x / norm : 0.0;
    vecs.push_back(v);
    vals.push_back(std::max(lambda - shift, 0.0));
  }

  std::vector<Point> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i].x = vecs[0][i] * std::sqrt(vals[0]) + 1e-6 * (rng.uniform() - 0.5);
    x[i].y = vecs[1][i] * std::sqrt(vals[1]) + 1e-6 * (rng.uniform() - 0.5);
  }
  return x;
}

// Uniform scale and shift into [margin, 1 - margin]^2, centred.
void FitToSquare(std::vector<Point>& x, double margin) {
  double min_x = x[0].x, max_x = x[0].x, min_y = x[0].y, max_y = x[0].y;
  for (const auto& p : x) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double span = 1.0 - 2.0 * margin;
  const double scale = extent > 1e-12 ? span / extent : 0.0;
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);
  for (auto& p : x) {
    p.x = 0.5 + (p.x - cx) * scale;
    p.y = 0.5 + (p.y - cy) * scale;
  }
}

// Pushes apart pairs closer than `delta`; coincident pairs separate along a
// direction fixed by their indices.
void EnforceSeparation(std::vector<Point>& x, double delta) {
  const std::size_t n = x.size();
  const double target = delta * 1.001;
  for (int pass = 0; pass < 500; ++pass) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = x[j].x - x[i].x;
        double dy = x[j].y - x[i].y;
        double d = std::hypot(dx, dy);
        if (d >= target) continue;
        if (d < 1e-12) {
          const double angle = std::numbers::pi * (std::sqrt(5.0) - 1.0) * static_cast<double>(i * n + j);
          dx = std::cos(angle);
          dy = std::sin(angle);
          d = 0.0;
        } else {
          dx /= d;
          dy /= d;
        }
        const double push = 0.5 * (target - d) + 1e-9;
        x[i].x = std::clamp(x[i].x - dx * push, 0.0, 1.0);
        x[i].y = std::clamp(x[i].y - dy * push, 0.0, 1.0);
        x[j].x = std::clamp(x[j].x + dx * push, 0.0, 1.0);
        x[j].y = std::clamp(x[j].y + dy * push, 0.0, 1.0);
        moved = true;
      }
    }
    if (!moved) break;
  }
}

}  // namespace

std::vector<Point> LayoutNetwork(std::span<const double> cosine, std::size_t n,
                                 const LayoutOptions& options) {
  if (cosine.size() != n * n) throw InvalidArgument("layout: cosine matrix must be n x n");
  if (n == 0) return {};
  if (n == 1) return {Point{0.5, 0.5}};

  Rng rng(options.seed);
  std::vector<std::vector<Point>> starts;
  starts.push_back(ClassicalScaling(cosine, n, rng));
  for (std::size_t r = 0; r < kRandomStarts; ++r) {
    std::vector<Point> x(n);
    for (auto& p : x) p = Point{rng.uniform(), rng.uniform()};
    starts.push_back(std::move(x));
  }

  std::vector<Point> best;
  double best_stress = 0.0;
  for (auto& x : starts) {
    const double stress = Smacof(cosine, n, x, options.max_iterations);
    if (best.empty() || stress < best_stress) {
      best_stress = stress;
      best = std::move(x);
    }
  }

  FitToSquare(best, options.margin);
  EnforceSeparation(best, options.min_separation);
  return best;
}

double LayoutStress(std::span<const double> cosine, std::span<const Point> points) {
  const std::size_t n = points.size();
  double dd = 0.0, d2 = 0.0, delta2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double delta = Dissimilarity(cosine[i * n + j]);
      const double d = Distance(points[i], points[j]);
      dd += delta * d;
      d2 += d * d;
      delta2 += delta * delta;
    }
  }
  if (delta2 == 0.0) return 0.0;
  const double scale = d2 > 0.0 ? dd / d2 : 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = Dissimilarity(cosine[i * n + j]) - scale * Distance(points[i], points[j]);
      s += r * r;
    }
  }
  return s / delta2;
}

}  // namespace resonance
