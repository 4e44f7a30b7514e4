#pragma once

// Bruhat interval polytopes and exact intersection of convex hulls.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opplab/coxeter.hpp"
#include "opplab/opposition.hpp"
#include "opplab/rational.hpp"

namespace opplab {

using Point = std::vector<Rational>;

struct PointSet {
  int dim = 0;
  std::vector<Point> points;

  PointSet() = default;
  PointSet(int dim_, std::vector<Point> points_) : dim(dim_), points(std::move(points_)) {
    if (points.empty()) throw InputError("point set must be nonempty");
    for (const auto& p : points)
      if (static_cast<int>(p.size()) != dim) throw InputError("point set has points of mixed dimension");
  }

  static PointSet of_integers(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw InputError("point set must be nonempty");
    std::vector<Point> points;
    for (const auto& row : rows) points.emplace_back(row.begin(), row.end());
    return PointSet(static_cast<int>(rows.front().size()), std::move(points));
  }
};

/// {(x^{-1}(1), ..., x^{-1}(n)) : x in [v, w]}.
inline PointSet bip_vertices(const BruhatInterval& interval) {
  std::vector<std::vector<int>> rows;
  for (const auto& x : interval_elements(interval)) rows.push_back(x.inverse().image());
  return PointSet::of_integers(rows);
}

namespace detail {

inline std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t numerator = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / numerator) return std::numeric_limits<std::uint64_t>::max();
    result = result * numerator / i;
  }
  return result;
}

/// Phase I of the simplex method with Bland's rule on A x = b, x >= 0, b >= 0.
/// Returns a feasible x or nothing.
inline std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& a,
                                                            const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  const std::size_t width = n + m;
  // Tableau rows hold [A | I | b]; artificial variable n + i starts basic in row i.
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) throw InvariantViolation("feasible_point: negative right-hand side");
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width] = b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the objective "sum of artificials".
  std::vector<Rational> cost(width + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= width; ++j)
      if (j < n || j == width) cost[j] -= t[i][j];

  const std::uint64_t bound = saturating_binomial(width, m);
  for (std::uint64_t iteration = 0;; ++iteration) {
    if (iteration > bound) throw InvariantViolation("simplex exceeded its iteration bound");
    std::size_t entering = width;
    for (std::size_t j = 0; j < width; ++j)
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    if (entering == width) break;
    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][entering] <= 0) continue;
      const Rational ratio = t[i][width] / t[i][entering];
      if (leaving == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving == m) throw InvariantViolation("phase I objective is unbounded");
    const Rational pivot = t[leaving][entering];
    for (auto& entry : t[leaving]) entry /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leaving || t[i][entering] == 0) continue;
      const Rational factor = t[i][entering];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= factor * t[leaving][j];
    }
    if (cost[entering] != 0) {
      const Rational factor = cost[entering];
      for (std::size_t j = 0; j <= width; ++j) cost[j] -= factor * t[leaving][j];
    }
    basis[leaving] = entering;
  }
  if (cost[width] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width];
  return x;
}

}  // namespace detail

/// A common point of conv(P) and conv(Q), if there is one.
inline std::optional<Point> hull_intersection(const PointSet& p, const PointSet& q) {
  if (p.dim != q.dim) throw InputError("hulls_intersect: point sets of different dimension");
  for (const auto& x : p.points)
    if (std::find(q.points.begin(), q.points.end(), x) != q.points.end()) return x;
  for (int c = 0; c < p.dim; ++c) {
    const auto coordinate = [c](const Point& x, const Point& y) { return x[static_cast<std::size_t>(c)] < y[static_cast<std::size_t>(c)]; };
    const auto [p_lo, p_hi] = std::minmax_element(p.points.begin(), p.points.end(), coordinate);
    const auto [q_lo, q_hi] = std::minmax_element(q.points.begin(), q.points.end(), coordinate);
    const auto cc = static_cast<std::size_t>(c);
    if ((*p_hi)[cc] < (*q_lo)[cc] || (*q_hi)[cc] < (*p_lo)[cc]) return std::nullopt;
  }
  // Variables lambda (one per point of P) then mu (one per point of Q).
  const std::size_t np = p.points.size();
  const std::size_t nq = q.points.size();
  const auto dim = static_cast<std::size_t>(p.dim);
  std::vector<std::vector<Rational>> a(dim + 2, std::vector<Rational>(np + nq));
  std::vector<Rational> b(dim + 2);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t i = 0; i < np; ++i) a[c][i] = p.points[i][c];
    for (std::size_t j = 0; j < nq; ++j) a[c][np + j] = -q.points[j][c];
  }
  for (std::size_t i = 0; i < np; ++i) a[dim][i] = 1;
  for (std::size_t j = 0; j < nq; ++j) a[dim + 1][np + j] = 1;
  b[dim] = 1;
  b[dim + 1] = 1;
  const auto x = detail::feasible_point(a, b);
  if (!x) return std::nullopt;
  Point witness(dim);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t c = 0; c < dim; ++c) witness[c] += (*x)[i] * p.points[i][c];
  return witness;
}

inline bool hulls_intersect(const PointSet& p, const PointSet& q) { return hull_intersection(p, q).has_value(); }

/// Opposed intervals have intersecting polytopes; true means no counterexample.
inline bool check_bip_theorem(const BruhatInterval& a, const BruhatInterval& b) {
  return !opposed_intervals(a, b) || hulls_intersect(bip_vertices(a), bip_vertices(b));
}

}  // namespace opplab
