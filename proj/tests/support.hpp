#pragma once

// Brute-force oracles and seeded generators for the test suites. Nothing here
// is used by the library itself.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "opplab/opplab.hpp"

namespace opplab::testing {

inline Permutation perm(const char* s) { return parse_permutation(s); }
inline BruhatInterval iv(const char* v, const char* w) { return BruhatInterval(perm(v), perm(w)); }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational rational(int max_abs = 9) {
    Rational q(uniform(-max_abs, max_abs), uniform(1, max_abs));
    q.canonicalize();
    return q;
  }

  Rational positive_rational(int max = 9) {
    Rational q(uniform(1, max), uniform(1, max));
    q.canonicalize();
    return q;
  }

  ExactMatrix matrix(int rows, int cols, int max_abs = 9) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rational(max_abs);
    return m;
  }

  ExactMatrix full_rank_matrix(int rows, int cols) {
    for (;;) {
      ExactMatrix m = matrix(rows, cols);
      if (rank(m) == std::min(rows, cols)) return m;
    }
  }

  /// Invertible upper triangular with nonzero diagonal.
  ExactMatrix upper_triangular(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      Rational d = 0;
      while (d == 0) d = rational();
      m.at(i, i) = d;
      for (int j = i + 1; j < n; ++j) m.at(i, j) = rational();
    }
    return m;
  }

  Permutation permutation(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
    for (int i = n - 1; i > 0; --i) std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(uniform(0, i))]);
    return Permutation(std::move(image));
  }

  std::vector<Rational> positive_params(int count) {
    std::vector<Rational> out;
    for (int i = 0; i < count; ++i) out.push_back(positive_rational());
    return out;
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

/// v <= w iff some subword of a reduced word of w is a reduced word of v.
inline bool subword_bruhat_leq(const Permutation& v, const Permutation& w) {
  const auto word = reduced_word(w);
  const int lv = length(v);
  const std::size_t l = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    if (__builtin_popcountll(mask) != lv) continue;
    std::vector<int> sub;
    for (std::size_t k = 0; k < l; ++k)
      if (mask >> k & 1) sub.push_back(word[k]);
    if (word_product(sub, v.size()) == v) return true;
  }
  return false;
}

/// Maximum of {v'w' : v' <= v, w' <= w}.
inline Permutation brute_demazure(const Permutation& v, const Permutation& w) {
  std::vector<Permutation> products;
  for (const auto& a : all_permutations(v.size()))
    if (subword_bruhat_leq(a, v))
      for (const auto& b : all_permutations(v.size()))
        if (subword_bruhat_leq(b, w)) products.push_back(a * b);
  for (const auto& m : products) {
    bool is_max = true;
    for (const auto& x : products)
      if (!subword_bruhat_leq(x, m)) {
        is_max = false;
        break;
      }
    if (is_max) return m;
  }
  throw std::logic_error("no maximum");
}

/// The subgroup generated by {s_i : i in J}.
inline std::vector<Permutation> parabolic_subgroup(const ParabolicType& j) {
  std::set<Permutation> seen{Permutation::identity(j.n())};
  std::vector<Permutation> frontier{Permutation::identity(j.n())};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (int i : j.simple()) {
        Permutation y = x * Permutation::simple(i, j.n());
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::set<Permutation> double_coset(const Permutation& u, const ParabolicType& j, const ParabolicType& j2) {
  std::set<Permutation> out;
  for (const auto& a : parabolic_subgroup(j))
    for (const auto& b : parabolic_subgroup(j2)) out.insert(a * u * b);
  return out;
}

inline Permutation brute_double_coset_min(const Permutation& u, const ParabolicType& j, const ParabolicType& j2) {
  const auto coset = double_coset(u, j, j2);
  return *std::min_element(coset.begin(), coset.end(),
                           [](const Permutation& a, const Permutation& b) { return length(a) < length(b); });
}

/// dim(F_i ∩ G_j) = #{a <= j : u(a) <= i}.
inline int rank_matrix_entry(const Permutation& u, int i, int j) {
  int count = 0;
  for (int a = 1; a <= j; ++a) count += u(a) <= i;
  return count;
}

/// Convex hull oracle for tiny point sets: checks shared points, all
/// segment-segment and point-in-segment intersections exactly, then scans
/// convex combinations of P on a rational grid against the same for Q.
inline bool brute_hulls_intersect(const PointSet& p, const PointSet& q, int grid = 12) {
  const auto combos = [grid](const PointSet& s) {
    std::set<Point> out;
    const std::size_t m = s.points.size();
    std::vector<int> weights(m, 0);
    const auto recurse = [&](auto& self, std::size_t idx, int remaining) -> void {
      if (idx + 1 == m) {
        weights[idx] = remaining;
        Point x(static_cast<std::size_t>(s.dim));
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t c = 0; c < x.size(); ++c) x[c] += Rational(weights[a], grid) * s.points[a][c];
        for (auto& c : x) c.canonicalize();
        out.insert(x);
        return;
      }
      for (int w = 0; w <= remaining; ++w) {
        weights[idx] = w;
        self(self, idx + 1, remaining - w);
      }
    };
    recurse(recurse, 0, grid);
    return out;
  };
  const auto cp = combos(p);
  const auto cq = combos(q);
  for (const auto& x : cp)
    if (cq.count(x)) return true;
  // Exact segment against segment: solve a p1 + (1-a) p2 = b q1 + (1-b) q2.
  for (std::size_t i = 0; i < p.points.size(); ++i)
    for (std::size_t i2 = i; i2 < p.points.size(); ++i2)
      for (std::size_t j = 0; j < q.points.size(); ++j)
        for (std::size_t j2 = j; j2 < q.points.size(); ++j2) {
          const Point& p1 = p.points[i];
          const Point& p2 = p.points[i2];
          const Point& q1 = q.points[j];
          const Point& q2 = q.points[j2];
          const std::size_t d = p1.size();
          // Columns (p1 - p2), -(q1 - q2); rhs q2 - p2.
          std::vector<std::vector<Rational>> a(d, std::vector<Rational>(3));
          for (std::size_t c = 0; c < d; ++c) {
            a[c][0] = p1[c] - p2[c];
            a[c][1] = q2[c] - q1[c];
            a[c][2] = q2[c] - p2[c];
          }
          ExactMatrix aug(static_cast<int>(d), 3);
          for (std::size_t c = 0; c < d; ++c)
            for (int k = 0; k < 3; ++k) aug.at(static_cast<int>(c), k) = a[c][static_cast<std::size_t>(k)];
          ExactMatrix coeff = aug.column_block(0, 2);
          if (rank(coeff) != rank(aug)) continue;
          // Consistent: find a solution with 0 <= alpha, beta <= 1.
          if (rank(coeff) == 2) {
            ExactMatrix r = aug;
            const auto pivots = row_reduce(r);
            const Rational alpha = r.at(0, 2);
            const Rational beta = r.at(1, 2);
            if (pivots.size() >= 2 && alpha >= 0 && alpha <= 1 && beta >= 0 && beta <= 1) return true;
          } else {
            // Degenerate (collinear or point) case: test endpoints against the other segment.
            const auto on_segment = [](const Point& x, const Point& s1, const Point& s2) {
              std::optional<Rational> t;
              for (std::size_t c = 0; c < x.size(); ++c) {
                const Rational span = s1[c] - s2[c];
                const Rational off = x[c] - s2[c];
                if (span == 0) {
                  if (off != 0) return false;
                  continue;
                }
                const Rational tc = off / span;
                if (t && *t != tc) return false;
                t = tc;
              }
              return !t || (*t >= 0 && *t <= 1);
            };
            if (on_segment(p1, q1, q2) || on_segment(p2, q1, q2) || on_segment(q1, p1, p2) || on_segment(q2, p1, p2)) return true;
          }
        }
  return false;
}

/// Exact oracle: an LP that is feasible has a basic feasible solution, so
/// enumerate the supports S ⊆ P, T ⊆ Q whose barycentric system has a unique
/// solution and test that solution for nonnegativity.
inline bool enumerated_hulls_intersect(const PointSet& p, const PointSet& q) {
  const std::size_t np = p.points.size();
  const std::size_t nq = q.points.size();
  const int d = p.dim;
  for (std::uint64_t sm = 1; sm < (std::uint64_t{1} << np); ++sm)
    for (std::uint64_t tm = 1; tm < (std::uint64_t{1} << nq); ++tm) {
      std::vector<const Point*> cols;
      std::vector<int> side;
      for (std::size_t i = 0; i < np; ++i)
        if (sm >> i & 1) cols.push_back(&p.points[i]), side.push_back(0);
      for (std::size_t j = 0; j < nq; ++j)
        if (tm >> j & 1) cols.push_back(&q.points[j]), side.push_back(1);
      const int m = static_cast<int>(cols.size());
      ExactMatrix aug(d + 2, m + 1);
      for (int c = 0; c < m; ++c) {
        const Rational sign = side[static_cast<std::size_t>(c)] == 0 ? 1 : -1;
        for (int r = 0; r < d; ++r) aug.at(r, c) = sign * (*cols[static_cast<std::size_t>(c)])[static_cast<std::size_t>(r)];
        aug.at(d + side[static_cast<std::size_t>(c)], c) = 1;
      }
      aug.at(d, m) = 1;
      aug.at(d + 1, m) = 1;
      const auto pivots = row_reduce(aug);
      if (static_cast<int>(pivots.size()) != m || pivots.back() >= m) continue;
      bool nonnegative = true;
      for (int c = 0; c < m; ++c) nonnegative = nonnegative && aug.at(c, m) >= 0;
      if (nonnegative) return true;
    }
  return false;
}

}  // namespace opplab::testing
