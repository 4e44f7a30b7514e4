#pragma once

// Opposition of flags, partial flags and Bruhat intervals, plus the
// well-definedness tests for flagtopes and Grassmann polytopes.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opplab/coxeter.hpp"
#include "opplab/flags.hpp"
#include "opplab/grassmann.hpp"
#include "opplab/matrix.hpp"

namespace opplab {

/// Route (a): B ∩ B' is a torus iff w0-dot g'^{-1} g lies in B_- B_+.
inline bool opposed_by_gaussian(const Flag& f, const Flag& g) {
  require_same_n(f, g);
  return gaussian_membership(signed_perm_matrix(longest_element(f.n())) * inverse(g.rep()) * f.rep());
}

/// Route (b): F_k and G_{n-k} are transverse for every k.
inline bool opposed_by_transversality(const Flag& f, const Flag& g) {
  require_same_n(f, g);
  const int n = f.n();
  for (int k = 1; k < n; ++k)
    if (!transverse(f.step(k), g.step(n - k))) return false;
  return true;
}

inline bool opposed_flags(const Flag& f, const Flag& g) {
  const bool by_gaussian = opposed_by_gaussian(f, g);
  if (by_gaussian != opposed_by_transversality(f, g))
    throw InvariantViolation("opposed_flags: Gaussian and transversality tests disagree");
  return by_gaussian;
}

/// One maximal parabolic at a time: F_i against G_{n-i}, decided through the
/// Plücker pairing of F_i with the complement of G_{n-i}.
inline bool opposed_via_maximal_parabolics(const Flag& f, const Flag& g) {
  require_same_n(f, g);
  const int n = f.n();
  for (int i = 1; i < n; ++i)
    if (!transverse_by_plucker(f.step(i), g.step(n - i).perp())) return false;
  return true;
}

/// Theorem-level test: [v,w] and [v',w'] are opposed iff for every k some
/// x in [v,w] and x' in [v',w'] have x([k]) = x'([k]).
inline bool opposed_intervals(const BruhatInterval& a, const BruhatInterval& b) {
  require_same_n(a, b);
  for (int k = 1; k < a.n(); ++k)
    if (!positroid_projection(a, k).intersects(positroid_projection(b, k))) return false;
  return true;
}

/// Positive parameters for the t-th sample of a cell. Sample 0 is all ones,
/// later samples are p/q with 1 <= p, q <= 9 drawn from a seeded mt19937_64.
inline std::vector<Rational> sample_parameters(int count, int trial, std::uint64_t seed) {
  std::vector<Rational> params(static_cast<std::size_t>(count), Rational(1));
  if (trial == 0) return params;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(count)};
  std::mt19937_64 rng(seq);
  for (auto& t : params) {
    const long p = static_cast<long>(rng() % 9) + 1;
    const long q = static_cast<long>(rng() % 9) + 1;
    t = Rational(p, q);
    t.canonicalize();
  }
  return params;
}

/// Samples `trials` points of the TNN cell a and of the TNP cell b and tests
/// every pair of samples for opposition. The answer must not depend on the
/// samples.
inline bool opposed_intervals_numeric(const BruhatInterval& a, const BruhatInterval& b, int trials,
                                      std::uint64_t seed = 0) {
  require_same_n(a, b);
  if (trials < 1) throw InputError("trials must be >= 1");
  std::vector<Flag> tnn;
  std::vector<Flag> tnp;
  for (int t = 0; t < trials; ++t) {
    tnn.push_back(mr_sample(a, sample_parameters(a.dimension(), t, seed)));
    tnp.push_back(tnp_sample(b, sample_parameters(b.dimension(), t, seed ^ 0x9e3779b97f4a7c15ULL)));
  }
  const bool first = opposed_flags(tnn.front(), tnp.front());
  for (const auto& f : tnn)
    for (const auto& g : tnp)
      if (opposed_flags(f, g) != first)
        throw InvariantViolation("opposition of " + a.to_string() + " and " + b.to_string() +
                                 " depends on the sampled points");
  return first;
}

/// A subset J of the simple reflections {1..n-1}. The corresponding partial
/// flags have steps in the dimensions not in J.
class ParabolicType {
 public:
  ParabolicType(int n, std::set<int> simple) : n_(n), simple_(std::move(simple)) {
    if (n < 1) throw InputError("parabolic type needs n >= 1");
    for (int i : simple_)
      if (i < 1 || i >= n) throw InputError("parabolic type index " + std::to_string(i) + " outside [1, n-1]");
  }

  static ParabolicType from_dimensions(int n, const std::vector<int>& dims) {
    std::set<int> simple;
    for (int i = 1; i < n; ++i) simple.insert(i);
    for (int d : dims) {
      if (d < 1 || d >= n) throw InputError("partial flag dimension " + std::to_string(d) + " outside [1, n-1]");
      simple.erase(d);
    }
    return ParabolicType(n, std::move(simple));
  }

  static ParabolicType borel(int n) { return ParabolicType(n, {}); }
  static ParabolicType full(int n) { return from_dimensions(n, {}); }

  int n() const { return n_; }
  const std::set<int>& simple() const { return simple_; }
  bool contains(int i) const { return simple_.count(i) > 0; }

  std::vector<int> dimensions() const {
    std::vector<int> dims;
    for (int i = 1; i < n_; ++i)
      if (!contains(i)) dims.push_back(i);
    return dims;
  }

  /// J* = {n - i : i in J}.
  ParabolicType star() const {
    std::set<int> out;
    for (int i : simple_) out.insert(star_involution(i, n_));
    return ParabolicType(n_, std::move(out));
  }

  friend bool operator==(const ParabolicType&, const ParabolicType&) = default;

 private:
  int n_;
  std::set<int> simple_;
};

/// The minimal-length element of W_J u W_J2, found by stripping left
/// descents in J and right descents in J2 until none remain.
inline Permutation double_coset_min(const Permutation& u, const ParabolicType& left, const ParabolicType& right) {
  const int n = u.size();
  if (left.n() != n || right.n() != n) throw InputError("double_coset_min: parabolic types of the wrong n");
  Permutation current = u;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : left.simple()) {
      Permutation next = Permutation::simple(i, n) * current;
      if (length(next) < length(current)) {
        current = std::move(next);
        changed = true;
      }
    }
    for (int i : right.simple()) {
      Permutation next = current * Permutation::simple(i, n);
      if (length(next) < length(current)) {
        current = std::move(next);
        changed = true;
      }
    }
  }
  return current;
}

/// Number of positive roots e_a - e_b (a < b) of the Levi of J.
inline int positive_root_count(const std::set<int>& simple) {
  int total = 0;
  int run = 0;
  int previous = -1;
  for (int i : simple) {
    run = (i == previous + 1) ? run + 1 : 1;
    total += run;
    previous = i;
  }
  return total;
}

/// |Φ+^{J2} \ Φ+^{J*}|.
inline int excess(const ParabolicType& j, const ParabolicType& j2) {
  if (j.n() != j2.n()) throw InputError("excess: parabolic types of different n");
  const auto star = j.star();
  std::set<int> common;
  for (int i : j2.simple())
    if (star.contains(i)) common.insert(i);
  return positive_root_count(j2.simple()) - positive_root_count(common);
}

/// A partial flag F_{k_1} ⊂ ... ⊂ F_{k_l}: the first k_i columns of rep span
/// the i-th step.
class PartialFlag {
 public:
  PartialFlag(std::vector<int> dims, ExactMatrix rep) : dims_(std::move(dims)), rep_(std::move(rep)) {
    const int n = rep_.rows();
    if (n < 1) throw InputError("partial flag must live in C^n with n >= 1");
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (dims_[i] < 1 || dims_[i] >= n) throw InputError("partial flag dims must lie in [1, n-1]");
      if (i > 0 && dims_[i] <= dims_[i - 1]) throw InputError("partial flag dims must be increasing");
    }
    const int top = dims_.empty() ? 0 : dims_.back();
    if (rep_.cols() < top) throw InputError("partial flag rep has fewer columns than its top dimension");
    if (rank(rep_.column_block(0, top)) != top) throw InputError("partial flag rep is rank-deficient");
  }

  static PartialFlag of_subspace(const Subspace& v) { return PartialFlag({v.k()}, v.basis()); }

  int n() const { return rep_.rows(); }
  const std::vector<int>& dims() const { return dims_; }
  const ExactMatrix& rep() const { return rep_; }
  ParabolicType type() const { return ParabolicType::from_dimensions(n(), dims_); }

  /// The spanning columns followed by the standard basis vectors that are not
  /// yet in their span, in index order.
  Flag completion() const {
    const int n = this->n();
    const int top = dims_.empty() ? 0 : dims_.back();
    ExactMatrix m = rep_.column_block(0, top);
    for (int i = 0; i < n && m.cols() < n; ++i) {
      ExactMatrix e(n, 1);
      e.at(i, 0) = 1;
      ExactMatrix candidate = m.hconcat(e);
      if (rank(candidate) == candidate.cols()) m = std::move(candidate);
    }
    return Flag(std::move(m));
  }

 private:
  std::vector<int> dims_;
  ExactMatrix rep_;
};

/// Opposed iff the relative position W_J u W_J' is the double coset of w0.
inline bool partial_flags_opposed(const PartialFlag& p, const PartialFlag& q) {
  if (p.n() != q.n()) throw InputError("partial flags of different n");
  const Permutation u = relative_position(p.completion(), q.completion());
  const auto j = p.type();
  const auto j2 = q.type();
  return double_coset_min(u, j, j2) == double_coset_min(longest_element(p.n()), j, j2);
}

/// The flagtope of a flag in the TNN cell a, over the closed TNP cell b, is
/// well-defined iff b ⊆ a.
inline bool flagtope_well_defined(const BruhatInterval& a, const BruhatInterval& b) {
  require_same_n(a, b);
  return interval_contains(a, b);
}

/// All [x, y] with v <= x <= y <= w.
inline std::vector<BruhatInterval> subintervals(const BruhatInterval& interval) {
  const auto elements = interval_elements(interval);
  std::vector<BruhatInterval> out;
  for (const auto& x : elements)
    for (const auto& y : elements)
      if (bruhat_leq(x, y)) out.emplace_back(x, y);
  return out;
}

/// Sampling test that W meets every subspace V of the closed nonpositive
/// cell in dimension dim(W) - k. Each V is the complement of the k-step of a
/// TNN sample, so it has dimension n - k. A false answer is certain, a true
/// one is evidence.
inline bool grasstope_well_defined(const Subspace& w, const BruhatInterval& interval, int k, int trials,
                                   std::uint64_t seed = 0) {
  const int n = interval.n();
  if (w.n() != n) throw InputError("grasstope_well_defined: W lives in the wrong C^n");
  if (k < 1 || k > n - 1) throw InputError("grasstope_well_defined: k must lie in [1, n-1]");
  if (w.k() < k) throw InputError("grasstope_well_defined: dim W must be at least k");
  if (trials < 1) throw InputError("trials must be >= 1");
  for (const auto& face : subintervals(interval)) {
    for (int t = 0; t < trials; ++t) {
      const Flag f = mr_sample(face, sample_parameters(face.dimension(), t, seed));
      if (!transverse(w, f.step(k).perp())) return false;
    }
  }
  return true;
}

}  // namespace opplab
