#pragma once

// Points of Gr(k, n) as column spans, their sign classes, transversality and
// positroids.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opplab/coxeter.hpp"
#include "opplab/matrix.hpp"

namespace opplab {

class Subspace {
 public:
  explicit Subspace(ExactMatrix basis) : basis_(std::move(basis)) {
    if (basis_.rows() < 1) throw InputError("subspace must live in C^n with n >= 1");
    if (rank(basis_) != basis_.cols()) throw InputError("subspace basis is rank-deficient");
  }

  int n() const { return basis_.rows(); }
  int k() const { return basis_.cols(); }
  const ExactMatrix& basis() const { return basis_; }

  PluckerVector pluckers() const { return plucker_vector(basis_); }
  Subspace perp() const { return Subspace(orthogonal_complement(basis_)); }

 private:
  ExactMatrix basis_;
};

/// A collection of k-subsets of [n].
struct Positroid {
  int n = 0;
  int k = 0;
  std::set<IndexSet> members;

  bool intersects(const Positroid& other) const {
    for (const auto& m : members)
      if (other.members.count(m)) return true;
    return false;
  }
  friend bool operator==(const Positroid&, const Positroid&) = default;
};

/// dim(V + W) = min(n, k + l).
inline bool transverse(const Subspace& v, const Subspace& w) {
  if (v.n() != w.n()) throw InputError("transverse: subspaces of different ambient dimension");
  return rank(v.basis().hconcat(w.basis())) == std::min(v.n(), v.k() + w.k());
}

inline Rational plucker_pairing(const Subspace& v, const Subspace& w) {
  if (v.n() != w.n() || v.k() != w.k()) throw InputError("plucker pairing needs subspaces of equal dimension in the same C^n");
  const auto pv = v.pluckers();
  const auto pw = w.pluckers();
  Rational sum = 0;
  for (const auto& [subset, value] : pv) sum += value * pw.at(subset);
  return sum;
}

/// Whether V and the orthogonal complement of W are transverse, decided by
/// the bilinear Plücker sum  sum_I  Delta_I(V) Delta_I(W) != 0.
inline bool transverse_by_plucker(const Subspace& v, const Subspace& w) {
  return plucker_pairing(v, w) != 0;
}

/// Signs of a Plücker vector up to one global nonzero factor. The "negative"
/// flags refer to the twisted vector (-1)^{sum(I)} Delta_I.
struct SignProfile {
  bool positive = false;     // all entries nonzero, one sign
  bool nonnegative = false;  // nonzero entries share one sign
  bool negative = false;     // twisted: all nonzero, one sign
  bool nonpositive = false;  // twisted: nonzero entries share one sign
};

enum class SubspaceSignClass { TotallyPositive, TotallyNonnegative, TotallyNegative, TotallyNonpositive, None };

inline std::string to_string(SubspaceSignClass c) {
  switch (c) {
    case SubspaceSignClass::TotallyPositive: return "TP";
    case SubspaceSignClass::TotallyNonnegative: return "TNN";
    case SubspaceSignClass::TotallyNegative: return "TN";
    case SubspaceSignClass::TotallyNonpositive: return "TNP";
    case SubspaceSignClass::None: return "none";
  }
  return "none";
}

inline SignProfile sign_profile(const PluckerVector& pluckers) {
  int plain_sign = 0;
  int twisted_sign = 0;
  bool plain_mixed = false;
  bool twisted_mixed = false;
  bool has_zero = false;
  for (const auto& [subset, value] : pluckers) {
    const int s = sign(value);
    if (s == 0) {
      has_zero = true;
      continue;
    }
    const int t = (index_sum(subset) % 2 == 0) ? s : -s;
    if (plain_sign == 0) plain_sign = s;
    else if (plain_sign != s) plain_mixed = true;
    if (twisted_sign == 0) twisted_sign = t;
    else if (twisted_sign != t) twisted_mixed = true;
  }
  if (plain_sign == 0) throw InvariantViolation("all Plücker coordinates vanish for a full-rank basis");
  SignProfile p;
  p.nonnegative = !plain_mixed;
  p.positive = p.nonnegative && !has_zero;
  p.nonpositive = !twisted_mixed;
  p.negative = p.nonpositive && !has_zero;
  return p;
}

inline SignProfile sign_profile(const Subspace& v) { return sign_profile(v.pluckers()); }

inline SubspaceSignClass subspace_sign_class(const Subspace& v) {
  const auto p = sign_profile(v);
  if (p.positive) return SubspaceSignClass::TotallyPositive;
  if (p.nonnegative) return SubspaceSignClass::TotallyNonnegative;
  if (p.negative) return SubspaceSignClass::TotallyNegative;
  if (p.nonpositive) return SubspaceSignClass::TotallyNonpositive;
  return SubspaceSignClass::None;
}

/// Support of the Plücker vector of a totally nonnegative subspace.
inline Positroid positroid_of(const Subspace& v) {
  const auto pluckers = v.pluckers();
  if (!sign_profile(pluckers).nonnegative) throw InputError("positroid_of: subspace is not totally nonnegative");
  Positroid out{v.n(), v.k(), {}};
  for (const auto& [subset, value] : pluckers)
    if (value != 0) out.members.insert(subset);
  return out;
}

/// {x({1..k}) : x in [v, w]}.
inline Positroid positroid_projection(const BruhatInterval& interval, int k) {
  const int n = interval.n();
  if (k < 1 || k > n - 1) throw InputError("positroid_projection: k must lie in [1, n-1]");
  Positroid out{n, k, {}};
  for (const auto& x : interval_elements(interval)) out.members.insert(x.prefix_set(k));
  return out;
}

}  // namespace opplab
