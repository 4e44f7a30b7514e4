#pragma once

// Complete flags in C^n, represented by an invertible matrix whose first k
// columns span the k-th step. Everything here is invariant under right
// multiplication of the representative by invertible upper-triangular
// matrices.

#include <string>
#include <utility>
#include <vector>

#include "opplab/coxeter.hpp"
#include "opplab/grassmann.hpp"
#include "opplab/matrix.hpp"

namespace opplab {

class Flag {
 public:
  explicit Flag(ExactMatrix rep) : rep_(std::move(rep)) {
    if (!rep_.square() || rep_.rows() < 1) throw InputError("flag representative must be a nonempty square matrix");
    if (rank(rep_) != rep_.rows()) throw InputError("flag representative must be invertible");
  }

  static Flag standard(int n) { return Flag(ExactMatrix::identity(n)); }
  /// Columns e_n, ..., e_1 (the flag of w0-dot).
  static Flag antistandard(int n) { return Flag(signed_perm_matrix(longest_element(n))); }

  int n() const { return rep_.rows(); }
  const ExactMatrix& rep() const { return rep_; }

  /// F_k, the span of the first k columns (0 <= k <= n).
  Subspace step(int k) const { return Subspace(rep_.column_block(0, k)); }

  /// Same flag iff every F_k coincides.
  bool equivalent(const Flag& other) const {
    if (other.n() != n()) return false;
    for (int k = 1; k < n(); ++k)
      if (rank(rep_.column_block(0, k).hconcat(other.rep_.column_block(0, k))) != k) return false;
    return true;
  }

 private:
  ExactMatrix rep_;
};

inline void require_same_n(const Flag& a, const Flag& b) {
  if (a.n() != b.n()) throw InputError("flags of different n");
}

/// rep -> (rep^{-1})^T w0-dot: the flag of orthogonal complements, reversed.
inline Flag flag_perp(const Flag& f) {
  return Flag(inverse(f.rep()).transpose() * signed_perm_matrix(longest_element(f.n())));
}

using FlagSignClass = SubspaceSignClass;

/// Conjunction of the step profiles over k = 1..n-1.
inline SignProfile flag_sign_profile(const Flag& f) {
  SignProfile total{true, true, true, true};
  for (int k = 1; k < f.n(); ++k) {
    const auto p = sign_profile(f.step(k));
    total.positive = total.positive && p.positive;
    total.nonnegative = total.nonnegative && p.nonnegative;
    total.negative = total.negative && p.negative;
    total.nonpositive = total.nonpositive && p.nonpositive;
  }
  return total;
}

inline FlagSignClass flag_sign_class(const Flag& f) {
  const auto p = flag_sign_profile(f);
  if (p.positive) return FlagSignClass::TotallyPositive;
  if (p.nonnegative) return FlagSignClass::TotallyNonnegative;
  if (p.negative) return FlagSignClass::TotallyNegative;
  if (p.nonpositive) return FlagSignClass::TotallyNonpositive;
  return FlagSignClass::None;
}

/// dim(F_i ∩ G_j) for 0 <= i, j <= n.
inline std::vector<std::vector<int>> intersection_dimensions(const Flag& f, const Flag& g) {
  require_same_n(f, g);
  const int n = f.n();
  std::vector<std::vector<int>> dims(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int r = rank(f.rep().column_block(0, i).hconcat(g.rep().column_block(0, j)));
      dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i + j - r;
    }
  return dims;
}

/// The permutation u with dim(F_i ∩ G_j) = #{a <= j : u(a) <= i}.
inline Permutation relative_position(const Flag& f, const Flag& g) {
  const auto dims = intersection_dimensions(f, g);
  const int n = f.n();
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= n; ++i) {
      if (dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
              dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] == 1) {
        image[static_cast<std::size_t>(j - 1)] = i;
        break;
      }
    }
  }
  try {
    return Permutation(std::move(image));
  } catch (const InputError&) {
    throw InvariantViolation("rank matrix of a flag pair is not a permutation rank matrix");
  }
}

enum class CellSide { TNN, TNP };

inline std::string to_string(CellSide side) { return side == CellSide::TNN ? "TNN" : "TNP"; }

/// A Richardson cell of the nonnegative (TNN) or nonpositive (TNP) flag
/// variety. A TNP label [v, w] names the perp of the TNN cell [v, w], which
/// sits in the open Richardson variety R_{w w0, v w0}.
struct CellLabel {
  BruhatInterval interval;
  CellSide side;
  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// (v, w) with F in the open Richardson variety R_{v,w}, i.e. F lies in the
/// Schubert cell of w and the opposite Schubert cell of v.
inline BruhatInterval richardson_label(const Flag& f) {
  const int n = f.n();
  const Permutation w = relative_position(Flag::standard(n), f);
  const Permutation v = longest_element(n) * relative_position(Flag::antistandard(n), f);
  return BruhatInterval(v, w);
}

inline CellLabel cell_of(const Flag& f, CellSide side) {
  const auto profile = flag_sign_profile(f);
  if (side == CellSide::TNN && !profile.nonnegative) throw InputError("cell_of: flag is not totally nonnegative");
  if (side == CellSide::TNP && !profile.nonpositive) throw InputError("cell_of: flag is not totally nonpositive");
  const BruhatInterval raw = richardson_label(f);
  return {side == CellSide::TNN ? raw : interval_perp(raw), side};
}

/// Greedy right-to-left positive distinguished subexpression of v inside the
/// given reduced word: true marks the positions that carry an s-dot factor.
inline std::vector<bool> distinguished_subexpression(const std::vector<int>& word, const Permutation& v) {
  std::vector<bool> uses_generator(word.size(), false);
  Permutation current = v;
  for (std::size_t pos = word.size(); pos-- > 0;) {
    Permutation next = current * Permutation::simple(word[pos], v.size());
    if (length(next) < length(current)) {
      current = std::move(next);
      uses_generator[pos] = true;
    }
  }
  if (current != Permutation::identity(v.size()))
    throw InvariantViolation("no distinguished subexpression: " + v.to_string() + " is not below the word's product");
  return uses_generator;
}

/// A point of the TNN cell [v, w]: multiply along the reduced word of w,
/// using s_i-dot on the distinguished subexpression for v and y_i(t) with the
/// next parameter everywhere else.
inline Flag mr_sample(const BruhatInterval& interval, const std::vector<Rational>& params) {
  const int n = interval.n();
  if (static_cast<int>(params.size()) != interval.dimension())
    throw InputError("mr_sample: expected " + std::to_string(interval.dimension()) + " parameters, got " +
                     std::to_string(params.size()));
  for (const auto& t : params)
    if (t <= 0) throw InputError("mr_sample: parameters must be positive");
  const auto word = reduced_word(interval.w());
  const auto uses_generator = distinguished_subexpression(word, interval.v());
  ExactMatrix g = ExactMatrix::identity(n);
  std::size_t next_param = 0;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (uses_generator[pos]) g = g * signed_simple_matrix(word[pos], n);
    else g = g * lower_elementary(word[pos], n, params[next_param++]);
  }
  return Flag(std::move(g));
}

/// A point of the TNP cell labeled [v, w]: the perp of a TNN sample.
inline Flag tnp_sample(const BruhatInterval& interval, const std::vector<Rational>& params) {
  return flag_perp(mr_sample(interval, params));
}

inline Flag sample_cell(const CellLabel& label, const std::vector<Rational>& params) {
  return label.side == CellSide::TNN ? mr_sample(label.interval, params) : tnp_sample(label.interval, params);
}

}  // namespace opplab
