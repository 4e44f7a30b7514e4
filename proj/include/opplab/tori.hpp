#pragma once

// Maximal tori of SL_n seen as unordered eigenbases, their total positivity,
// the framed-torus cell census, and fixed SL_3 counterexample data.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "opplab/census.hpp"
#include "opplab/coxeter.hpp"
#include "opplab/flags.hpp"
#include "opplab/matrix.hpp"
#include "opplab/opposition.hpp"

namespace opplab {

/// Columns are the joint eigenvectors, each up to scale.
class TorusBasis {
 public:
  explicit TorusBasis(ExactMatrix basis) : basis_(std::move(basis)) {
    if (!basis_.square() || basis_.rows() < 1) throw InputError("torus basis must be a nonempty square matrix");
    if (rank(basis_) != basis_.rows()) throw InputError("torus basis must be invertible");
  }

  int n() const { return basis_.rows(); }
  const ExactMatrix& basis() const { return basis_; }

  /// The flag of the columns in the given (0-based) order.
  Flag ordered_flag(const std::vector<int>& order) const { return Flag(basis_.select_columns(order)); }

 private:
  ExactMatrix basis_;
};

/// First column ordering (lexicographic) whose flag has the forward class
/// and whose reversal has the reversed class.
inline std::optional<std::vector<int>> find_torus_ordering(const TorusBasis& b, bool strict) {
  const int n = b.n();
  if (n > 5) throw InputError("torus membership is searched over n! orderings; n must be <= 5");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    const Flag forward = b.ordered_flag(order);
    const auto fp = flag_sign_profile(forward);
    if (strict ? !fp.positive : !fp.nonnegative) continue;
    const std::vector<int> reversed(order.rbegin(), order.rend());
    const Flag backward = b.ordered_flag(reversed);
    const auto bp = flag_sign_profile(backward);
    if (strict ? !bp.negative : !bp.nonpositive) continue;
    if (!opposed_flags(forward, backward))
      throw InvariantViolation("flags of a basis and its reversal are not opposed");
    return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

inline bool torus_positive(const TorusBasis& b) { return find_torus_ordering(b, true).has_value(); }
inline bool torus_nonnegative(const TorusBasis& b) { return find_torus_ordering(b, false).has_value(); }

/// Certifies that h is totally positive with the given distinct positive
/// eigenvalues on the columns of b.
inline bool eigen_verify(const ExactMatrix& h, const std::vector<Rational>& eigenvalues, const TorusBasis& b) {
  const int n = b.n();
  if (!h.square() || h.rows() != n) throw InputError("eigen_verify: h has the wrong shape");
  if (static_cast<int>(eigenvalues.size()) != n) throw InputError("eigen_verify: need one eigenvalue per column");
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    if (eigenvalues[i] <= 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (eigenvalues[i] == eigenvalues[j]) return false;
  }
  for (int i = 0; i < n; ++i) {
    const ExactMatrix column = b.basis().column_block(i, 1);
    if (h * column != eigenvalues[static_cast<std::size_t>(i)] * column) return false;
  }
  return positivity_class(h) == PositivityClass::TotallyPositive;
}

struct LusztigProbe {
  Rational ratio;
  ExactMatrix conjugate;
  PositivityClass positivity;
};

struct LusztigReport {
  std::vector<LusztigProbe> probes;  // sorted by ratio
  std::optional<Rational> first_positive;
  bool monotone = true;
};

inline bool unipotent_lower(const ExactMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (m.at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

inline bool unipotent_upper(const ExactMatrix& m) { return unipotent_lower(m.transpose()); }

/// For each r, t = diag(r^{n-1}, ..., r, 1) has every simple root equal to r;
/// classifies g t g^{-1} with g = g1 g2.
inline LusztigReport lusztig_scan(const ExactMatrix& g1, const ExactMatrix& g2, std::vector<Rational> ratios) {
  if (!g1.square() || !g2.square() || g1.rows() != g2.rows()) throw InputError("lusztig_scan: g1 and g2 must be square of one size");
  if (!unipotent_lower(g1)) throw InputError("lusztig_scan: g1 must be unipotent lower triangular");
  if (!unipotent_upper(g2)) throw InputError("lusztig_scan: g2 must be unipotent upper triangular");
  for (const auto& r : ratios)
    if (r <= 0) throw InputError("lusztig_scan: ratios must be positive");
  std::sort(ratios.begin(), ratios.end());
  const int n = g1.rows();
  const ExactMatrix g = g1 * g2;
  const ExactMatrix g_inv = inverse(g);
  LusztigReport report;
  for (const auto& r : ratios) {
    std::vector<Rational> diag(static_cast<std::size_t>(n));
    Rational power = 1;
    for (int i = n - 1; i >= 0; --i) {
      diag[static_cast<std::size_t>(i)] = power;
      power *= r;
    }
    ExactMatrix conjugate = g * ExactMatrix::diagonal(diag) * g_inv;
    const auto cls = positivity_class(conjugate);
    if (cls == PositivityClass::TotallyPositive) {
      if (!report.first_positive) report.first_positive = r;
    } else if (report.first_positive) {
      report.monotone = false;
    }
    report.probes.push_back({r, std::move(conjugate), cls});
  }
  return report;
}

struct FramedCell {
  BruhatInterval first;
  BruhatInterval second;
  int dim = 0;
};

struct FramedTorusCellReport {
  int n = 0;
  std::vector<FramedCell> cells;
  std::map<int, std::size_t> f_vector;
  long euler_characteristic = 0;
  std::vector<FramedCell> top_cells;
};

/// Cells of the framed totally nonnegative tori: ordered pairs of opposed
/// intervals, of dimension l(w) + l(w') - l(v) - l(v').
inline FramedTorusCellReport framed_cell_census(int n) {
  if (n < 1 || n > 4) throw InputError("framed_cell_census: n must lie in [1, 4]");
  const auto summaries = IntervalSummary::all(n);
  const int top = 2 * length(longest_element(n));
  FramedTorusCellReport report;
  report.n = n;
  for (const auto& a : summaries)
    for (const auto& b : summaries) {
      if (!a.opposed(b)) continue;
      FramedCell cell{a.interval, b.interval, a.interval.dimension() + b.interval.dimension()};
      ++report.f_vector[cell.dim];
      report.euler_characteristic += (cell.dim % 2 == 0) ? 1 : -1;
      if (cell.dim == top) report.top_cells.push_back(cell);
      report.cells.push_back(std::move(cell));
    }
  return report;
}

/// det(x I - m) as coefficients c_0..c_n of x^0..x^n, by Faddeev-LeVerrier.
inline std::vector<Rational> characteristic_polynomial(const ExactMatrix& m) {
  if (!m.square()) throw InputError("characteristic_polynomial: matrix must be square");
  const int n = m.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  ExactMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * (mk + c[static_cast<std::size_t>(n - k + 1)] * ExactMatrix::identity(n));
    Rational trace = 0;
    for (int i = 0; i < n; ++i) trace += mk.at(i, i);
    c[static_cast<std::size_t>(n - k)] = -trace / k;
  }
  return c;
}

inline Rational evaluate_polynomial(const std::vector<Rational>& c, const Rational& x) {
  Rational out = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) out = out * x + *it;
  return out;
}

inline std::vector<Rational> derivative(const std::vector<Rational>& c) {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i] * static_cast<long>(i));
  return out;
}

struct CounterexampleClaim {
  std::string name;
  bool expected = false;
  bool observed = false;
  bool passed() const { return expected == observed; }
};

struct CounterexampleReport {
  std::vector<CounterexampleClaim> memberships;
  std::vector<std::vector<Rational>> family_parameters;  // (a, b, c, d)
  std::size_t repeated_root_hits = 0;
  bool passed() const {
    for (const auto& c : memberships)
      if (!c.passed()) return false;
    return repeated_root_hits == family_parameters.size();
  }
};

inline ExactMatrix counterexample_g() { return {{0, -1, 0}, {1, 0, 0}, {0, 1, 1}}; }

/// [[d,0,0],[c-b,a,c],[0,0,d]].
inline ExactMatrix constrained_family(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return {{d, 0, 0}, {c - b, a, c}, {0, 0, d}};
}

/// The SL_3 torus that lies in a nonnegative Borel whose opposite through it
/// is not nonpositive, and the family of nonnegative elements of that Borel.
inline CounterexampleReport counterexample_suite(std::uint64_t seed = 0, int samples = 20) {
  const ExactMatrix g = counterexample_g();
  const ExactMatrix w0 = signed_perm_matrix(longest_element(3));
  const ExactMatrix s2 = signed_simple_matrix(2, 3);
  const Flag b1(g);
  const Flag b1p(g * w0);
  const Flag b2(g * s2);
  const Flag b2p(g * s2 * w0);
  CounterexampleReport report;
  report.memberships = {
      {"B1 nonnegative", true, flag_sign_profile(b1).nonnegative},
      {"B1' nonpositive", true, flag_sign_profile(b1p).nonpositive},
      {"B2 nonnegative", true, flag_sign_profile(b2).nonnegative},
      {"B2' nonpositive", false, flag_sign_profile(b2p).nonpositive},
  };
  std::mt19937_64 rng(seed);
  const auto draw = [&rng] {
    Rational q(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 9) + 1);
    q.canonicalize();
    return q;
  };
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> p = s == 0 ? std::vector<Rational>{1, 1, 1, 1} : std::vector<Rational>{draw(), draw(), draw(), draw()};
    const auto poly = characteristic_polynomial(constrained_family(p[0], p[1], p[2], p[3]));
    if (evaluate_polynomial(poly, p[3]) == 0 && evaluate_polynomial(derivative(poly), p[3]) == 0) ++report.repeated_root_hits;
    report.family_parameters.push_back(std::move(p));
  }
  return report;
}

}  // namespace opplab
