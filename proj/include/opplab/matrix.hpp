#pragma once

// Dense matrices over Q and the exact linear algebra every positivity and
// opposition predicate rests on. Indices in public APIs are 1-based to match
// the minor/Plücker notation; storage is row-major.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opplab/coxeter.hpp"
#include "opplab/error.hpp"
#include "opplab/rational.hpp"

namespace opplab {

using IndexSet = std::vector<int>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(checked_size(rows, cols)) {}

  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) throw InputError("ragged matrix literal");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw InputError("matrix must have at least one row");
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols_) throw InputError("ragged matrix rows");
      for (int j = 0; j < m.cols_; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  static ExactMatrix identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static ExactMatrix diagonal(const std::vector<Rational>& d) {
    ExactMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  // 0-based element access.
  Rational& at(int i, int j) { return entries_[index(i, j)]; }
  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  /// Columns first..first+count-1 (0-based first).
  ExactMatrix column_block(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_) throw InputError("column block out of range");
    ExactMatrix out(rows_, count);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < count; ++j) out.at(i, j) = at(i, first + j);
    return out;
  }

  /// Columns listed by 0-based index, in the given order.
  ExactMatrix select_columns(const std::vector<int>& columns) const {
    ExactMatrix out(rows_, static_cast<int>(columns.size()));
    for (int i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < columns.size(); ++j) out.at(i, static_cast<int>(j)) = at(i, columns[j]);
    return out;
  }

  ExactMatrix hconcat(const ExactMatrix& right) const {
    if (right.rows_ != rows_) throw InputError("hconcat: row count mismatch");
    ExactMatrix out(rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
      for (int j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
    }
    return out;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
    ExactMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  friend ExactMatrix operator*(const Rational& s, ExactMatrix m) {
    for (auto& e : m.entries_) e *= s;
    return m;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: dimension mismatch");
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
    return a;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

  std::string to_string() const {
    std::string out = "[";
    for (int i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (int j = 0; j < cols_; ++j) out += (j ? ", " : "") + at(i, j).get_str();
      out += "]";
    }
    return out + "]";
  }

 private:
  static std::size_t checked_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

namespace detail {

inline Rational determinant_in_place(std::vector<Rational>& a, int n) {
  Rational det = 1;
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i * n + j)]; };
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(at(pivot, j), at(col, j));
      det = -det;
    }
    const Rational p = at(col, col);
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      if (at(r, col) == 0) continue;
      const Rational factor = at(r, col) / p;
      for (int j = col; j < n; ++j) at(r, j) -= factor * at(col, j);
    }
  }
  return det;
}

}  // namespace detail

inline Rational determinant(const ExactMatrix& m) {
  if (!m.square()) throw InputError("determinant of non-square matrix");
  const int n = m.rows();
  std::vector<Rational> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = m.at(i, j);
  return detail::determinant_in_place(a, n);
}

/// Minor in the given rows and columns (1-based, any order; sorted internally).
inline Rational minor(const ExactMatrix& m, IndexSet rowset, IndexSet colset) {
  if (rowset.size() != colset.size()) throw InputError("minor: |rows| != |cols|");
  std::sort(rowset.begin(), rowset.end());
  std::sort(colset.begin(), colset.end());
  for (int r : rowset)
    if (r < 1 || r > m.rows()) throw InputError("minor: row index out of range");
  for (int c : colset)
    if (c < 1 || c > m.cols()) throw InputError("minor: column index out of range");
  if (std::adjacent_find(rowset.begin(), rowset.end()) != rowset.end() ||
      std::adjacent_find(colset.begin(), colset.end()) != colset.end())
    throw InputError("minor: repeated index");
  const int k = static_cast<int>(rowset.size());
  if (k == 0) return 1;
  std::vector<Rational> a(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      a[static_cast<std::size_t>(i * k + j)] = m.at(rowset[static_cast<std::size_t>(i)] - 1, colset[static_cast<std::size_t>(j)] - 1);
  return detail::determinant_in_place(a, k);
}

/// Row-reduced echelon form; returns pivot columns (0-based).
inline std::vector<int> row_reduce(ExactMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    const Rational p = m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) /= p;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rational factor = m.at(r, col);
      for (int j = col; j < m.cols(); ++j) m.at(r, j) -= factor * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(const ExactMatrix& m) {
  ExactMatrix copy = m;
  return static_cast<int>(row_reduce(copy).size());
}

inline ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.square()) throw InputError("inverse of non-square matrix");
  const int n = m.rows();
  ExactMatrix aug = m.hconcat(ExactMatrix::identity(n));
  const auto pivots = row_reduce(aug);
  if (static_cast<int>(pivots.size()) < n || pivots.back() >= n) throw InputError("matrix is singular");
  return aug.column_block(n, n);
}

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<IndexSet> k_subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

inline int index_sum(const IndexSet& s) {
  int total = 0;
  for (int i : s) total += i;
  return total;
}

inline IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  for (int i = 1; i <= n; ++i)
    if (std::find(s.begin(), s.end(), i) == s.end()) out.push_back(i);
  return out;
}

/// Plücker coordinates of the column span of an n x k matrix: every maximal
/// minor, keyed by its row set. These are raw minors of the given
/// representative, so they are only meaningful up to one common nonzero factor.
using PluckerVector = std::map<IndexSet, Rational>;

inline PluckerVector plucker_vector(const ExactMatrix& a) {
  const int n = a.rows();
  const int k = a.cols();
  if (k > n) throw InputError("plucker_vector: more columns than rows");
  if (rank(a) != k) throw InputError("plucker_vector: columns are linearly dependent");
  IndexSet all_cols(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) all_cols[static_cast<std::size_t>(j)] = j + 1;
  PluckerVector out;
  for (auto& rows : k_subsets(n, k)) out.emplace(rows, minor(a, rows, all_cols));
  return out;
}

/// Basis of the orthogonal complement (w.r.t. the standard bilinear form) of
/// the column span of a, i.e. of ker(a^T), as an n x (n-k) matrix.
inline ExactMatrix orthogonal_complement(const ExactMatrix& a) {
  const int n = a.rows();
  const int k = a.cols();
  if (rank(a) != k) throw InputError("orthogonal_complement: columns are linearly dependent");
  ExactMatrix reduced = a.transpose();
  const auto pivots = row_reduce(reduced);
  ExactMatrix basis(n, n - k);
  int out_col = 0;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    basis.at(free, out_col) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], out_col) = -reduced.at(static_cast<int>(r), free);
    ++out_col;
  }
  return basis;
}

/// The 2x2 block [[0,-1],[1,0]] embedded in rows/columns i, i+1.
inline ExactMatrix signed_simple_matrix(int i, int n) {
  if (i < 1 || i >= n) throw InputError("generator index out of range");
  ExactMatrix m = ExactMatrix::identity(n);
  m.at(i - 1, i - 1) = 0;
  m.at(i, i) = 0;
  m.at(i - 1, i) = -1;
  m.at(i, i - 1) = 1;
  return m;
}

/// y_i(t): identity with t in position (i+1, i).
inline ExactMatrix lower_elementary(int i, int n, const Rational& t) {
  if (i < 1 || i >= n) throw InputError("generator index out of range");
  ExactMatrix m = ExactMatrix::identity(n);
  m.at(i, i - 1) = t;
  return m;
}

/// x_i(t): identity with t in position (i, i+1).
inline ExactMatrix upper_elementary(int i, int n, const Rational& t) {
  if (i < 1 || i >= n) throw InputError("generator index out of range");
  ExactMatrix m = ExactMatrix::identity(n);
  m.at(i - 1, i) = t;
  return m;
}

/// The signed permutation matrix w-dot: product of the signed simple matrices
/// along a reduced word. Entries are +-delta_{i,w(j)}; all left-justified
/// minors are nonnegative and det = 1.
inline ExactMatrix signed_perm_matrix(const Permutation& w) {
  ExactMatrix m = ExactMatrix::identity(w.size());
  for (int i : reduced_word(w)) m = m * signed_simple_matrix(i, w.size());
  return m;
}

/// g in B_- B_+ iff every leading principal minor is nonzero.
inline bool gaussian_membership(const ExactMatrix& g) {
  if (!g.square()) throw InputError("gaussian_membership: matrix must be square");
  if (determinant(g) == 0) throw InputError("gaussian_membership: matrix is singular");
  IndexSet lead;
  for (int k = 1; k <= g.rows(); ++k) {
    lead.push_back(k);
    if (minor(g, lead, lead) == 0) return false;
  }
  return true;
}

/// Doolittle factorization g = L U with L unit lower triangular. Only exists
/// when all leading principal minors are nonzero.
struct LUFactors {
  ExactMatrix lower;
  ExactMatrix upper;
};

inline std::optional<LUFactors> lu_factor(const ExactMatrix& g) {
  if (!g.square()) throw InputError("lu_factor: matrix must be square");
  const int n = g.rows();
  ExactMatrix lower = ExactMatrix::identity(n);
  ExactMatrix upper = g;
  for (int col = 0; col < n; ++col) {
    if (upper.at(col, col) == 0) return std::nullopt;
    for (int r = col + 1; r < n; ++r) {
      const Rational factor = upper.at(r, col) / upper.at(col, col);
      lower.at(r, col) = factor;
      for (int j = 0; j < n; ++j) upper.at(r, j) -= factor * upper.at(col, j);
    }
  }
  return LUFactors{std::move(lower), std::move(upper)};
}

/// Sign profile of a square matrix from all of its minors. The strict classes
/// imply the weak ones; a matrix can be weakly both (the identity is).
struct MatrixSignProfile {
  bool totally_positive = false;
  bool totally_nonnegative = false;
  bool totally_negative = false;
  bool totally_nonpositive = false;
};

enum class PositivityClass { TotallyPositive, TotallyNonnegative, TotallyNegative, TotallyNonpositive, None };

inline std::string to_string(PositivityClass c) {
  switch (c) {
    case PositivityClass::TotallyPositive: return "TotallyPositive";
    case PositivityClass::TotallyNonnegative: return "TotallyNonnegative";
    case PositivityClass::TotallyNegative: return "TotallyNegative";
    case PositivityClass::TotallyNonpositive: return "TotallyNonpositive";
    case PositivityClass::None: return "None";
  }
  return "None";
}

/// Every minor of every size; the negative classes use the twisted sign
/// (-1)^(sum(I) + sum(J)) * minor(I, J).
inline MatrixSignProfile matrix_sign_profile(const ExactMatrix& m) {
  if (!m.square()) throw InputError("positivity_class: matrix must be square");
  MatrixSignProfile p{true, true, true, true};
  const int n = m.rows();
  for (int k = 1; k <= n; ++k) {
    const auto subsets = k_subsets(n, k);
    for (const auto& rows : subsets)
      for (const auto& cols : subsets) {
        const int s = sign(minor(m, rows, cols));
        const int twisted = ((index_sum(rows) + index_sum(cols)) % 2 == 0) ? s : -s;
        if (s <= 0) p.totally_positive = false;
        if (s < 0) p.totally_nonnegative = false;
        if (twisted <= 0) p.totally_negative = false;
        if (twisted < 0) p.totally_nonpositive = false;
      }
  }
  return p;
}

/// Most specific class, in the order TP, TNN, TN, TNP.
inline PositivityClass positivity_class(const ExactMatrix& m) {
  const auto p = matrix_sign_profile(m);
  if (p.totally_positive) return PositivityClass::TotallyPositive;
  if (p.totally_nonnegative) return PositivityClass::TotallyNonnegative;
  if (p.totally_negative) return PositivityClass::TotallyNegative;
  if (p.totally_nonpositive) return PositivityClass::TotallyNonpositive;
  return PositivityClass::None;
}

}  // namespace opplab
