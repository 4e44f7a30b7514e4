#pragma once

// The symmetric group S_n as a Coxeter group with simple generators
// s_i = (i i+1), i = 1..n-1. Permutations are stored in one-line notation,
// 1-indexed: image()[j-1] = w(j). Products compose right to left,
// (v * w)(j) = v(w(j)), so w * s_i swaps positions i and i+1 of w.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opplab/error.hpp"

namespace opplab {

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = size();
    if (n < 1) throw InputError("permutation must have n >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int value : image_) {
      if (value < 1 || value > n || seen[static_cast<std::size_t>(value - 1)])
        throw InputError("not a permutation of [" + std::to_string(n) + "]: " + to_string());
      seen[static_cast<std::size_t>(value - 1)] = true;
    }
  }

  static Permutation identity(int n) {
    if (n < 1) throw InputError("permutation must have n >= 1");
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
  }

  /// The simple transposition s_i in S_n.
  static Permutation simple(int i, int n) {
    if (i < 1 || i >= n) throw InputError("simple generator index out of range");
    Permutation s = identity(n);
    std::swap(s.image_[static_cast<std::size_t>(i - 1)], s.image_[static_cast<std::size_t>(i)]);
    return s;
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int j) const { return image_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (int j = 1; j <= size(); ++j) inv[static_cast<std::size_t>((*this)(j) - 1)] = j;
    Permutation p;
    p.image_ = std::move(inv);
    return p;
  }

  /// Image of the set {1..k}, sorted.
  std::vector<int> prefix_set(int k) const {
    std::vector<int> out(image_.begin(), image_.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Digits for n <= 9 ("2413"), comma separated otherwise.
  std::string to_string() const {
    std::string out;
    const bool compact = size() <= 9;
    for (std::size_t j = 0; j < image_.size(); ++j) {
      if (!compact && j > 0) out += ',';
      out += std::to_string(image_[j]);
    }
    return out;
  }

  friend Permutation operator*(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw InputError("composing permutations of different n");
    Permutation p;
    p.image_.resize(w.image_.size());
    for (int j = 1; j <= w.size(); ++j) p.image_[static_cast<std::size_t>(j - 1)] = v(w(j));
    return p;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Parses "2413" (n <= 9) or "10,2,3,..." into a permutation.
inline Permutation parse_permutation(const std::string& text) {
  std::vector<int> image;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      const std::string token = text.substr(start, end - start);
      if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad permutation token '" + token + "' in " + text);
      image.push_back(std::stoi(token));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw InputError("bad permutation digit in '" + text + "'");
      image.push_back(c - '0');
    }
  }
  return Permutation(std::move(image));
}

inline void require_same_n(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw InputError("permutations of different n: " + v.to_string() + " vs " + w.to_string());
}

/// Number of inversions.
inline int length(const Permutation& w) {
  int count = 0;
  for (int a = 1; a <= w.size(); ++a)
    for (int b = a + 1; b <= w.size(); ++b)
      if (w(a) > w(b)) ++count;
  return count;
}

inline Permutation longest_element(int n) {
  if (n < 1) throw InputError("n must be >= 1");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) image[static_cast<std::size_t>(j - 1)] = n + 1 - j;
  return Permutation(std::move(image));
}

/// i* = n - i, the index with s_{i*} = w0 s_i w0.
inline int star_involution(int i, int n) {
  if (i < 1 || i >= n) throw InputError("star_involution: index out of range");
  return n - i;
}

/// Ehresmann criterion: v <= w iff for every prefix length a and threshold b,
/// #{j <= a : v(j) >= b} <= #{j <= a : w(j) >= b}.
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
  require_same_n(v, w);
  const int n = v.size();
  std::vector<int> count_v(static_cast<std::size_t>(n + 2), 0);
  std::vector<int> count_w(static_cast<std::size_t>(n + 2), 0);
  for (int a = 1; a <= n; ++a) {
    ++count_v[static_cast<std::size_t>(v(a))];
    ++count_w[static_cast<std::size_t>(w(a))];
    int tail_v = 0;
    int tail_w = 0;
    for (int b = n; b >= 1; --b) {
      tail_v += count_v[static_cast<std::size_t>(b)];
      tail_w += count_w[static_cast<std::size_t>(b)];
      if (tail_v > tail_w) return false;
    }
  }
  return true;
}

/// Reduced word (i_1, ..., i_l) with w = s_{i_1} ... s_{i_l}. The last letter
/// is always the smallest right descent of what remains.
inline std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> reversed;
  Permutation u = w;
  const int n = w.size();
  for (;;) {
    int descent = 0;
    for (int i = 1; i < n; ++i) {
      if (u(i) > u(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    reversed.push_back(descent);
    u = u * Permutation::simple(descent, n);
  }
  return {reversed.rbegin(), reversed.rend()};
}

inline Permutation word_product(const std::vector<int>& word, int n) {
  Permutation p = Permutation::identity(n);
  for (int i : word) p = p * Permutation::simple(i, n);
  return p;
}

/// 0-Hecke product: fold the generators of a reduced word of w into v,
/// multiplying only when the length goes up.
inline Permutation demazure_product(const Permutation& v, const Permutation& w) {
  require_same_n(v, w);
  Permutation out = v;
  for (int i : reduced_word(w)) {
    Permutation next = out * Permutation::simple(i, v.size());
    if (length(next) > length(out)) out = std::move(next);
  }
  return out;
}

/// All of S_n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

class BruhatInterval {
 public:
  BruhatInterval(Permutation v, Permutation w) : v_(std::move(v)), w_(std::move(w)) {
    require_same_n(v_, w_);
    if (!bruhat_leq(v_, w_))
      throw InputError("empty Bruhat interval: " + v_.to_string() + " is not <= " + w_.to_string());
  }

  const Permutation& v() const { return v_; }
  const Permutation& w() const { return w_; }
  int n() const { return v_.size(); }
  int dimension() const { return length(w_) - length(v_); }

  bool contains(const Permutation& x) const { return bruhat_leq(v_, x) && bruhat_leq(x, w_); }

  std::string to_string() const { return "[" + v_.to_string() + "," + w_.to_string() + "]"; }

  friend bool operator==(const BruhatInterval&, const BruhatInterval&) = default;
  friend auto operator<=>(const BruhatInterval&, const BruhatInterval&) = default;

 private:
  Permutation v_;
  Permutation w_;
};

inline void require_same_n(const BruhatInterval& a, const BruhatInterval& b) {
  if (a.n() != b.n()) throw InputError("intervals of different n: " + a.to_string() + " vs " + b.to_string());
}

/// Elements of [v, w], found by filtering S_n (sorted lexicographically).
inline std::vector<Permutation> interval_elements(const BruhatInterval& interval) {
  std::vector<Permutation> out;
  for (auto& x : all_permutations(interval.n()))
    if (interval.contains(x)) out.push_back(std::move(x));
  return out;
}

inline bool intervals_intersect(const BruhatInterval& a, const BruhatInterval& b) {
  require_same_n(a, b);
  for (const auto& x : all_permutations(a.n()))
    if (a.contains(x) && b.contains(x)) return true;
  return false;
}

/// True iff inner is a subset of outer.
inline bool interval_contains(const BruhatInterval& outer, const BruhatInterval& inner) {
  require_same_n(outer, inner);
  return bruhat_leq(outer.v(), inner.v()) && bruhat_leq(inner.w(), outer.w());
}

/// [v, w] -> [w w0, v w0].
inline BruhatInterval interval_perp(const BruhatInterval& interval) {
  const Permutation w0 = longest_element(interval.n());
  return BruhatInterval(interval.w() * w0, interval.v() * w0);
}

/// Every nonempty interval of S_n, ordered by (v, w).
inline std::vector<BruhatInterval> all_intervals(int n) {
  const auto perms = all_permutations(n);
  std::vector<BruhatInterval> out;
  for (const auto& v : perms)
    for (const auto& w : perms)
      if (bruhat_leq(v, w)) out.emplace_back(v, w);
  return out;
}

}  // namespace opplab
