#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "opplab/error.hpp"

namespace opplab {

using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

/// p/q in lowest terms (mpq_class(p, q) alone does not reduce).
inline Rational ratio(long p, long q) {
  if (q == 0) throw InputError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p/q" in lowest terms, "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "p/q" or a terminating decimal such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational");
  try {
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      if (s.find('/') != std::string::npos) throw InputError("mixed decimal/fraction: " + s);
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t scale = s.size() - dot - 1;
      if (digits == "-" || digits == "+" || digits.empty()) throw InputError("bad rational: " + s);
      if (digits[0] == '+') digits.erase(0, 1);
      Integer num(digits, 10);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational q(s, 10);
    if (q.get_den() == 0) throw InputError("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational: " + std::string(text));
  }
}

}  // namespace opplab
