#pragma once
// Exact rational arithmetic helpers on top of GMP's mpq_class.

#include <gmpxx.h>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qb {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Parse "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational rat_parse(const std::string& s);

std::string rat_str(const Rational& r);

bool rat_is_integer(const Rational& r);

// r^k for k possibly negative (r != 0 in that case).
Rational rat_pow(const Rational& r, long k);

// 2-adic valuation of a nonzero rational.
long rat_val2(const Rational& r);

// p-adic valuation of a nonzero rational.
long rat_valp(const Rational& r, unsigned long p);

// Sign-and-prime-exponent factorization of a nonzero rational, found by
// trial division of numerator and denominator.
struct Factorization {
  int sign = 1;                       // +1 or -1
  std::map<Integer, long> exponents;  // prime -> exponent (may be negative)
};
Factorization rational_factor(const Rational& r);

// Exact rational n-th root if it exists (n >= 1).
std::optional<Rational> rat_nth_root(const Rational& r, int n);

}  // namespace qb
