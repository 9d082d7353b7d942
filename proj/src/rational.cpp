#include "qb/rational.hpp"

#include <stdexcept>

namespace qb {

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

bool rat_is_integer(const Rational& r) { return r.get_den() == 1; }

Rational rat_pow(const Rational& r, long k) {
  if (k == 0) return Rational(1);
  Rational base = r;
  if (k < 0) {
    if (r == 0) throw std::domain_error("rat_pow: 0 to negative power");
    base = Rational(1) / r;
    k = -k;
  }
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

long rat_val2(const Rational& r) { return rat_valp(r, 2); }

long rat_valp(const Rational& r, unsigned long p) {
  if (r == 0) throw std::domain_error("valuation of zero");
  Integer num = r.get_num(), den = r.get_den();
  long v = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    --v;
  }
  return v;
}

namespace {
void factor_integer(Integer n, long mult, Factorization& out) {
  // n > 0 here;  trial division is adequate for the magnitudes this
  // library produces (surface coefficients, table constants, norms).
  Integer p = 2;
  while (p * p <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      long e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++e;
      }
      out.exponents[p] += mult * e;
      if (out.exponents[p] == 0) out.exponents.erase(p);
    }
    p = (p == 2) ? Integer(3) : Integer(p + 2);
  }
  if (n > 1) {
    out.exponents[n] += mult;
    if (out.exponents[n] == 0) out.exponents.erase(n);
  }
}
}  // namespace

Factorization rational_factor(const Rational& r) {
  if (r == 0) throw std::domain_error("rational_factor: zero");
  Factorization f;
  Integer num = r.get_num(), den = r.get_den();
  if (num < 0) {
    f.sign = -1;
    num = -num;
  }
  factor_integer(num, +1, f);
  factor_integer(den, -1, f);
  return f;
}

std::optional<Rational> rat_nth_root(const Rational& r, int n) {
  if (n < 1) throw std::invalid_argument("rat_nth_root: n < 1");
  if (n == 1) return r;
  if (r == 0) return Rational(0);
  if (r < 0 && n % 2 == 0) return std::nullopt;
  Integer num = abs(r.get_num()), den = r.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n)) return std::nullopt;
  Rational root(rn, rd);
  root.canonicalize();
  if (r < 0) root = -root;
  return root;
}

}  // namespace qb
