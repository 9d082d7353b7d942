#pragma once
// Dense univariate polynomials over Q: just enough machinery for number
// field arithmetic (mod-minpoly reduction, inverses, resultants).

#include <utility>
#include <vector>

#include "qb/rational.hpp"

namespace qb {

// Coefficient vector, index = degree.  Normalized form has no trailing zeros
// (the zero polynomial is the empty vector).
using RatPoly = std::vector<Rational>;

RatPoly rp_trim(RatPoly p);
int rp_deg(const RatPoly& p);  // -1 for zero
bool rp_is_zero(const RatPoly& p);
RatPoly rp_add(const RatPoly& a, const RatPoly& b);
RatPoly rp_sub(const RatPoly& a, const RatPoly& b);
RatPoly rp_neg(const RatPoly& a);
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_scale(const RatPoly& a, const Rational& c);
// Quotient and remainder; divisor must be nonzero.
std::pair<RatPoly, RatPoly> rp_divmod(const RatPoly& a, const RatPoly& b);
RatPoly rp_mod(const RatPoly& a, const RatPoly& b);
Rational rp_eval(const RatPoly& p, const Rational& x);

// Monic gcd.
RatPoly rp_gcd(RatPoly a, RatPoly b);

// Extended gcd: returns (g, s, t) with g = s*a + t*b, g monic (or zero).
struct RpXgcd {
  RatPoly g, s, t;
};
RpXgcd rp_xgcd(const RatPoly& a, const RatPoly& b);

// Resultant Res_x(a, b).
Rational rp_resultant(RatPoly a, RatPoly b);

}  // namespace qb
