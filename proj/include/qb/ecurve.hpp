#pragma once
// Chord-tangent arithmetic on y^2 = x^3 + a2 x^2 + a4 x + a6 over any exact
// field type with +, -, *, / and ==.

#include <stdexcept>

namespace qb {

template <class F>
struct Curve {
  F a2, a4, a6;
  F one;  // multiplicative identity of F
};

template <class F>
struct ECPoint {
  bool inf = true;
  F x{}, y{};
};

template <class F>
ECPoint<F> ec_infinity() {
  return ECPoint<F>{};
}

template <class F>
ECPoint<F> ec_point(const F& x, const F& y) {
  return ECPoint<F>{false, x, y};
}

template <class F>
bool ec_on_curve(const Curve<F>& E, const ECPoint<F>& P) {
  if (P.inf) return true;
  return P.y * P.y == ((P.x + E.a2) * P.x + E.a4) * P.x + E.a6;
}

template <class F>
ECPoint<F> ec_neg(const Curve<F>&, const ECPoint<F>& P) {
  if (P.inf) return P;
  ECPoint<F> r = P;
  r.y = P.y - P.y - P.y;  // -y without requiring unary minus on F
  return r;
}

template <class F>
bool ec_equal(const ECPoint<F>& P, const ECPoint<F>& Q) {
  if (P.inf || Q.inf) return P.inf == Q.inf;
  return P.x == Q.x && P.y == Q.y;
}

template <class F>
ECPoint<F> ec_add(const Curve<F>& E, const ECPoint<F>& P, const ECPoint<F>& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  const F& one = E.one;
  F two = one + one;
  F zero = one - one;
  if (P.x == Q.x) {
    if (P.y + Q.y == zero) return ec_infinity<F>();
    // tangent line
    F num = (two + one) * P.x * P.x + two * E.a2 * P.x + E.a4;
    F lam = num / (two * P.y);
    F x3 = lam * lam - E.a2 - P.x - Q.x;
    F y3 = lam * (P.x - x3) - P.y;
    return ec_point(x3, y3);
  }
  F lam = (Q.y - P.y) / (Q.x - P.x);
  F x3 = lam * lam - E.a2 - P.x - Q.x;
  F y3 = lam * (P.x - x3) - P.y;
  return ec_point(x3, y3);
}

template <class F>
ECPoint<F> ec_mul(const Curve<F>& E, ECPoint<F> P, long n) {
  if (n < 0) {
    n = -n;
    if (!P.inf) P.y = P.y - P.y - P.y;
  }
  ECPoint<F> r = ec_infinity<F>();
  for (; n; n >>= 1) {
    if (n & 1) r = ec_add(E, r, P);
    P = ec_add(E, P, P);
  }
  return r;
}

}  // namespace qb
