#include "qb/ratpoly.hpp"

#include <stdexcept>

namespace qb {

RatPoly rp_trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int rp_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

bool rp_is_zero(const RatPoly& p) { return p.empty(); }

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return rp_trim(std::move(r));
}

RatPoly rp_neg(const RatPoly& a) {
  RatPoly r = a;
  for (auto& c : r) c = -c;
  return r;
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) { return rp_add(a, rp_neg(b)); }

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return rp_trim(std::move(r));
}

RatPoly rp_scale(const RatPoly& a, const Rational& c) {
  if (c == 0) return {};
  RatPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<RatPoly, RatPoly> rp_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw std::domain_error("rp_divmod: division by zero polynomial");
  RatPoly rem = a, quot;
  int db = rp_deg(b);
  if (rp_deg(a) >= db) quot.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (rp_deg(rem) >= db) {
    int k = rp_deg(rem) - db;
    Rational c = rem.back() / lead;
    quot[k] = c;
    for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
    rem = rp_trim(std::move(rem));
  }
  return {rp_trim(std::move(quot)), rem};
}

RatPoly rp_mod(const RatPoly& a, const RatPoly& b) { return rp_divmod(a, b).second; }

Rational rp_eval(const RatPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly rp_gcd(RatPoly a, RatPoly b) {
  a = rp_trim(std::move(a));
  b = rp_trim(std::move(b));
  while (!b.empty()) {
    RatPoly r = rp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) a = rp_scale(a, Rational(1) / a.back());
  return a;
}

RpXgcd rp_xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = rp_trim(a), r1 = rp_trim(b);
  RatPoly s0 = {Rational(1)}, s1 = {};
  RatPoly t0 = {}, t1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = rp_divmod(r0, r1);
    RatPoly s2 = rp_sub(s0, rp_mul(q, s1));
    RatPoly t2 = rp_sub(t0, rp_mul(q, t1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (!r0.empty() && r0.back() != 1) {
    Rational inv = Rational(1) / r0.back();
    r0 = rp_scale(r0, inv);
    s0 = rp_scale(s0, inv);
    t0 = rp_scale(t0, inv);
  }
  return {r0, s0, t0};
}

Rational rp_resultant(RatPoly a, RatPoly b) {
  a = rp_trim(std::move(a));
  b = rp_trim(std::move(b));
  if (a.empty() || b.empty()) return Rational(0);
  Rational res(1);
  int sign = 1;
  while (true) {
    int da = rp_deg(a), db = rp_deg(b);
    if (db == 0) {
      res *= rat_pow(b[0], da);
      break;
    }
    RatPoly r = rp_mod(a, b);
    if (r.empty()) return Rational(0);
    int dr = rp_deg(r);
    res *= rat_pow(b.back(), da - dr);
    if ((da % 2) && (db % 2)) sign = -sign;
    a = std::move(b);
    b = std::move(r);
  }
  return sign < 0 ? Rational(-res) : res;
}

}  // namespace qb
