#include "qb/funcfield.hpp"

#include <sstream>
#include <stdexcept>

namespace qb {

// ---------------------------------------------------------------------- Poly

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(const NumberField* K, std::vector<NFElement> c) : K_(K), c_(std::move(c)) { trim(); }

Poly Poly::constant(const NumberField* K, const NFElement& v) { return Poly(K, {v}); }
Poly Poly::constant(const NumberField* K, const Rational& v) {
  return Poly(K, {K->from_rational(v)});
}
Poly Poly::variable(const NumberField* K) { return Poly(K, {K->zero(), K->one()}); }

NFElement Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return K_->zero();
  return c_[i];
}

const NFElement& Poly::lead() const {
  if (c_.empty()) throw std::domain_error("Poly::lead of zero");
  return c_.back();
}

static void poly_check(const Poly& a, const Poly& b) {
  if (a.field() == nullptr || a.field() != b.field())
    throw std::invalid_argument("Poly: field mismatch");
}

Poly Poly::operator-() const {
  std::vector<NFElement> c = c_;
  for (auto& x : c) x = -x;
  return Poly(K_, std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  poly_check(a, b);
  std::vector<NFElement> c(std::max(a.c_.size(), b.c_.size()), a.K_->zero());
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(a.K_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  poly_check(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.K_);
  std::vector<NFElement> c(a.c_.size() + b.c_.size() - 1, a.K_->zero());
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(a.K_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
  poly_check(a, b);
  return a.c_ == b.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  poly_check(*this, d);
  if (d.is_zero()) throw std::domain_error("Poly: division by zero");
  std::vector<NFElement> rem = c_;
  int dd = d.deg();
  std::vector<NFElement> quot;
  if (deg() >= dd) quot.assign(deg() - dd + 1, K_->zero());
  NFElement linv = d.lead().inverse();
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= dd) {
    if (!rem[dr].is_zero()) {
      NFElement f = rem[dr] * linv;
      quot[dr - dd] = f;
      for (int i = 0; i <= dd; ++i) rem[dr - dd + i] -= f * d.c_[i];
    }
    --dr;
  }
  return {Poly(K_, std::move(quot)), Poly(K_, std::move(rem))};
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(K_);
  std::vector<NFElement> c(c_.size() - 1, K_->zero());
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * K_->from_rational(Rational((long)i));
  return Poly(K_, std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  NFElement linv = lead().inverse();
  std::vector<NFElement> c = c_;
  for (auto& x : c) x *= linv;
  return Poly(K_, std::move(c));
}

Poly Poly::pow(long k) const {
  if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly acc = Poly::constant(K_, K_->one());
  Poly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

NFElement Poly::eval(const NFElement& a) const {
  NFElement acc = K_->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * a + *it;
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].str() << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<SquarefreePart> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_decomposition of zero");
  std::vector<SquarefreePart> out;
  Poly w = f.monic();
  if (w.deg() == 0) return out;
  // Yun's algorithm (characteristic 0).
  Poly d = w.derivative();
  Poly g = poly_gcd(w, d);
  Poly c = w.divmod(g).first;          // product of distinct factors
  Poly z = d.divmod(g).first - c.derivative();
  int i = 1;
  while (c.deg() > 0) {
    Poly a = poly_gcd(c, z);
    if (a.deg() > 0) out.push_back({a, i});
    c = c.divmod(a).first;
    z = z.divmod(a).first - c.derivative();
    ++i;
  }
  return out;
}

// ------------------------------------------------------------------- RatFunc

namespace {

// Index of the lowest nonzero coefficient (valuation at s = 0); -1 for zero.
int poly_low(const Poly& p) {
  for (int i = 0; i <= p.deg(); ++i)
    if (!p.coeff(i).is_zero()) return i;
  return -1;
}

Poly poly_shift_down(const Poly& p, int k) {  // divide by s^k
  std::vector<NFElement> c;
  for (int i = k; i <= p.deg(); ++i) c.push_back(p.coeff(i));
  return Poly(p.field(), std::move(c));
}

bool poly_is_monomial(const Poly& p) { return poly_low(p) == p.deg(); }

}  // namespace

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), num_.field()->one());
    return;
  }
  // Strip the common power of s, then skip the gcd when one side is a
  // monomial or constant (coprimality is then automatic).
  int m = std::min(poly_low(num_), poly_low(den_));
  if (m > 0) {
    num_ = poly_shift_down(num_, m);
    den_ = poly_shift_down(den_, m);
  }
  bool coprime = num_.is_constant() || den_.is_constant() || poly_is_monomial(num_) ||
                 poly_is_monomial(den_);
  if (!coprime) {
    Poly g = poly_gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  if (!(den_.lead() == num_.field()->one())) {
    NFElement linv = den_.lead().inverse();
    num_ = num_ * Poly::constant(num_.field(), linv);
    den_ = den_ * Poly::constant(num_.field(), linv);
  }
}

RatFunc::RatFunc(Poly num) : num_(std::move(num)) {
  den_ = Poly::constant(num_.field(), num_.field()->one());
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

RatFunc RatFunc::constant(const NumberField* K, const NFElement& v) {
  return RatFunc(Poly::constant(K, v));
}

RatFunc RatFunc::variable(const NumberField* K) { return RatFunc(Poly::variable(K)); }

NFElement RatFunc::constant_value() const {
  if (!is_constant()) throw std::domain_error("RatFunc: not constant");
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc acc = RatFunc::constant(field(), field()->one());
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

NFElement RatFunc::eval(const NFElement& a) const {
  NFElement d = den_.eval(a);
  if (d.is_zero()) throw std::domain_error("RatFunc::eval: pole");
  return num_.eval(a) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.is_constant() && den_.coeff(0) == field()->one()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

// -------------------------------------------------------------------- places

Place place_finite(Poly p) {
  if (p.deg() < 1) throw std::invalid_argument("place_finite: need positive degree");
  return Place{false, p.monic()};
}

Place place_of_value(const NumberField* K, const NFElement& a) {
  return Place{false, Poly(K, {-a, K->one()})};
}

Place place_infinity(const NumberField* K) { return Place{true, Poly(K)}; }

static long poly_val_at(const Poly& f, const Poly& p) {
  long v = 0;
  Poly w = f;
  for (;;) {
    auto [q, r] = w.divmod(p);
    if (!r.is_zero()) return v;
    ++v;
    w = std::move(q);
  }
}

long rf_val(const RatFunc& f, const Place& v) {
  if (f.is_zero()) throw std::domain_error("rf_val of zero");
  if (v.at_infinity) return f.den().deg() - f.num().deg();
  return poly_val_at(f.num(), v.p) - poly_val_at(f.den(), v.p);
}

NFElement rf_unit_part(const RatFunc& f, const Place& v) {
  if (f.is_zero()) throw std::domain_error("rf_unit_part of zero");
  if (v.at_infinity) return f.num().lead() / f.den().lead();
  if (v.p.deg() != 1)
    throw std::domain_error("rf_unit_part: finite place must have degree 1");
  NFElement a = -v.p.coeff(0);  // p = s - a
  auto strip = [&](Poly w) {
    for (;;) {
      auto [q, r] = w.divmod(v.p);
      if (!r.is_zero()) return w;
      w = std::move(q);
    }
  };
  Poly n = strip(f.num()), d = strip(f.den());
  return n.eval(a) / d.eval(a);
}

std::optional<NFElement> rf_nth_power_up_to_const(const RatFunc& f, int n) {
  if (f.is_zero()) throw std::domain_error("rf_nth_power_up_to_const of zero");
  if (n < 1) throw std::invalid_argument("rf_nth_power_up_to_const: n < 1");
  const NumberField* K = f.field();
  Poly g_num = Poly::constant(K, K->one());
  Poly g_den = g_num;
  for (const Poly* side : {&f.num(), &f.den()}) {
    if (side->deg() == 0) continue;
    Poly& acc = (side == &f.num()) ? g_num : g_den;
    for (const auto& [part, mult] : squarefree_decomposition(*side)) {
      if (mult % n != 0) return std::nullopt;
      acc = acc * part.pow(mult / n);
    }
  }
  RatFunc g(g_num, g_den);
  RatFunc c = RatFunc(f.num(), f.den()) / g.pow(n);
  if (!c.is_constant()) throw std::logic_error("rf_nth_power_up_to_const: internal");
  return c.constant_value();
}

}  // namespace qb
