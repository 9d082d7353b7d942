#include "qb/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace qb {

MPoly MPoly::constant(const NumberField* K, const NFElement& c) {
  MPoly p(K);
  p.add_term({0, 0, 0}, c);
  return p;
}

MPoly MPoly::constant(const NumberField* K, const Rational& c) {
  return constant(K, K->from_rational(c));
}

MPoly MPoly::var(const NumberField* K, int i, int e) {
  MPoly p(K);
  Expo ex{0, 0, 0};
  ex[i] = e;
  p.add_term(ex, K->one());
  return p;
}

bool MPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo{0, 0, 0});
}

NFElement MPoly::constant_value() const {
  auto it = t_.find({0, 0, 0});
  return it == t_.end() ? K_->zero() : it->second;
}

int MPoly::deg_in(int v) const {
  int d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e[v]);
  return d;
}

int MPoly::total_deg() const {
  int d = -1;
  for (const auto& [e, c] : t_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

void MPoly::add_term(const Expo& e, const NFElement& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(K_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.t_) r.add_term(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.t_) r.add_term(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.K_ ? a.K_ : b.K_);
  for (const auto& [ea, ca] : a.t_)
    for (const auto& [eb, cb] : b.t_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) { return (a - b).is_zero(); }

MPoly MPoly::pow(long k) const {
  if (k < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
  MPoly r = constant(K_, K_->one());
  MPoly base = *this;
  for (; k; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

MPoly MPoly::reduce_mod(const MPoly& rel, int v) const {
  int d = rel.deg_in(v);
  // Locate the leading term in v; it must be a pure power of v with a
  // nonzero constant coefficient for the rewrite to terminate.
  NFElement lc = K_->zero();
  for (const auto& [e, c] : rel.t_)
    if (e[v] == d) {
      if (e[(v + 1) % 3] != 0 || e[(v + 2) % 3] != 0)
        throw std::invalid_argument("reduce_mod: leading coefficient not constant");
      lc = c;
    }
  MPoly tail = rel;  // rel minus its leading term, negated: v^d = -tail/lc
  {
    Expo lead{0, 0, 0};
    lead[v] = d;
    tail.add_term(lead, -lc);
  }
  MPoly rest = -tail;
  NFElement inv_lc = lc.inverse();

  MPoly cur = *this;
  for (;;) {
    // Find a term with v-degree >= d.
    const std::pair<const Expo, NFElement>* hit = nullptr;
    int best = d - 1;
    for (const auto& kv : cur.t_)
      if (kv.first[v] > best) {
        best = kv.first[v];
        hit = &kv;
      }
    if (!hit) return cur;
    Expo e = hit->first;
    NFElement c = hit->second;
    Expo shift = e;
    shift[v] = e[v] - d;
    MPoly mono(K_);
    mono.add_term(shift, c * inv_lc);
    MPoly lead_only(K_);
    lead_only.add_term(e, c);
    cur = (cur - lead_only) + mono * rest;
  }
}

std::string MPoly::str(const std::array<std::string, 3>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      os << "*" << names[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

SurfFunc::SurfFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("SurfFunc: zero denominator");
}

SurfFunc::SurfFunc(MPoly num)
    : num_(std::move(num)), den_(MPoly::constant(num_.field(), num_.field()->one())) {}

SurfFunc SurfFunc::constant(const NumberField* K, const NFElement& c) {
  return SurfFunc(MPoly::constant(K, c));
}

SurfFunc SurfFunc::operator-() const { return SurfFunc(-num_, den_); }

SurfFunc SurfFunc::inverse() const {
  if (num_.is_zero()) throw std::invalid_argument("SurfFunc::inverse of zero");
  return SurfFunc(den_, num_);
}

SurfFunc SurfFunc::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  return SurfFunc(num_.pow(k), den_.pow(k));
}

SurfFunc operator+(const SurfFunc& a, const SurfFunc& b) {
  return SurfFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

SurfFunc operator-(const SurfFunc& a, const SurfFunc& b) {
  return SurfFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

SurfFunc operator*(const SurfFunc& a, const SurfFunc& b) {
  return SurfFunc(a.num_ * b.num_, a.den_ * b.den_);
}

SurfFunc operator/(const SurfFunc& a, const SurfFunc& b) {
  if (b.num_.is_zero()) throw std::invalid_argument("SurfFunc: division by zero");
  return SurfFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string SurfFunc::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

}  // namespace qb
