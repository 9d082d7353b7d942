#include "qb/geometry.hpp"

#include <stdexcept>

namespace qb {

namespace {

const NumberField* Qi() { return &field_Qi(); }

MPoly X() { return MPoly::var(Qi(), 0); }
MPoly Y() { return MPoly::var(Qi(), 1); }
MPoly Z() { return MPoly::var(Qi(), 2); }
MPoly C(long n) { return MPoly::constant(Qi(), rat(n)); }
MPoly CI(long re, long im) {  // re + im*i
  return MPoly::constant(Qi(), Qi()->element({rat(re), rat(im)}));
}

}  // namespace

const MPoly& surface_relation() {
  static const MPoly r = X().pow(4) - Y().pow(4) - Z().pow(4) + C(1);
  return r;
}

const SurfFunc& sf_t() {
  static const SurfFunc t(X() * X() - Y() * Y(), Z() * Z() - C(1));
  return t;
}

const SurfFunc& sf_u() {
  static const SurfFunc u(X() - Y(), Z() - C(1));
  return u;
}

const SurfFunc& sf_f2() {
  static const SurfFunc f2(X() + Y(), Z() - C(1));
  return f2;
}

const SurfFunc& sf_v() {
  static const SurfFunc v = [] {
    const SurfFunc& t = sf_t();
    const SurfFunc& u = sf_u();
    return (t.pow(3) - u * u) * sf_f2() / t;
  }();
  return v;
}

const SurfFunc& sf_G() {
  static const SurfFunc g = [] {
    const SurfFunc& t = sf_t();
    const SurfFunc& u = sf_u();
    return u * u - t.pow(3);
  }();
  return g;
}

const SurfFunc& sf_F() {
  static const SurfFunc f = [] {
    const SurfFunc& t = sf_t();
    SurfFunc i = SurfFunc::constant(Qi(), nf_i(*Qi()));
    SurfFunc one = SurfFunc::constant(Qi(), Qi()->one());
    return sf_v() - i * (t * t - one) * sf_u();
  }();
  return f;
}

const SurfFunc& sf_B() {
  static const SurfFunc b = [] {
    MPoly x = X(), y = Y(), z = Z();
    MPoly p = y * y * x * x - z - CI(0, 1) + z.pow(3) + y.pow(3) * x + z.pow(4) - x.pow(4) -
              y * x.pow(3) + CI(0, 1) * y.pow(4) - CI(0, 1) * y * x.pow(3) +
              CI(0, 1) * y.pow(3) * x - CI(0, 1) * y * y * x * x - CI(0, 1) * z +
              CI(0, 1) * z.pow(3) + CI(0, 1) * z * z - z * z;
    return SurfFunc(p);
  }();
  return b;
}

const SurfFunc& sf_A(int j) {
  static const std::vector<SurfFunc> as = [] {
    MPoly x = X(), y = Y(), z = Z();
    MPoly z2m1 = z * z - C(1);
    MPoly x2my2 = x * x - y * y;
    std::vector<SurfFunc> v;
    v.push_back(SurfFunc(CI(1, 1) * (z - C(1)) * (x - y)) * sf_B());
    v.push_back(SurfFunc((C(-1) + z * z + x2my2) * (C(-1) + z * z - CI(0, 1) * x2my2)));
    v.push_back(SurfFunc(C(2) * z2m1 * (-y * x.pow(3) + y.pow(3) * x - z + z.pow(3))));
    v.push_back(SurfFunc(CI(1, 1) * z2m1 * (C(-1) + z * z + x2my2)));
    v.push_back(SurfFunc(z2m1 * (x2my2 + CI(0, 1) * z * z - CI(0, 1))));
    return v;
  }();
  if (j < 1 || j > 5) throw std::invalid_argument("sf_A: index out of range");
  return as[j - 1];
}

SurfFunc sf_t_shift(const NFElement& t0) {
  const SurfFunc& t = sf_t();
  return SurfFunc(t.num() - MPoly::constant(Qi(), t0) * t.den(), t.den());
}

const SurfFunc& sf_fiber_shift(FiberId f) {
  if (f == FiberId::T0) return sf_t();
  static const SurfFunc t1 = sf_t_shift(Qi()->one());
  static const SurfFunc tm1 = sf_t_shift(-Qi()->one());
  static const SurfFunc ti = sf_t_shift(nf_i(*Qi()));
  static const SurfFunc tmi = sf_t_shift(-nf_i(*Qi()));
  switch (f) {
    case FiberId::T1: return t1;
    case FiberId::Tm1: return tm1;
    case FiberId::Ti: return ti;
    case FiberId::Tmi: return tmi;
    default: throw std::invalid_argument("sf_fiber_shift: infinite fiber");
  }
}

SurfFunc sf_coord(int i) { return SurfFunc(MPoly::var(Qi(), i)); }

bool surf_is_zero(const SurfFunc& h) {
  return h.num().reduce_mod(surface_relation(), 2).is_zero();
}

bool surf_equal(const SurfFunc& a, const SurfFunc& b) { return surf_is_zero(a - b); }

}  // namespace qb
