#include <map>
#include <mutex>
#include <stdexcept>

#include "qb/geometry.hpp"

namespace qb {

namespace {

// Thrown when a truncated series computation loses all significant terms;
// callers retry with a longer truncation.
struct PrecisionLoss {};

// ---- truncated power series in a deformation parameter eps, coefficients in K(s) ----

struct Ser {
  const NumberField* K = nullptr;
  std::vector<RatFunc> c;

  Ser() = default;
  Ser(const NumberField* k, int n) : K(k), c(n, RatFunc::constant(k, k->zero())) {}
  int n() const { return static_cast<int>(c.size()); }

  Ser operator+(const Ser& o) const {
    Ser r = *this;
    for (int i = 0; i < n(); ++i) r.c[i] += o.c[i];
    return r;
  }
  Ser operator-(const Ser& o) const {
    Ser r = *this;
    for (int i = 0; i < n(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  Ser operator*(const Ser& o) const {
    Ser r(K, n());
    for (int i = 0; i < n(); ++i) {
      if (c[i].is_zero()) continue;
      for (int j = 0; i + j < n(); ++j) {
        if (o.c[j].is_zero()) continue;
        r.c[i + j] += c[i] * o.c[j];
      }
    }
    return r;
  }
};

Ser ser_const(const NumberField* K, int n, const RatFunc& f) {
  Ser r(K, n);
  r.c[0] = f;
  return r;
}

Ser ser_scale(const Ser& a, const RatFunc& f) {
  Ser r = a;
  for (auto& x : r.c) x *= f;
  return r;
}

int ser_ord(const Ser& a) {  // -1 if zero through the truncation order
  for (int i = 0; i < a.n(); ++i)
    if (!a.c[i].is_zero()) return i;
  return -1;
}

Ser ser_pow4(const Ser& a) {
  Ser a2 = a * a;
  return a2 * a2;
}

// (1 + d)^{1/m} for a series d with d(0) = 0, via the exact binomial series.
Ser ser_binom_root(const Ser& d, int m) {
  if (!d.c[0].is_zero()) throw std::logic_error("ser_binom_root: d(0) != 0");
  const NumberField* K = d.K;
  Ser acc = ser_const(K, d.n(), RatFunc::constant(K, K->one()));
  Ser dk = acc;
  Rational coef = rat(1);
  for (int k = 1; k < d.n(); ++k) {
    dk = dk * d;
    coef *= (rat(1, m) - rat(k - 1)) / rat(k);
    acc = acc + ser_scale(dk, RatFunc::constant(K, K->from_rational(coef)));
  }
  return acc;
}

// ---- Laurent series: eps^ord * unit with unit(0) != 0 ----

struct Laur {
  long ord;
  Ser unit;
};

Laur l_make(const Ser& s) {
  int o = ser_ord(s);
  if (o < 0) throw PrecisionLoss{};
  Ser u(s.K, s.n());
  for (int i = 0; o + i < s.n(); ++i) u.c[i] = s.c[o + i];
  return Laur{o, u};
}

Laur l_mul(const Laur& a, const Laur& b) { return Laur{a.ord + b.ord, a.unit * b.unit}; }

Laur l_div(const Laur& a, const Laur& b) {
  const Ser& bu = b.unit;
  int n = a.unit.n();
  Ser u(a.unit.K, n);
  RatFunc inv0 = bu.c[0].inverse();
  for (int k = 0; k < n; ++k) {
    RatFunc acc = a.unit.c[k];
    for (int j = 0; j < k; ++j) acc -= u.c[j] * bu.c[k - j];
    u.c[k] = acc * inv0;
  }
  return Laur{a.ord - b.ord, u};
}

Laur l_add(const Laur& a, const Laur& b) {
  long o = std::min(a.ord, b.ord);
  int n = a.unit.n();
  Ser s(a.unit.K, n);
  for (int i = 0; i < n; ++i) {
    long da = i - (a.ord - o), db = i - (b.ord - o);
    // s coefficient at eps^{o+i}
    RatFunc v = RatFunc::constant(s.K, s.K->zero());
    if (da >= 0 && da < n) v += a.unit.c[da];
    if (db >= 0 && db < n) v += b.unit.c[db];
    s.c[i] = v;
  }
  Laur r = l_make(s);
  r.ord += o;
  return r;
}

Laur l_neg(const Laur& a) {
  Laur r = a;
  for (auto& x : r.unit.c) x = -x;
  return r;
}

Laur l_sub(const Laur& a, const Laur& b) { return l_add(a, l_neg(b)); }

Laur l_pow(const Laur& a, long k) {
  Laur base = a;
  if (k < 0) {
    base = l_div(Laur{0, ser_const(a.unit.K, a.unit.n(), RatFunc::constant(a.unit.K, a.unit.K->one()))}, a);
    k = -k;
  }
  Laur r{0, ser_const(base.unit.K, base.unit.n(), RatFunc::constant(base.unit.K, base.unit.K->one()))};
  for (; k; k >>= 1) {
    if (k & 1) r = l_mul(r, base);
    base = l_mul(base, base);
  }
  return r;
}

// ---- arcs: one-parameter exact deformations off a line ----

struct Arc {
  const NumberField* K = nullptr;
  int n = 0;
  std::array<Ser, 3> xyz;  // chart coordinates x, y, z (w = 1)
  RatFunc pi_lead;         // leading coefficient of the fiber uniformizer
};

Laur arc_eval_generic(const SurfFunc& h, const Arc& a) {
  const NumberField* K = a.K;
  Ser zero(K, a.n), one = ser_const(K, a.n, RatFunc::constant(K, K->one()));
  auto cmap = [&](const NFElement& c) {
    return ser_const(K, a.n, RatFunc::constant(K, embed_to(c, *K)));
  };
  Ser num = mp_eval(h.num(), a.xyz, zero, one, cmap);
  Ser den = mp_eval(h.den(), a.xyz, zero, one, cmap);
  return l_div(l_make(num), l_make(den));
}

SurfFunc pi_for(const Line& l) {
  if (l.fiber == FiberId::Tinf) {
    const SurfFunc& t = sf_t();
    return SurfFunc(t.den(), t.num());  // 1/t
  }
  return sf_t_shift(fiber_value(l.fiber));
}

std::optional<Arc> try_arc(const Line& l, int n, const RatFunc& da, const RatFunc& db) {
  const NumberField* K = l.k;
  RatFunc X0(l.param[0], l.param[3]);
  RatFunc Y0(l.param[1], l.param[3]);
  RatFunc Z0(l.param[2], l.param[3]);
  Arc arc;
  arc.K = K;
  arc.n = n;
  arc.xyz = {ser_const(K, n, X0), ser_const(K, n, Y0), ser_const(K, n, Z0)};
  // Scaling the perturbation by Z0^4 keeps every series coefficient
  // denominator-free; residues do not depend on the choice of arc.
  RatFunc scale = Z0 * Z0 * Z0 * Z0;
  arc.xyz[0].c[1] = da * scale;
  arc.xyz[1].c[1] = db * scale;
  // Lift z so the arc satisfies x^4 - y^4 - z^4 + 1 = 0 to truncation order.
  Ser rel = ser_pow4(arc.xyz[0]) - ser_pow4(arc.xyz[1]) +
            ser_const(K, n, RatFunc::constant(K, K->one())) - ser_pow4(arc.xyz[2]);
  if (!rel.c[0].is_zero()) throw std::logic_error("line parametrization off the surface");
  Ser delta = ser_scale(rel, (Z0 * Z0 * Z0 * Z0).inverse());
  arc.xyz[2] = arc.xyz[2] * ser_binom_root(delta, 4);
  try {
    // The fiber uniformizer must have contact order exactly 1 along the arc.
    Laur pi = arc_eval_generic(pi_for(l), arc);
    if (pi.ord != 1) return std::nullopt;
    arc.pi_lead = pi.unit.c[0];
    return arc;
  } catch (const PrecisionLoss&) {
    // Degenerate deformation (e.g. sliding along the line itself).
    return std::nullopt;
  }
}

const Arc& line_arc(const Line& l, int n) {
  static std::map<std::pair<int, int>, Arc> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> g(mu);
  auto key = std::make_pair(l.id, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const NumberField* K = l.k;
  RatFunc one = RatFunc::constant(K, K->one());
  RatFunc zero = RatFunc::constant(K, K->zero());
  RatFunc s = RatFunc::variable(K);
  std::vector<std::pair<RatFunc, RatFunc>> cands = {{one, zero}, {zero, one}, {one, one}, {s, one}};
  for (const auto& [a, b] : cands) {
    auto arc = try_arc(l, n, a, b);
    if (arc) return cache.emplace(key, std::move(*arc)).first->second;
  }
  throw std::runtime_error("no transversal arc found for line " + std::to_string(l.id));
}

// F, G and v are evaluated through their factored closed forms (the "a"
// identities, machine-verified in the identity catalog); evaluating their
// expanded numerators is infeasible.
struct FactorSpec {
  NFElement cst;
  std::vector<std::pair<MPoly, long>> factors;
};

const FactorSpec* factored_form(const SurfFunc* p) {
  static const std::map<const SurfFunc*, FactorSpec> specs = [] {
    const NumberField* Qi = &field_Qi();
    MPoly x = MPoly::var(Qi, 0), y = MPoly::var(Qi, 1), z = MPoly::var(Qi, 2);
    MPoly one = MPoly::constant(Qi, rat(1));
    MPoly xmy = x - y;
    MPoly core = x.pow(3) * y - x * y.pow(3) - z.pow(3) + z;
    MPoly zm1 = z - one, zp1 = z + one, z2m1 = z * z - one;
    NFElement i = nf_i(*Qi);
    std::map<const SurfFunc*, FactorSpec> m;
    // F = (i-1)(x-y) B / ((z-1)^3 (z+1)^2)
    m.emplace(&sf_F(), FactorSpec{i - Qi->one(),
                                  {{sf_B().num(), 1}, {xmy, 1}, {zm1, -3}, {zp1, -2}}});
    // G = -2 (x-y)^2 (x^3 y - x y^3 - z^3 + z) / (z^2-1)^3
    m.emplace(&sf_G(), FactorSpec{Qi->from_rational(rat(-2)),
                                  {{xmy, 2}, {core, 1}, {z2m1, -3}}});
    // v = 2 (x-y) (x^3 y - x y^3 - z^3 + z) / ((z^2-1)^2 (z-1))
    m.emplace(&sf_v(), FactorSpec{Qi->from_rational(rat(2)),
                                  {{xmy, 1}, {core, 1}, {z2m1, -2}, {zm1, -1}}});
    return m;
  }();
  auto it = specs.find(p);
  return it == specs.end() ? nullptr : &it->second;
}

std::optional<Laur> arc_eval_fast(const SurfFunc& h, const Arc& a) {
  const FactorSpec* spec = factored_form(&h);
  if (!spec) return std::nullopt;
  const NumberField* K = a.K;
  Ser zero(K, a.n), one = ser_const(K, a.n, RatFunc::constant(K, K->one()));
  auto cmap = [&](const NFElement& c) {
    return ser_const(K, a.n, RatFunc::constant(K, embed_to(c, *K)));
  };
  // Accumulate numerator and denominator products separately: inverting a
  // series mid-computation produces coefficients far larger than the ones
  // appearing in the single final quotient.
  Laur num{0, ser_const(K, a.n, RatFunc::constant(K, embed_to(spec->cst, *K)))};
  Laur den{0, one};
  for (const auto& [mp, e] : spec->factors) {
    Laur lf = l_make(mp_eval(mp, a.xyz, zero, one, cmap));
    long k = e > 0 ? e : -e;
    if (k > 1) lf = l_pow(lf, k);
    (e > 0 ? num : den) = l_mul(e > 0 ? num : den, lf);
  }
  return l_div(num, den);
}

// Substitute the (projective) parametrization into a homogenized MPoly.
Poly eval_proj(const MPoly& p, const Line& l) {
  const NumberField* K = l.k;
  int d = p.total_deg();
  Poly acc(K);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(K, embed_to(c, *K));
    for (int i = 0; i < 3; ++i)
      if (e[i] > 0) term = term * l.param[i].pow(e[i]);
    int we = d - e[0] - e[1] - e[2];
    if (we > 0) term = term * l.param[3].pow(we);
    acc += term;
  }
  return acc;
}

// ---- line catalog ----

std::vector<Line> build_catalog() {
  const NumberField* Qi = &field_Qi();
  const NumberField* Q8 = &field_Qzeta8();
  NFElement i4 = nf_i(*Qi);
  NFElement a8 = Q8->gen();  // alpha = zeta_8, alpha^2 = i

  auto P = [](const NumberField* K, std::vector<NFElement> c) { return Poly(K, std::move(c)); };
  auto lin = [&](const NumberField* K, const NFElement& c1) {  // c1 * s
    return P(K, {K->zero(), c1});
  };
  auto cst = [&](const NumberField* K, const NFElement& c0) { return P(K, {c0}); };

  std::vector<Line> v;
  auto add = [&](int id, FiberId f, const NumberField* K, std::array<Poly, 4> pr,
                 std::string eq) { v.push_back(Line{id, f, K, std::move(pr), std::move(eq)}); };

  NFElement one = Qi->one(), mone = -Qi->one();
  // fiber t = 0
  add(1, FiberId::T0, Qi, {lin(Qi, one), lin(Qi, one), cst(Qi, i4), cst(Qi, one)}, "x=y, z=iw");
  add(2, FiberId::T0, Qi, {lin(Qi, one), lin(Qi, one), cst(Qi, -i4), cst(Qi, one)}, "x=y, z=-iw");
  add(3, FiberId::T0, Qi, {lin(Qi, mone), lin(Qi, one), cst(Qi, i4), cst(Qi, one)}, "x=-y, z=iw");
  add(4, FiberId::T0, Qi, {lin(Qi, mone), lin(Qi, one), cst(Qi, -i4), cst(Qi, one)},
      "x=-y, z=-iw");
  // fiber t = 1
  add(5, FiberId::T1, Qi, {lin(Qi, one), cst(Qi, one), lin(Qi, one), cst(Qi, one)}, "x=z, y=w");
  add(6, FiberId::T1, Qi, {lin(Qi, one), cst(Qi, mone), lin(Qi, one), cst(Qi, one)}, "x=z, y=-w");
  add(7, FiberId::T1, Qi, {lin(Qi, mone), cst(Qi, one), lin(Qi, one), cst(Qi, one)}, "x=-z, y=w");
  add(8, FiberId::T1, Qi, {lin(Qi, mone), cst(Qi, mone), lin(Qi, one), cst(Qi, one)},
      "x=-z, y=-w");
  // fiber t = -1
  add(9, FiberId::Tm1, Qi, {lin(Qi, i4), cst(Qi, i4), lin(Qi, one), cst(Qi, one)}, "x=iz, y=iw");
  add(10, FiberId::Tm1, Qi, {lin(Qi, i4), cst(Qi, -i4), lin(Qi, one), cst(Qi, one)},
      "x=iz, y=-iw");
  add(11, FiberId::Tm1, Qi, {lin(Qi, -i4), cst(Qi, i4), lin(Qi, one), cst(Qi, one)},
      "x=-iz, y=iw");
  add(12, FiberId::Tm1, Qi, {lin(Qi, -i4), cst(Qi, -i4), lin(Qi, one), cst(Qi, one)},
      "x=-iz, y=-iw");
  // fiber t = i  (alpha^2 = i)
  NFElement o8 = Q8->one();
  add(13, FiberId::Ti, Q8, {cst(Q8, o8), lin(Q8, o8), lin(Q8, a8), cst(Q8, a8)}, "w=ax, z=ay");
  add(14, FiberId::Ti, Q8, {cst(Q8, o8), lin(Q8, o8), lin(Q8, -a8), cst(Q8, a8)}, "w=ax, z=-ay");
  add(15, FiberId::Ti, Q8, {cst(Q8, o8), lin(Q8, o8), lin(Q8, a8), cst(Q8, -a8)}, "w=-ax, z=ay");
  add(16, FiberId::Ti, Q8, {cst(Q8, o8), lin(Q8, o8), lin(Q8, -a8), cst(Q8, -a8)},
      "w=-ax, z=-ay");
  // fiber t = -i
  add(17, FiberId::Tmi, Q8, {cst(Q8, a8), lin(Q8, a8), lin(Q8, o8), cst(Q8, o8)}, "x=aw, y=az");
  add(18, FiberId::Tmi, Q8, {cst(Q8, a8), lin(Q8, -a8), lin(Q8, o8), cst(Q8, o8)}, "x=aw, y=-az");
  add(19, FiberId::Tmi, Q8, {cst(Q8, -a8), lin(Q8, a8), lin(Q8, o8), cst(Q8, o8)}, "x=-aw, y=az");
  add(20, FiberId::Tmi, Q8, {cst(Q8, -a8), lin(Q8, -a8), lin(Q8, o8), cst(Q8, o8)},
      "x=-aw, y=-az");
  // fiber t = infinity
  add(21, FiberId::Tinf, Qi, {lin(Qi, i4), lin(Qi, one), cst(Qi, one), cst(Qi, one)},
      "x=iy, z=w");
  add(22, FiberId::Tinf, Qi, {lin(Qi, i4), lin(Qi, one), cst(Qi, mone), cst(Qi, one)},
      "x=iy, z=-w");
  add(23, FiberId::Tinf, Qi, {lin(Qi, -i4), lin(Qi, one), cst(Qi, one), cst(Qi, one)},
      "x=-iy, z=w");
  add(24, FiberId::Tinf, Qi, {lin(Qi, -i4), lin(Qi, one), cst(Qi, mone), cst(Qi, one)},
      "x=-iy, z=-w");
  return v;
}

}  // namespace

std::string fiber_name(FiberId f) {
  switch (f) {
    case FiberId::T0: return "0";
    case FiberId::T1: return "1";
    case FiberId::Tm1: return "-1";
    case FiberId::Ti: return "i";
    case FiberId::Tmi: return "-i";
    case FiberId::Tinf: return "inf";
  }
  return "?";
}

NFElement fiber_value(FiberId f) {
  const NumberField& Qi = field_Qi();
  switch (f) {
    case FiberId::T0: return Qi.zero();
    case FiberId::T1: return Qi.one();
    case FiberId::Tm1: return -Qi.one();
    case FiberId::Ti: return nf_i(Qi);
    case FiberId::Tmi: return -nf_i(Qi);
    default: throw std::invalid_argument("fiber_value: infinite fiber");
  }
}

const std::vector<Line>& line_catalog() {
  static const std::vector<Line> cat = build_catalog();
  return cat;
}

Restriction restrict_to_line(const SurfFunc& h, const Line& l) {
  Poly n = eval_proj(h.num(), l);
  Poly d = eval_proj(h.den(), l);
  int dn = h.num().total_deg(), dd = h.den().total_deg();
  if (!d.is_zero()) {
    if (n.is_zero()) return Restriction{Restriction::Zero, RatFunc()};
    Poly w = l.param[3];
    return Restriction{Restriction::Finite, RatFunc(n * w.pow(dd), d * w.pow(dn))};
  }
  if (!n.is_zero()) return Restriction{Restriction::Infinity, RatFunc()};
  ValRes vr = vertical_val_res(h, l);
  if (vr.v > 0) return Restriction{Restriction::Zero, RatFunc()};
  if (vr.v < 0) return Restriction{Restriction::Infinity, RatFunc()};
  return Restriction{Restriction::Finite, vr.sbar};
}

namespace {

// Result cache for the static catalog functions (addresses are stable).
bool cacheable(const SurfFunc* p) {
  if (factored_form(p) || p == &sf_t() || p == &sf_u() || p == &sf_f2()) return true;
  for (FiberId f : {FiberId::T1, FiberId::Tm1, FiberId::Ti, FiberId::Tmi})
    if (p == &sf_fiber_shift(f)) return true;
  return false;
}

}  // namespace

ValRes vertical_val_res(const SurfFunc& h, const Line& l) {
  static std::map<std::pair<const SurfFunc*, int>, ValRes> results;
  static std::mutex mu;
  if (cacheable(&h)) {
    std::lock_guard<std::mutex> g(mu);
    auto it = results.find({&h, l.id});
    if (it != results.end()) return it->second;
  }
  for (int n : {4, 8, 16, 32, 64}) {
    try {
      const Arc& arc = line_arc(l, n);
      std::optional<Laur> fast = arc_eval_fast(h, arc);
      Laur lh = fast ? *fast : arc_eval_generic(h, arc);
      long v = lh.ord;
      RatFunc sbar = lh.unit.c[0] / arc.pi_lead.pow(v);
      ValRes r{v, sbar};
      if (cacheable(&h)) {
        std::lock_guard<std::mutex> g(mu);
        results.emplace(std::make_pair(&h, l.id), r);
      }
      return r;
    } catch (const PrecisionLoss&) {
      continue;
    } catch (const std::invalid_argument&) {
      continue;  // zero series in a quotient: retry with more terms
    }
  }
  if (surf_is_zero(h)) throw std::invalid_argument("vertical_val_res: zero function");
  throw std::runtime_error("vertical_val_res: series precision exhausted");
}

std::map<int, long> vertical_divisor(const SurfFunc& h) {
  std::map<int, long> d;
  for (const Line& l : line_catalog()) {
    long v = vertical_val_res(h, l).v;
    if (v != 0) d[l.id] = v;
  }
  return d;
}

}  // namespace qb
