#include "qb/residues.hpp"

#include <sstream>
#include <stdexcept>

namespace qb {

namespace {

const NumberField* Qi() { return &field_Qi(); }

long mod_n(long e, int n) { return ((e % n) + n) % n; }

// Split a nonzero rational function into leading constant and monic/monic part.
void split_lead(const RatFunc& r, NFElement& cst, RatFunc& func) {
  cst = r.num().lead();  // denominator is monic by RatFunc invariant
  func = RatFunc(r.num().monic(), r.den());
}

}  // namespace

const SurfFunc& atom_func(Atom a) {
  switch (a) {
    case Atom::F: return sf_F();
    case Atom::G: return sf_G();
    case Atom::T: return sf_t();
    case Atom::Tp1: return sf_fiber_shift(FiberId::Tm1);  // t+1 vanishes at t=-1
    case Atom::Tm1: return sf_fiber_shift(FiberId::T1);
    case Atom::Tpi: return sf_fiber_shift(FiberId::Tmi);
    default: return sf_fiber_shift(FiberId::Ti);  // Tmi: t-i
  }
}

std::string atom_name(Atom a) {
  switch (a) {
    case Atom::F: return "F";
    case Atom::G: return "G";
    case Atom::T: return "t";
    case Atom::Tp1: return "t+1";
    case Atom::Tm1: return "t-1";
    case Atom::Tpi: return "t+i";
    default: return "t-i";
  }
}

TrackedElt TrackedElt::constant(const NFElement& c) {
  if (c.is_zero()) throw std::invalid_argument("TrackedElt: zero constant");
  TrackedElt e;
  e.cst = c;
  return e;
}

TrackedElt TrackedElt::atom(Atom a, int e) {
  TrackedElt t = constant(Qi()->one());
  if (e != 0) t.exps[a] = e;
  return t;
}

TrackedElt TrackedElt::param_a() {
  TrackedElt t = constant(Qi()->one());
  t.ea = 1;
  return t;
}

TrackedElt TrackedElt::param_b() {
  TrackedElt t = constant(Qi()->one());
  t.eb = 1;
  return t;
}

TrackedElt TrackedElt::pow(int k) const {
  TrackedElt r;
  r.cst = cst.pow(k);
  if (k != 0)
    for (auto& [a, e] : exps) r.exps[a] = e * k;
  r.ea = ea * k;
  r.eb = eb * k;
  return r;
}

TrackedElt operator*(const TrackedElt& x, const TrackedElt& y) {
  TrackedElt r = x;
  r.cst = x.cst * y.cst;
  for (auto& [a, e] : y.exps) {
    r.exps[a] += e;
    if (r.exps[a] == 0) r.exps.erase(a);
  }
  r.ea += y.ea;
  r.eb += y.eb;
  return r;
}

std::string TrackedElt::str() const {
  std::ostringstream os;
  os << "(" << cst.str() << ")";
  for (auto& [a, e] : exps) os << "*(" << atom_name(a) << ")^" << e;
  if (ea) os << "*a^" << ea;
  if (eb) os << "*b^" << eb;
  return os.str();
}

long TrackedElt::val_at(const Line& l) const {
  long v = 0;
  for (auto& [a, e] : exps) v += e * vertical_val_res(atom_func(a), l).v;
  return v;
}

RatFunc TrackedElt::restrict_at(const Line& l) const {
  if (val_at(l) != 0) throw std::logic_error("TrackedElt::restrict_at: nonzero valuation");
  RatFunc r = RatFunc::constant(l.k, embed_to(cst, *l.k));
  for (auto& [a, e] : exps) r *= vertical_val_res(atom_func(a), l).sbar.pow(e);
  return r;
}

std::string Symbol::str() const {
  return "(" + left.str() + "," + right.str() + ")_" + std::to_string(n);
}

BrauerElement operator+(const BrauerElement& x, const BrauerElement& y) {
  BrauerElement r = x;
  r.terms.insert(r.terms.end(), y.terms.begin(), y.terms.end());
  return r;
}

std::string BrauerElement::str() const {
  std::string s;
  for (const Symbol& t : terms) s += (s.empty() ? "" : " + ") + t.str();
  return s;
}

bool ResidueClass::same_class(const ResidueClass& o) const {
  if (n != o.n) throw std::invalid_argument("ResidueClass: mixed n");
  if (mod_n(exp_a - o.exp_a, n) != 0 || mod_n(exp_b - o.exp_b, n) != 0) return false;
  std::optional<NFElement> c = rf_nth_power_up_to_const(func / o.func, n);
  if (!c) return false;
  if (mode.field == nullptr) return true;
  NFElement ratio = embed_to(cst * *c, *mode.field) / embed_to(o.cst, *mode.field);
  return nf_is_nth_power(ratio, n);
}

bool ResidueClass::is_trivial() const {
  ResidueClass triv = *this;
  triv.cst = k->one();
  triv.func = RatFunc::constant(k, k->one());
  triv.exp_a = triv.exp_b = 0;
  return same_class(triv);
}

ResidueClass ResidueClass::to_mu4() const {
  if (n == 4) return *this;
  ResidueClass r = *this;
  r.n = 4;
  r.cst = cst * cst;
  r.func = func * func;
  r.exp_a = mod_n(2 * exp_a, 4);
  r.exp_b = mod_n(2 * exp_b, 4);
  return r;
}

std::string ResidueClass::str() const {
  std::ostringstream os;
  os << "(" << cst.str() << ")";
  if (!func.is_constant()) os << "*" << func.str();
  if (exp_a) os << "*a^" << exp_a;
  if (exp_b) os << "*b^" << exp_b;
  os << " mod " << n << "th powers";
  return os.str();
}

ResidueClass tame_residue(const Symbol& s, const Line& l, Mode mode) {
  long va = s.left.val_at(l), vb = s.right.val_at(l);
  TrackedElt u = s.left.pow(static_cast<int>(vb)) * s.right.pow(static_cast<int>(-va));
  if ((va * vb) % 2 != 0) u.cst = -u.cst;
  RatFunc r = u.restrict_at(l);
  ResidueClass rc;
  rc.k = l.k;
  rc.mode = mode;
  rc.n = s.n;
  split_lead(r, rc.cst, rc.func);
  rc.exp_a = mod_n(u.ea, s.n);
  rc.exp_b = mod_n(u.eb, s.n);
  return rc;
}

ResidueClass brauer_residue(const BrauerElement& e, const Line& l, Mode mode) {
  if (e.terms.empty()) throw std::invalid_argument("brauer_residue: empty element");
  int n = 2;
  for (const Symbol& s : e.terms)
    if (s.n == 4) n = 4;
  ResidueClass acc;
  bool first = true;
  for (const Symbol& s : e.terms) {
    ResidueClass rc = tame_residue(s, l, mode);
    if (n == 4) rc = rc.to_mu4();
    if (first) {
      acc = rc;
      first = false;
      continue;
    }
    acc.cst *= rc.cst;
    acc.func *= rc.func;
    acc.exp_a = mod_n(acc.exp_a + rc.exp_a, n);
    acc.exp_b = mod_n(acc.exp_b + rc.exp_b, n);
  }
  return acc;
}

std::vector<int> purity_scan(const BrauerElement& e, Mode mode) {
  std::vector<int> bad;
  for (const Line& l : line_catalog())
    if (!brauer_residue(e, l, mode).is_trivial()) bad.push_back(l.id);
  return bad;
}

namespace {

NFElement one_plus_i() { return Qi()->element({rat(1), rat(1)}); }

BrauerElement build_brel(const std::string& name) {
  using TE = TrackedElt;
  TE F = TE::atom(Atom::F), G = TE::atom(Atom::G), T = TE::atom(Atom::T);
  TE Tp1 = TE::atom(Atom::Tp1), Tpi = TE::atom(Atom::Tpi);
  Symbol s_fg_t1{2, F * G, Tp1};       // (FG, t+1)_2
  Symbol s_f_ti{2, F, Tpi};            // (F, t+i)_2
  Symbol s_z{4, T, F.pow(2) * G};      // (t, F^2 G)_4
  Symbol s_1i{2, TE::constant(one_plus_i()), Tpi * G};  // (1+i, (t+i)G)_2
  if (name == "A") return {{s_fg_t1, s_f_ti}};
  if (name == "D") return {{s_z, s_fg_t1}};
  if (name == "E") return {{s_z, s_f_ti}};
  if (name == "Z") return {{s_z}};
  if (name == "B") return build_brel("A") + BrauerElement{{s_1i}};
  if (name == "E1") return build_brel("E") + BrauerElement{{s_1i}};
  throw std::invalid_argument("brel: unknown name " + name);
}

}  // namespace

const BrauerElement& brel(const std::string& name) {
  static const std::map<std::string, BrauerElement> cat = [] {
    std::map<std::string, BrauerElement> m;
    for (const char* n : {"A", "D", "E", "Z", "B", "E1"}) m.emplace(n, build_brel(n));
    return m;
  }();
  auto it = cat.find(name);
  if (it == cat.end()) throw std::invalid_argument("brel: unknown name " + name);
  return it->second;
}

BrauerElement variant_x(int j) {
  if (j < 1 || j > 3) throw std::invalid_argument("variant_x: j must be 1, 2 or 3");
  const char* base[] = {"A", "D", "E"};
  Symbol sa{2, TrackedElt::param_a(), TrackedElt::atom(Atom::F)};
  Symbol sb{2, TrackedElt::param_b(), TrackedElt::atom(Atom::G)};
  return brel(base[j - 1]) + BrauerElement{{sa, sb}};
}

BrauerElement variant_x(int j, const NFElement& a, const NFElement& b) {
  if (j < 1 || j > 3) throw std::invalid_argument("variant_x: j must be 1, 2 or 3");
  const char* base[] = {"A", "D", "E"};
  Symbol sa{2, TrackedElt::constant(a), TrackedElt::atom(Atom::F)};
  Symbol sb{2, TrackedElt::constant(b), TrackedElt::atom(Atom::G)};
  return brel(base[j - 1]) + BrauerElement{{sa, sb}};
}

std::vector<TableRow> residue_table(int variant, const NumberField& field) {
  BrauerElement x = variant_x(variant);
  std::vector<TableRow> rows;
  for (const Line& l : line_catalog())
    rows.push_back({l.id, brauer_residue(x, l, arithmetic(field))});
  return rows;
}

bool row_matches(const ResidueClass& rc, const NFElement& printed, int pa, int pb) {
  ResidueClass expect;
  expect.k = rc.k;
  expect.mode = rc.mode;
  expect.n = 2;
  expect.cst = printed;  // embedded into the comparison field by same_class
  expect.func = RatFunc::constant(rc.k, rc.k->one());
  expect.exp_a = mod_n(pa, 2);
  expect.exp_b = mod_n(pb, 2);
  if (rc.n == 4) expect = expect.to_mu4();
  return rc.same_class(expect);
}

}  // namespace qb
