#include <sstream>
#include <stdexcept>

#include "qb/residues.hpp"

namespace qb {

namespace {

long mod_n(long e, int n) { return ((e % n) + n) % n; }

// Square-class representative of an element known to be an exact square
// (our fields contain i, so x is a square iff -x is).
std::optional<NFElement> half_class(const NFElement& x) {
  if (auto r = nf_nth_root(x, 2)) return r;
  if (auto r = nf_nth_root(-x, 2)) return r;
  return std::nullopt;
}

struct Eq {
  int xa, xb;    // F_2 coefficients of the unknowns A = [a^2], B = [b^2]
  NFElement rhs; // value in the comparison field, modulo 4th powers
  std::string from;
};

}  // namespace

FaddeevReport faddeev_solve(int variant, const NumberField& field) {
  FaddeevReport rep;
  rep.variant = variant;
  rep.field = &field;
  Mode mode = arithmetic(field);
  BrauerElement x = variant_x(variant);

  // Residues of x_j along all lines, lifted into mu_4 so the two-torsion
  // unknowns appear as A = class(a^2), B = class(b^2) modulo 4th powers.
  const auto& cat = line_catalog();
  std::vector<ResidueClass> cls;
  for (const Line& l : cat) cls.push_back(brauer_residue(x, l, mode).to_mu4());

  // Components of the same fiber must carry equal residues.
  std::vector<Eq> eqs;
  for (int f = 0; f < 6; ++f) {
    int base = 4 * f;  // lines are cataloged fiber by fiber
    for (int j = 1; j < 4; ++j) {
      const ResidueClass& p = cls[base];
      const ResidueClass& q = cls[base + j];
      long da = mod_n(p.exp_a - q.exp_a, 4), db = mod_n(p.exp_b - q.exp_b, 4);
      if (da % 2 || db % 2)
        throw std::runtime_error("faddeev_solve: odd parameter exponent difference");
      auto c = rf_nth_power_up_to_const(p.func / q.func, 4);
      if (!c) throw std::runtime_error("faddeev_solve: nonconstant residue mismatch");
      NFElement r = embed_to(p.cst * *c, field) / embed_to(q.cst, field);
      // A^{da/2} B^{db/2} r = 1, i.e. A^{da/2} B^{db/2} = r^{-1}.
      std::ostringstream os;
      os << "l" << cat[base].id << " vs l" << cat[base + j].id;
      eqs.push_back({static_cast<int>(da / 2 % 2), static_cast<int>(db / 2 % 2),
                     r.inverse(), os.str()});
    }
  }

  auto fourth = [&](const NFElement& v) { return nf_is_nth_power(v, 4); };
  std::optional<NFElement> A, B;
  auto clash = [&](const NFElement& lhs, const NFElement& rhs, const std::string& why) {
    rep.consistent = false;
    NFElement ratio = lhs / rhs;
    if (auto h = half_class(ratio))
      rep.obstruction_class = *h;
    else
      rep.obstruction_class = ratio;
    rep.log.push_back("clash at " + why + ": ratio " + ratio.str());
  };
  auto assign = [&](std::optional<NFElement>& slot, const NFElement& v, const std::string& why) {
    if (!rep.consistent) return;
    if (!slot) {
      slot = v;
      rep.log.push_back(why + " forces class " + v.str());
    } else if (!fourth(*slot / v)) {
      clash(*slot, v, why);
    }
  };
  for (int pass = 0; pass < 2 && rep.consistent; ++pass) {
    for (const Eq& e : eqs) {
      if (!rep.consistent) break;
      if (e.xa == 0 && e.xb == 0) {
        if (!fourth(e.rhs)) clash(e.rhs, field.one(), e.from);
      } else if (e.xa == 1 && e.xb == 0) {
        assign(A, e.rhs, e.from);
      } else if (e.xa == 0 && e.xb == 1) {
        assign(B, e.rhs, e.from);
      } else {
        if (A && !B)
          assign(B, e.rhs / *A, e.from);
        else if (B && !A)
          assign(A, e.rhs / *B, e.from);
        else if (A && B && !fourth(*A * *B / e.rhs))
          clash(*A * *B, e.rhs, e.from);
      }
    }
  }

  if (rep.consistent) {
    // Recover square-class representatives of a and b.
    auto pick = [&](std::optional<NFElement>& cls4, bool& forced, NFElement& out,
                    const char* name) {
      if (!cls4) {
        out = field.one();  // unconstrained: any value works
        return;
      }
      auto h = half_class(*cls4);
      if (!h) {
        rep.consistent = false;
        rep.obstruction_class = *cls4;
        rep.log.push_back(std::string(name) + "^2 class is not a square: " + cls4->str());
        return;
      }
      forced = true;
      out = *h;
      rep.log.push_back(std::string(name) + " ~ " + out.str());
    };
    pick(A, rep.a_forced, rep.a_class, "a");
    if (rep.consistent) pick(B, rep.b_forced, rep.b_class, "b");
  }

  if (rep.consistent) {
    // Substitute the forced classes and read off the per-fiber character c_j.
    // Symbol entries live over Q(i), so pick Q(i) representatives of the
    // forced square classes.
    const NumberField* Qi = &field_Qi();
    auto qi_rep = [&](const NFElement& v) -> std::optional<NFElement> {
      std::vector<NFElement> cands = {Qi->one(), Qi->element({rat(1), rat(1)}), nf_i(*Qi),
                                      Qi->element({rat(1), rat(-1)}), Qi->from_rational(rat(2))};
      for (const NFElement& r : cands)
        if (nf_is_nth_power(v / embed_to(r, field), 2)) return r;
      return std::nullopt;
    };
    auto ra = qi_rep(rep.a_class), rb = qi_rep(rep.b_class);
    if (!ra || !rb)
      throw std::runtime_error("faddeev_solve: forced class has no Q(i) representative");
    BrauerElement xc = variant_x(variant, *ra, *rb);
    NFElement prod = field.one();
    for (int f = 0; f < 6; ++f) {
      const Line& l = cat[4 * f];
      ResidueClass rc = brauer_residue(xc, l, mode).to_mu4();
      auto c0 = rf_nth_power_up_to_const(rc.func, 4);
      NFElement cst = embed_to(rc.cst, field) * (c0 ? embed_to(*c0, field) : field.one());
      if (!c0) throw std::runtime_error("faddeev_solve: nonconstant fiber character");
      auto h = half_class(cst);
      if (!h) throw std::runtime_error("faddeev_solve: fiber character not a mu_2 class");
      rep.fiber_chars[l.fiber] = *h;
      prod *= *h;
    }
    rep.obstruction_class = prod;
    rep.descends = nf_is_nth_power(prod, 2);
    rep.log.push_back("sum of fiber characters ~ " + prod.str());
  } else {
    rep.descends = false;
  }
  return rep;
}

}  // namespace qb
