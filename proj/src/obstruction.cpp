#include "qb/obstruction.hpp"

#include <sstream>
#include <stdexcept>

#include "qb/numfield.hpp"

namespace qb {

namespace {

// The reduction chain descends through two ramified quadratic layers; each
// relative norm roughly halves the precision and loses val(x - sigma x) on
// top, so points are built with headroom over the scalar default.
int point_prec(int prec) { return prec ? prec : 4 * dy_default_prec(); }

std::string vs(const DyadicElt& x) {
  std::ostringstream os;
  os << x.str() << " [val " << dy_val(x) << "]";
  return os.str();
}

DerivStep step(std::string what, std::string rule, std::string in, std::string out, bool ok) {
  return DerivStep{std::move(what), std::move(rule), std::move(in), std::move(out), ok};
}

// Symbol [a,b] over K dies under restriction from a subfield of even index.
bool try_kill(std::vector<DerivStep>& log, const std::string& name, const DyadicElt& a,
              const DyadicElt& b, const DyadicField& K) {
  const DyadicField* subs[] = {&dyQ2(), &dyQ2i(), &dyQ2r2(), &dyQ2z8()};
  for (const DyadicField* s : subs) {
    if (s->deg >= K.deg || K.deg % s->deg || ((K.deg / s->deg) % 2)) continue;
    auto da = dy_descend(a, *s);
    auto db = dy_descend(b, *s);
    if (da && db) {
      log.push_back(step(name + ": both arguments lie in " + s->label + ", restriction index " +
                             std::to_string(K.deg / s->deg) + " is even",
                         "R1", "(" + vs(a) + ", " + vs(b) + ")", "0", true));
      return true;
    }
  }
  return false;
}

bool is_small(const DyadicElt& x) { return dy_val_at_least(x, x.prec()); }

}  // namespace

bool InvReport::all_verified() const {
  for (const auto& s : log)
    if (!s.verified) return false;
  return !log.empty();
}

DyadicElt lemma_l(int prec) {
  const DyadicField& F = dyQ2r2();
  int P = prec ? prec : dy_default_prec();
  // d = 1 - 8 sqrt2 (3 + 2 sqrt2) = -31 - 24 sqrt2
  DyadicElt d(&F, RatPoly{Rational(-31), Rational(-24)}, P, 0);
  auto l = dy_nth_root(d, 4);
  if (!l) throw std::logic_error("lemma_l: d has no fourth root in Q2(sqrt2)");
  return *l;
}

DyPoint build_point_P(int prec) {
  const DyadicField& K = dyMu();
  int P = point_prec(prec);
  DyadicElt x0 = dy_from_global(nf_root4_2(field_M()), K, P).inverse();
  // l is built with the same headroom so y0 is not the precision bottleneck
  // (Newton erodes ~e digits per lift and the embedding scales by deg ratio).
  DyadicElt y0 = dy_embed(lemma_l(P), K) * x0;
  DyadicElt z0 = dy_one(K, P) + dy_from_global(nf_sqrt2(field_M()), K, P);
  return DyPoint{x0, y0, z0};
}

std::array<NFElement, 3> build_point_Q() {
  const NumberField& M = field_M();
  return {M.from_rational(Rational(2)), M.from_rational(Rational(-1)), M.from_rational(Rational(2))};
}

DyPoint local_point_Q(int prec) {
  const DyadicField& K = dyMu();
  int P = point_prec(prec);
  return DyPoint{dy_from_rational(K, Rational(2), P), dy_from_rational(K, Rational(-1), P),
                 dy_from_rational(K, Rational(2), P)};
}

InvReport eval_B_at(const DyPoint& pt, const DyadicField& K) {
  if (K.id != dyMu().id) throw std::invalid_argument("eval_B_at: point must live over M_u");
  InvReport rep;
  rep.value = InvValue{0};
  long P0 = pt.x.prec();
  DyadicElt zero = dy_from_rational(K, Rational(0), (int)P0);
  DyadicElt one = dy_one(K, (int)P0);
  auto cmap = [&](const NFElement& c) { return dy_from_global(c, K, (int)P0); };

  // membership in the surface (chart w = 1)
  DyadicElt surf = pt.x.pow(4) - pt.y.pow(4) - pt.z.pow(4) + one;
  rep.log.push_back(step("point lies on x^4 - y^4 - z^4 + 1 = 0", "identity",
                         "x = " + pt.x.str() + ", y = " + pt.y.str() + ", z = " + pt.z.str(),
                         "residual O(pi^" + std::to_string(surf.prec()) + ")", is_small(surf)));

  // B = [A1, A2] + [A3, A4] + [1+i, A5]
  std::array<DyadicElt, 6> A{one, one, one, one, one, one};
  for (int j = 1; j <= 5; ++j) A[j] = surf_eval(sf_A(j), pt, zero, one, cmap);
  DyadicElt opi = cmap(nf_i(field_M())) + one;  // 1+i
  struct Term {
    std::string name;
    const DyadicElt *a, *b;
  };
  Term terms[] = {{"[A1, A2]", &A[1], &A[2]},
                  {"[A3, A4]", &A[3], &A[4]},
                  {"[1+i, A5]", &opi, &A[5]}};
  for (const Term& t : terms) {
    (void)dy_val(*t.a);  // arguments must be nonzero units times pi powers
    (void)dy_val(*t.b);
    if (try_kill(rep.log, t.name, *t.a, *t.b, K)) continue;
    if (t.name != "[A1, A2]")
      throw std::runtime_error("eval_B_at: no reduction known for surviving term " + t.name);

    const DyadicField& Z = dyQ2z8();
    const DyadicField& F = dyQ2r2();

    // A1 = (x - y) * (1+i)(z-1)B; split off the factor already in Q2(zeta8).
    DyadicElt c = pt.x - pt.y;
    DyadicElt rest = opi * (pt.z - one) * surf_eval(sf_B(), pt, zero, one, cmap);
    DyadicElt fres = A[1] - c * rest;
    rep.log.push_back(step("factor A1 = (x-y) * (1+i)(z-1)B, so [A1,A2] = [x-y, A2] + [(1+i)(z-1)B, A2]",
                           "identity", "A1 = " + vs(A[1]),
                           "residual O(pi^" + std::to_string(fres.prec()) + ")", is_small(fres)));
    if (!try_kill(rep.log, "[(1+i)(z-1)B, A2]", rest, A[2], K))
      throw std::runtime_error("eval_B_at: second factor of A1 does not restrict from a subfield");

    // corestrict [x-y, A2] to Q2(zeta8): Cor gives [N(x-y), A2] since A2 is
    // already defined there (projection formula), and inv is Cor-invariant.
    auto A2z_opt = dy_descend(A[2], Z);
    if (!A2z_opt) throw std::runtime_error("eval_B_at: A2 does not lie in Q2(zeta8)");
    DyadicElt A2z = *A2z_opt;
    QuadData nq = dy_norm_quad(c, Z);
    DyadicElt lz = dy_embed(lemma_l(), Z);
    DyadicElt sq2z = dy_from_global(nf_sqrt2(field_Qzeta8()), Z, (int)nq.norm.prec());
    DyadicElt onez = dy_one(Z, (int)nq.norm.prec());
    DyadicElt nres = nq.norm + (onez - lz) * (onez - lz) / sq2z;
    rep.log.push_back(step("corestrict to Q2(zeta8): [x-y, A2] -> [N(x-y), A2], N(x-y) = -(1-l)^2/sqrt2",
                           "R3", "x-y = " + vs(c),
                           "N = " + vs(nq.norm) + ", residual O(pi^" + std::to_string(nres.prec()) + ")",
                           is_small(nres)));

    // N(x-y) = sqrt2 * (i(1-l)/sqrt2)^2: replace by sqrt2 up to squares.
    DyadicElt wit = cmap(nf_i(field_M()));
    DyadicElt witz = *dy_descend(wit, Z) * (onez - lz) / sq2z;
    DyadicElt sres = nq.norm / sq2z - witz * witz;
    rep.log.push_back(step("N(x-y) / sqrt2 = (i(1-l)/sqrt2)^2 is a square: [N, A2] = [sqrt2, A2]", "R2",
                           "N/sqrt2 = " + vs(nq.norm / sq2z),
                           "witness residual O(pi^" + std::to_string(sres.prec()) + ")", is_small(sres)));

    // A2 = A2a * A2b with A2a = z^2-1 + (x^2-y^2), A2b = z^2-1 - i(x^2-y^2).
    DyadicElt u = pt.z * pt.z - one;
    DyadicElt w = pt.x * pt.x - pt.y * pt.y;
    DyadicElt A2a = u + w, A2b = u - wit * w;
    DyadicElt pres = A2a * A2b - A[2];
    rep.log.push_back(step("split A2 = (z^2-1 + (x^2-y^2)) (z^2-1 - i(x^2-y^2)); symbol is bilinear",
                           "identity", "A2 = " + vs(A[2]),
                           "residual O(pi^" + std::to_string(pres.prec()) + ")", is_small(pres)));
    if (!try_kill(rep.log, "[sqrt2, z^2-1 + (x^2-y^2)]", dy_embed(sq2z, K), A2a, K))
      throw std::runtime_error("eval_B_at: first A2 factor does not restrict from a subfield");

    // corestrict [sqrt2, A2b] to Q2(sqrt2): N(A2b) = (z^2-1)^2 + (x^2-y^2)^2.
    auto A2bz_opt = dy_descend(A2b, Z);
    if (!A2bz_opt) throw std::runtime_error("eval_B_at: A2b does not lie in Q2(zeta8)");
    QuadData nq2 = dy_norm_quad(*A2bz_opt, F);
    DyadicElt n2 = nq2.norm;
    DyadicElt d1 = *dy_descend(u, F), d2 = *dy_descend(w, F);
    DyadicElt n2res = n2 - (d1 * d1 + d2 * d2);
    rep.log.push_back(step("corestrict to Q2(sqrt2): [sqrt2, A2b] -> [sqrt2, N(A2b)], N = (z^2-1)^2 + (x^2-y^2)^2",
                           "R3", "A2b = " + vs(A2b),
                           "N = " + vs(n2) + ", residual O(pi^" + std::to_string(n2res.prec()) + ")",
                           is_small(n2res)));

    // surface identity: ((z^2-1)^2 + (x^2-y^2)^2)(m^2+1) = 2(z^2-1)(z^2-m^2)
    // along y = m x with x^4 = 1/2; here m = l.
    DyadicElt lf = lemma_l();
    DyadicElt onef = dy_one(F, (int)n2.prec());
    DyadicElt twof = dy_from_rational(F, Rational(2), (int)n2.prec());
    DyadicElt z2f = d1 + onef;
    DyadicElt l2f = lf * lf;
    DyadicElt mres = pt.y - dy_embed(lf, K) * pt.x;
    DyadicElt ires = n2 * (l2f + onef) - twof * d1 * (z2f - l2f);
    bool idd = verify_identity("d");
    rep.log.push_back(step("identity (d): N(A2b) (l^2+1) = 2 (z^2-1)(z^2-l^2) since y = l x on P",
                           "identity",
                           "y - l x residual O(pi^" + std::to_string(mres.prec()) + ")",
                           "residual O(pi^" + std::to_string(ires.prec()) + ")",
                           idd && is_small(mres) && is_small(ires)));

    // N(A2b) = p3 * (2/(l^2+1)^2) with p3 = (z^2-1)(z^2-l^2)(l^2+1); 2 is a
    // square in Q2(sqrt2), so [sqrt2, N] = [sqrt2, p3].
    DyadicElt p3 = d1 * (z2f - l2f) * (l2f + onef);
    bool samecls = dy_same_square_class(n2, p3);
    rep.log.push_back(step("N(A2b) / p3 = 2/(l^2+1)^2 is a square: [sqrt2, N] = [sqrt2, p3], p3 = (z^2-1)(z^2-l^2)(l^2+1)",
                           "R2", "p3 = " + vs(p3), "same square class: " + std::string(samecls ? "yes" : "no"),
                           samecls));

    DyadicElt sq2f = dy_from_global(nf_sqrt2(field_Qsqrt2()), F, (int)p3.prec());
    InvValue bf = hilbert_bruteforce(sq2f, p3);
    rep.log.push_back(step("cross-check [sqrt2, p3] by brute-force Hilbert symbol over Q2(sqrt2)", "R4",
                           "(sqrt2, " + vs(p3) + ")", bf.str(), bf == InvValue{1}));

    // p3 ~ -1-2sqrt2 up to squares.
    DyadicElt tgt = dy_from_global(field_Qsqrt2().element(RatPoly{Rational(-1), Rational(-2)}), F,
                                   (int)p3.prec());
    bool cls2 = dy_same_square_class(p3, tgt);
    rep.log.push_back(step("p3 ~ -1 - 2 sqrt2 up to squares: [sqrt2, p3] = [sqrt2, -1-2sqrt2]", "R2",
                           "p3 = " + vs(p3), "same square class: " + std::string(cls2 ? "yes" : "no"),
                           cls2));

    // corestrict to Q2: Cor([sqrt2, -1-2sqrt2]) = [-1,-2] + [-2,-7].
    CoresQuad cq = cores_quad(Rational(2), Rational(-1), Rational(-2));
    InvValue bf2 = hilbert_bruteforce(sq2f, tgt);
    std::ostringstream cqs;
    for (const auto& [a, b] : cq.symbols) cqs << "[" << rat_str(a) << "," << rat_str(b) << "] ";
    rep.log.push_back(step("corestrict to Q2: Cor([sqrt2, -1-2sqrt2]) = " + cqs.str(), "R3",
                           "(sqrt2, -1-2sqrt2)", "inv " + cq.inv().str(),
                           bf2 == cq.inv()));

    InvValue base{0};
    for (const auto& [a, b] : cq.symbols) base = base + hilbert_q2(a, b);
    rep.log.push_back(step("base case over Q2 via the explicit Hilbert symbol formula", "R4",
                           cqs.str(), base.str(), true));
    rep.value = rep.value + base;
  }
  return rep;
}

ObstructionReport obstruction_sum() {
  ObstructionReport r;
  r.at_P = eval_B_at(build_point_P(), dyMu());
  r.at_Q = eval_B_at(local_point_Q(), dyMu());
  r.sum = r.at_P.value + r.at_Q.value;
  r.note =
      "Q is a global point of the surface over M, so by global reciprocity the sum of "
      "inv_v B(Q) over all places v of M vanishes.  The adelic point that agrees with Q at "
      "every place except u and with P at u therefore has total invariant "
      "inv_u B(P) - inv_u B(Q), and a nonzero value obstructs weak approximation.";
  return r;
}

}  // namespace qb
