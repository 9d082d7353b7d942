#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qb/dyadic.hpp"
#include "test_util.hpp"

using namespace qb;

namespace {

DyadicElt sqrt2_in(const DyadicField& K) {
  return dy_from_global(nf_sqrt2(field_Qsqrt2()), K);
}

// d = 1 - 8 sqrt2 (3 + 2 sqrt2) = -31 - 24 sqrt2 over Q2(sqrt2).
DyadicElt lemma_d(const DyadicField& F) {
  return dy_from_rational(F, rat(-31)) + dy_from_rational(F, rat(-24)) * sqrt2_in(F);
}

// A random unit of K: random 2-integral odd-denominator coefficients with
// constant term forced odd.
DyadicElt random_unit(const DyadicField& K) {
  std::uniform_int_distribution<long> pick(-40, 40);
  for (;;) {
    RatPoly c(K.deg);
    for (auto& x : c) x = rat(pick(qbtest::rng()));
    DyadicElt u(&K, c, dy_default_prec(), -8);
    try {
      if (dy_val(u) == 0) {
        dy_refresh_vlow(u);
        return u;
      }
    } catch (const dy_precision_error&) {
    }
  }
}

// A random nonzero element: unit times a small power of pi.
DyadicElt random_elt(const DyadicField& K) {
  std::uniform_int_distribution<int> vp(-2, 2);
  return random_unit(K) * dy_pi(K).pow(vp(qbtest::rng()));
}

Rational random_nonzero_rat() {
  for (;;) {
    Rational r = qbtest::random_rational(60, 16);
    if (r != 0) return r;
  }
}

}  // namespace

TEST_CASE("field catalog: degrees, ramification, uniformizers") {
  CHECK(dyQ2().e == 1);
  CHECK(dyQ2i().e == 2);
  CHECK(dyQ2r2().e == 2);
  CHECK(dyQ2z8().e == 4);
  CHECK(dyMu().e == 8);
  for (FieldId id : {FieldId::Q, FieldId::GaussQ, FieldId::Root2Q, FieldId::Zeta8Q, FieldId::M8}) {
    const DyadicField& K = dy_field(id);
    CHECK(K.deg == K.e);  // f = 1 throughout
    CHECK(dy_val(dy_pi(K)) == 1);
    CHECK(dy_val(dy_from_rational(K, rat(2))) == K.e);
  }
}

TEST_CASE("valuation and unit part") {
  const DyadicField& F = dyQ2r2();
  DyadicElt s2 = sqrt2_in(F);
  // val(2 + 2 sqrt2) = 2, unit part 1 + sqrt2
  DyadicElt x = dy_from_rational(F, rat(2)) + dy_from_rational(F, rat(2)) * s2;
  CHECK(dy_val(x) == 2);
  DyadicElt u = dy_unit_part(x);
  CHECK(dy_val(u) == 0);
  CHECK(dy_val_at_least(u - (dy_one(F) + s2), u.prec()));
  // val(2) = 8 in M_u
  CHECK(dy_val(dy_from_rational(dyMu(), rat(2))) == 8);
  // val(d - 1) = -24 sqrt2 - 32 has valuation min(7, 10) = 7
  CHECK(dy_val(lemma_d(F) - dy_one(F)) == 7);
  // undecidable valuation raises: representative beyond the precision window
  DyadicElt eps(&F, RatPoly{rat(1 << 8)}, 10, 0);
  CHECK_THROWS_AS(dy_val(eps), dy_precision_error);
  CHECK_THROWS_AS(dy_val(dy_from_rational(F, rat(0))), dy_precision_error);
}

TEST_CASE("multiplicativity of valuation and precision bookkeeping") {
  auto& rng = qbtest::rng();
  (void)rng;
  for (const DyadicField* K : {&dyQ2(), &dyQ2r2(), &dyQ2z8(), &dyMu()}) {
    for (int t = 0; t < 25; ++t) {
      DyadicElt a = random_elt(*K), b = random_elt(*K);
      long va = dy_val(a), vb = dy_val(b);
      CHECK(dy_val(a * b) == va + vb);
      CHECK(dy_val(a.inverse()) == -va);
      CHECK(dy_val_at_least(a * a.inverse() - dy_one(*K), (a * a.inverse()).prec()));
    }
  }
}

TEST_CASE("Lemma l: fourth root of d with the printed congruence") {
  const DyadicField& F = dyQ2r2();
  DyadicElt d = lemma_d(F);
  auto l = dy_nth_root(d, 4);
  REQUIRE(l);
  DyadicElt l2 = (*l) * (*l);
  // l^2 = 1 + 4 sqrt2 + 16 sqrt2 + 32 = 33 + 20 sqrt2 mod 2^5 sqrt2 = pi^11
  DyadicElt printed = dy_from_rational(F, rat(33)) + dy_from_rational(F, rat(20)) * sqrt2_in(F);
  CHECK(dy_val_at_least(l2 - printed, 11));
  // l^4 = d to working precision
  DyadicElt l4 = l2 * l2;
  CHECK(dy_val_at_least(l4 - d, l4.prec()));
  // the canonical root is the one near 1 (d is in V^(7), so l is in V^(3))
  CHECK(dy_val(*l - dy_one(F)) == 3);
}

TEST_CASE("dy_nth_root: existence and absence examples") {
  const DyadicField& Q2 = dyQ2();
  auto r = dy_nth_root(dy_from_rational(Q2, rat(-7)), 2);
  REQUIRE(r);  // -7 = 1 mod 8
  CHECK(dy_val_at_least((*r) * (*r) - dy_from_rational(Q2, rat(-7)), r->prec()));
  CHECK_FALSE(dy_nth_root(dy_from_rational(Q2, rat(2)), 2));  // odd valuation
  CHECK_FALSE(dy_nth_root(dy_from_rational(Q2, rat(3)), 2));  // 3 mod 8
  CHECK_FALSE(dy_nth_root(dy_from_rational(Q2, rat(-1)), 2));
  auto f = dy_nth_root(dy_from_rational(Q2, rat(16)), 4);
  REQUIRE(f);
  CHECK(dy_val_at_least(*f - dy_from_rational(Q2, rat(2)), f->prec()));
  // 4 = 2^2 has a square root of odd valuation... 2 is not a square, but 4 is
  auto s4 = dy_nth_root(dy_from_rational(Q2, rat(4)), 2);
  REQUIRE(s4);
  CHECK(dy_val(*s4) == 1);
}

TEST_CASE("property: Hensel re-powering on 100 random units with roots") {
  int done = 0;
  while (done < 100) {
    const DyadicField& K = *std::vector<const DyadicField*>{
        &dyQ2(), &dyQ2i(), &dyQ2r2(), &dyQ2z8()}[done % 4];
    int n = (done % 8 < 4) ? 2 : 4;
    DyadicElt u = random_unit(K);
    DyadicElt c = u.pow(n);  // a unit with an n-th root by construction
    auto r = dy_nth_root(c, n);
    REQUIRE(r);
    DyadicElt back = r->pow(n);
    CHECK(dy_val_at_least(back - c, back.prec()));
    ++done;
  }
}

TEST_CASE("square classes: the (uptosq) display") {
  const DyadicField& F = dyQ2r2();
  DyadicElt s2 = sqrt2_in(F);
  DyadicElt one = dy_one(F);
  DyadicElt z0 = one + s2;
  auto l = dy_nth_root(lemma_d(F), 4);
  REQUIRE(l);
  DyadicElt l2 = (*l) * (*l);
  // z0^2 - 1 ~ 1 + sqrt2
  CHECK(dy_same_square_class(z0 * z0 - one, one + s2));
  auto cls = dy_square_class(z0 * z0 - one);
  CHECK(dy_val_at_least(cls - (one + s2), cls.prec()));  // the canonical rep itself
  // l^2 + 1 ~ 1 + 2 sqrt2
  CHECK(dy_same_square_class(l2 + one, one + s2 + s2));
  // z0^2 - l^2 ~ 1 - sqrt2
  CHECK(dy_same_square_class(z0 * z0 - l2, one - s2));
  // and the three classes are pairwise distinct
  CHECK_FALSE(dy_same_square_class(z0 * z0 - one, l2 + one));
  CHECK_FALSE(dy_same_square_class(z0 * z0 - one, z0 * z0 - l2));
  CHECK_FALSE(dy_same_square_class(l2 + one, z0 * z0 - l2));
  // rationals: 9 ~ 1 over Q2
  auto c9 = dy_square_class(dy_from_rational(dyQ2(), rat(9)));
  CHECK(dy_val_at_least(c9 - dy_one(dyQ2()), c9.prec()));
}

TEST_CASE("property: square-class representative is a verified square ratio") {
  for (const DyadicField* K : {&dyQ2(), &dyQ2i(), &dyQ2r2(), &dyQ2z8()}) {
    for (int t = 0; t < 10; ++t) {
      DyadicElt c = random_elt(*K);
      DyadicElt rep = dy_square_class(c);
      CHECK(dy_nth_root(c * rep.inverse(), 2));
      CHECK(dy_same_square_class(c, rep));
      // idempotence: the representative represents itself
      DyadicElt rep2 = dy_square_class(rep);
      CHECK(dy_val_at_least(rep - rep2, std::min(rep.prec(), rep2.prec())));
    }
  }
}

TEST_CASE("hilbert_q2 examples") {
  CHECK(hilbert_q2(rat(-1), rat(-2)) == InvValue{1});
  CHECK(hilbert_q2(rat(-2), rat(-7)) == InvValue{0});
  CHECK(hilbert_q2(rat(5), rat(2)) == InvValue{1});  // 2 is not a norm from Q2(sqrt5)
  CHECK(hilbert_q2(rat(2), rat(7)) == InvValue{0});  // 2 = 9 - 7 = 3^2 - 7
  for (int t = 0; t < 10; ++t) CHECK(hilbert_q2(rat(1), random_nonzero_rat()) == InvValue{0});
  CHECK_THROWS_AS(hilbert_q2(rat(0), rat(1)), std::invalid_argument);
}

TEST_CASE("hilbert_bruteforce examples") {
  CHECK(hilbert_bruteforce_q2(rat(-1), rat(-2)) == InvValue{1});
  const DyadicField& F = dyQ2r2();
  DyadicElt s2 = sqrt2_in(F);
  DyadicElt m12 = -(dy_one(F) + s2 + s2);  // -1 - 2 sqrt2
  CHECK(hilbert_bruteforce(s2, m12) == InvValue{1});
  // norm-form identity (a, -a) = 0
  for (int t = 0; t < 20; ++t) {
    DyadicElt a = random_elt(F);
    CHECK(hilbert_bruteforce(a, -a) == InvValue{0});
  }
  CHECK_THROWS_AS(hilbert_bruteforce(dy_one(dyMu()), dy_one(dyMu())), std::domain_error);
}

TEST_CASE("property: hilbert_bruteforce = hilbert_q2 on 200 random rational pairs") {
  int done = 0;
  while (done < 200) {
    Rational a = random_nonzero_rat(), b = random_nonzero_rat();
    CHECK(hilbert_bruteforce_q2(a, b) == hilbert_q2(a, b));
    ++done;
  }
}

TEST_CASE("property: Hilbert bilinearity over Q2(sqrt2) on 100 random triples") {
  const DyadicField& F = dyQ2r2();
  for (int t = 0; t < 100; ++t) {
    DyadicElt a = random_elt(F), b1 = random_elt(F), b2 = random_elt(F);
    InvValue lhs = hilbert_bruteforce(a, b1 * b2);
    InvValue rhs = hilbert_bruteforce(a, b1) + hilbert_bruteforce(a, b2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cores_quad examples and consistency") {
  const DyadicField& F = dyQ2r2();
  DyadicElt s2 = sqrt2_in(F);
  // d=2, a=1, b=1: Cor([sqrt2, 1+sqrt2]) = [1,-2] + [-1,-1], inv 1/2
  CoresQuad c1 = cores_quad(rat(2), rat(1), rat(1));
  CHECK(c1.symbols[0] == std::make_pair(rat(1), rat(-2)));
  CHECK(c1.symbols[1] == std::make_pair(rat(-1), rat(-1)));
  CHECK(c1.inv() == InvValue{1});
  CHECK(hilbert_bruteforce(s2, dy_one(F) + s2) == c1.inv());
  // d=2, a=-1, b=-2: [-1,-2] + [-2,-7], inv 1/2 (the (eqqq4) step)
  CoresQuad c2 = cores_quad(rat(2), rat(-1), rat(-2));
  CHECK(c2.symbols[0] == std::make_pair(rat(-1), rat(-2)));
  CHECK(c2.symbols[1] == std::make_pair(rat(-2), rat(-7)));
  CHECK(c2.inv() == InvValue{1});
  CHECK_THROWS_AS(cores_quad(rat(2), rat(1), rat(0)), std::invalid_argument);
}

TEST_CASE("property: cores_quad consistency on 50 random pairs, d = 2") {
  const DyadicField& F = dyQ2r2();
  DyadicElt s2 = sqrt2_in(F);
  int done = 0;
  while (done < 50) {
    Rational a = random_nonzero_rat(), b = random_nonzero_rat();
    if (a * a - rat(2) * b * b == 0) continue;
    DyadicElt arg = dy_from_rational(F, a) + dy_from_rational(F, b) * s2;
    CHECK(hilbert_bruteforce(s2, arg) == cores_quad(rat(2), a, b).inv());
    ++done;
  }
}

TEST_CASE("inv_restrict") {
  CHECK(inv_restrict(InvValue{1}, 4) == InvValue{0});
  CHECK(inv_restrict(InvValue{1}, 2) == InvValue{0});
  CHECK(inv_restrict(InvValue{1}, 1) == InvValue{1});
  CHECK(inv_restrict(InvValue{0}, 3) == InvValue{0});
  CHECK_THROWS_AS(inv_restrict(InvValue{1}, 0), std::invalid_argument);
}

TEST_CASE("property: localserre for e=2, p=2 on 100 random elements") {
  // Over Q2(sqrt2) (e = 2): every element of V^(m+2) with m >= 3 has a
  // square root in V^(m).
  const DyadicField& F = dyQ2r2();
  std::uniform_int_distribution<int> mm(3, 10);
  std::uniform_int_distribution<long> digit(0, 1);
  for (int t = 0; t < 100; ++t) {
    int m = mm(qbtest::rng());
    // random element of V^(m+2): 1 + pi^(m+2) * integral element
    DyadicElt x = dy_one(F) + dy_pi(F).pow(m + 2) * random_unit(F) *
                                  dy_from_rational(F, rat(1 + 2 * digit(qbtest::rng())));
    auto r = dy_nth_root(x, 2);
    REQUIRE(r);
    CHECK(dy_val(*r - dy_one(F)) >= m);
    CHECK(dy_val_at_least((*r) * (*r) - x, r->prec()));
  }
}

TEST_CASE("embed / descend round trips") {
  const DyadicField& F = dyQ2r2();
  const DyadicField& Z = dyQ2z8();
  const DyadicField& Mu = dyMu();
  for (int t = 0; t < 10; ++t) {
    DyadicElt a = random_elt(F);
    DyadicElt up = dy_embed(a, Mu);
    CHECK(dy_val(up) == 4 * dy_val(a));
    auto down = dy_descend(up, F);
    REQUIRE(down);
    CHECK(dy_val_at_least(*down - a, down->prec()));
    // an element with a genuine zeta8 component does not descend to Q2(sqrt2)
    DyadicElt mixed = dy_embed(a, Z) + dy_from_global(nf_i(field_Qzeta8()), Z);
    CHECK_FALSE(dy_descend(mixed, F));
  }
}

TEST_CASE("dy_norm_quad: trace and norm over index-2 subfields") {
  const DyadicField& Z = dyQ2z8();
  const DyadicField& F = dyQ2r2();
  for (int t = 0; t < 10; ++t) {
    DyadicElt x = random_elt(Z);
    QuadData q = dy_norm_quad(x, F);
    DyadicElt resid = x * x - dy_embed(q.trace, Z) * x + dy_embed(q.norm, Z);
    CHECK(dy_val_at_least(resid, resid.prec()));
    // norm multiplicativity through the quadratic relation: N(x)N(y) = N(xy)
    DyadicElt y = random_elt(Z);
    DyadicElt nxy = dy_norm_quad(x * y, F).norm;
    DyadicElt prod = q.norm * dy_norm_quad(y, F).norm;
    CHECK(dy_val_at_least(nxy - prod, std::min(nxy.prec(), prod.prec())));
  }
}

TEST_CASE("precision stability: doubled precision reproduces the anchors") {
  const DyadicField& F = dyQ2r2();
  int base = dy_default_prec();
  auto snapshot = [&](int prec) {
    dy_set_default_prec(prec);
    DyadicElt d = lemma_d(F);
    auto l = dy_nth_root(d, 4);
    REQUIRE(l);
    DyadicElt cls = dy_square_class((dy_one(F) + sqrt2_in(F)).pow(2) - dy_one(F));
    InvValue bf = hilbert_bruteforce(sqrt2_in(F), -(dy_one(F) + sqrt2_in(F) + sqrt2_in(F)));
    return std::make_tuple(*l, cls, bf);
  };
  auto [l1, c1, b1] = snapshot(base);
  auto [l2, c2, b2] = snapshot(2 * base);
  dy_set_default_prec(0);
  CHECK(dy_val_at_least(l1 - l2, std::min(l1.prec(), l2.prec())));
  CHECK(dy_val_at_least(c1 - c2, std::min(c1.prec(), c2.prec())));
  CHECK(b1 == b2);
}
