#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qb/numfield.hpp"
#include "qb/ratpoly.hpp"
#include "qb/rational.hpp"
#include "test_util.hpp"

using namespace qb;
using qbtest::random_element;
using qbtest::random_nonzero;

TEST_CASE("rational helpers") {
  CHECK(rat_parse("-3/4") == rat(-3, 4));
  CHECK(rat_str(rat(5, 10)) == "1/2");
  CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
  CHECK(rat_val2(rat(24)) == 3);
  CHECK(rat_val2(rat(3, 8)) == -3);
  CHECK(rat_valp(rat(45, 7), 3) == 2);

  auto f = rational_factor(rat(209952));
  CHECK(f.sign == 1);
  CHECK(f.exponents.at(2) == 5);
  CHECK(f.exponents.at(3) == 8);
  CHECK(f.exponents.size() == 2);

  auto g = rational_factor(rat(-8, 45));
  CHECK(g.sign == -1);
  CHECK(g.exponents.at(2) == 3);
  CHECK(g.exponents.at(3) == -2);
  CHECK(g.exponents.at(5) == -1);

  CHECK(rat_nth_root(rat(16, 81), 4) == rat(2, 3));
  CHECK(rat_nth_root(rat(-27), 3) == rat(-3));
  CHECK(!rat_nth_root(rat(2), 2).has_value());
  CHECK(!rat_nth_root(rat(-4), 2).has_value());
}

TEST_CASE("rational polynomials") {
  RatPoly a = {rat(1), rat(2), rat(0), rat(3)};   // 3x^3+2x+1
  RatPoly b = {rat(-1), rat(1)};                  // x-1
  auto [q, r] = rp_divmod(a, b);
  CHECK(rp_add(rp_mul(q, b), r) == a);
  CHECK(rp_deg(r) <= 0);
  CHECK(rp_eval(a, rat(1)) == rat(6));
  CHECK(r == RatPoly{rat(6)});

  // gcd of (x^2-1)(x+2) and (x-1)(x+3) is x-1 (monic).
  RatPoly p1 = rp_mul({rat(-1), rat(0), rat(1)}, {rat(2), rat(1)});
  RatPoly p2 = rp_mul({rat(-1), rat(1)}, {rat(3), rat(1)});
  CHECK(rp_gcd(p1, p2) == RatPoly{rat(-1), rat(1)});

  auto xg = rp_xgcd(p1, p2);
  CHECK(rp_add(rp_mul(xg.s, p1), rp_mul(xg.t, p2)) == xg.g);

  // Res(x^2+1, x^2-2) = (i^2-2)((-i)^2-2) = 9;  Res(x-a, g) = g(a).
  CHECK(rp_resultant({rat(1), rat(0), rat(1)}, {rat(-2), rat(0), rat(1)}) == rat(9));
  RatPoly g = {rat(5), rat(-1), rat(2)};
  CHECK(rp_resultant({rat(-3), rat(1)}, g) == rp_eval(g, rat(3)));
}

TEST_CASE("field catalog structure") {
  CHECK(field_Q().degree() == 1);
  CHECK(field_Qi().degree() == 2);
  CHECK(field_Qsqrt2().degree() == 2);
  CHECK(field_Qzeta8().degree() == 4);
  CHECK(field_M().degree() == 8);

  // Minimal polynomial of theta = i + 2^{1/4}: derived by hand from
  // ((theta^2+1)^2+2)^2 = 8 (theta^2-1)^2.
  RatPoly expect = {rat(1), rat(0), rat(28), rat(0), rat(2), rat(0), rat(4), rat(0), rat(1)};
  CHECK(field_M().min_poly == expect);

  const auto& Kz = field_Qzeta8();
  CHECK(nf_i(Kz) * nf_i(Kz) == Kz.from_rational(-1));
  CHECK(nf_sqrt2(Kz) * nf_sqrt2(Kz) == Kz.from_rational(2));
  CHECK(nf_zeta8(Kz).pow(4) == Kz.from_rational(-1));
  CHECK(nf_zeta8(Kz).pow(2) == nf_i(Kz));

  const auto& M = field_M();
  CHECK(nf_root4_2(M).pow(4) == M.from_rational(2));
  CHECK(nf_root4_2(M).pow(2) == nf_sqrt2(M));
  CHECK(nf_i(M) * nf_i(M) == M.from_rational(-1));
  // theta = i + 2^{1/4}
  CHECK(M.gen() == nf_i(M) + nf_root4_2(M));
}

TEST_CASE("field arithmetic properties") {
  for (const NumberField* K : {&field_Qi(), &field_Qsqrt2(), &field_Qzeta8(), &field_M()}) {
    for (int trial = 0; trial < 40; ++trial) {
      NFElement x = random_nonzero(*K), y = random_element(*K), z = random_element(*K);
      CHECK(x * x.inverse() == K->one());
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x.pow(3) == x * x * x);
      CHECK(x.pow(-2) == (x * x).inverse());
    }
  }
}

TEST_CASE("embeddings") {
  const auto& Ki = field_Qi();
  const auto& Kr = field_Qsqrt2();
  const auto& Kz = field_Qzeta8();
  const auto& M = field_M();

  CHECK(embed_to(nf_i(Ki), Kz) == nf_i(Kz));
  CHECK(embed_to(nf_sqrt2(Kr), Kz) == nf_sqrt2(Kz));
  CHECK(embed_to(nf_i(Ki), M) == nf_i(M));
  CHECK(embed_to(nf_zeta8(Kz), M) == nf_zeta8(M));
  CHECK(has_embedding(FieldId::Q, FieldId::M8));
  CHECK(!has_embedding(FieldId::GaussQ, FieldId::Root2Q));

  for (int trial = 0; trial < 30; ++trial) {
    NFElement x = random_element(Kz), y = random_element(Kz);
    CHECK(embed_to(x * y, M) == embed_to(x, M) * embed_to(y, M));
    CHECK(embed_to(x + y, M) == embed_to(x, M) + embed_to(y, M));
    // Composition Q(i) -> Q(zeta8) -> M agrees with the direct arrow.
    NFElement a = random_element(Ki);
    CHECK(embed_to(embed_to(a, Kz), M) == embed_to(a, M));
  }
}

TEST_CASE("quadratic splits") {
  for (const NumberField* K : {&field_Qi(), &field_Qsqrt2(), &field_Qzeta8(), &field_M()}) {
    const QuadraticSplit* T = K->tower();
    REQUIRE(T != nullptr);
    for (int trial = 0; trial < 25; ++trial) {
      NFElement x = random_element(*K);
      auto [u, v] = T->split(x);
      CHECK(T->combine(u, v) == x);
      CHECK(T->conj(T->conj(x)) == x);
      CHECK(T->embed(T->norm(x)) == x * T->conj(x));
      NFElement y = random_element(*K);
      CHECK(T->conj(x * y) == T->conj(x) * T->conj(y));
    }
  }
  // Q(zeta8) also splits over Q(sqrt2), with conjugation fixing sqrt2.
  const auto* S = field_Qzeta8().split_over(FieldId::Root2Q);
  REQUIRE(S != nullptr);
  CHECK(S->conj(nf_i(field_Qzeta8())) == -nf_i(field_Qzeta8()));
  CHECK(S->conj(nf_sqrt2(field_Qzeta8())) == nf_sqrt2(field_Qzeta8()));
}

TEST_CASE("n-th roots: pinned cases") {
  const auto& Ki = field_Qi();
  const auto& Kr = field_Qsqrt2();
  const auto& Kz = field_Qzeta8();
  const auto& M = field_M();

  CHECK(nf_nth_root(Kr.from_rational(2), 2) == nf_sqrt2(Kr));
  CHECK(!nf_nth_root(field_Q().from_rational(2), 2).has_value());
  CHECK(nf_nth_root(Ki.from_rational(-1), 2) == nf_i(Ki));
  // sqrt(2i) = 1+i, canonical choice has positive top coordinate.
  CHECK(nf_nth_root(Ki.element({rat(0), rat(2)}), 2) == Ki.element({rat(1), rat(1)}));
  // (1+i)^4 = -4; canonical fourth root is 1+i rather than -1+i.
  CHECK(nf_nth_root(Ki.from_rational(-4), 4) == Ki.element({rat(1), rat(1)}));
  CHECK(nf_nth_root(Kr.from_rational(4), 4) == nf_sqrt2(Kr));
  auto q4 = nf_nth_root(M.from_rational(2), 4);
  REQUIRE(q4.has_value());
  CHECK((*q4 == nf_root4_2(M) || *q4 == -nf_root4_2(M) ||
         *q4 == nf_i(M) * nf_root4_2(M) || *q4 == -nf_i(M) * nf_root4_2(M)));
  auto q2 = nf_nth_root(M.from_rational(2), 2);
  REQUIRE(q2.has_value());
  CHECK((*q2 == nf_sqrt2(M) || *q2 == -nf_sqrt2(M)));

  CHECK(!nf_is_nth_power(nf_sqrt2(Kz), 2));     // sqrt2 is not a square in Q(zeta8)
  CHECK(nf_is_nth_power(Kz.from_rational(-1), 2));
  CHECK(nf_is_nth_power(Kz.from_rational(-4), 4));
  CHECK(nf_is_nth_power(nf_sqrt2(M), 2));       // but it is in M
  CHECK(!nf_is_nth_power(Kr.from_rational(-1), 2));
  CHECK(!nf_is_nth_power(Kz.from_rational(2), 4));  // else 2^{1/4} in a Galois quartic
}

TEST_CASE("n-th roots: squares and fourth powers round-trip") {
  for (const NumberField* K : {&field_Q(), &field_Qi(), &field_Qsqrt2(), &field_Qzeta8(), &field_M()}) {
    for (int trial = 0; trial < 20; ++trial) {
      NFElement y = random_nonzero(*K);
      NFElement sq = y * y;
      auto r = nf_nth_root(sq, 2);
      REQUIRE(r.has_value());
      CHECK(*r * *r == sq);
      auto r4 = nf_nth_root(sq * sq, 4);
      REQUIRE(r4.has_value());
      CHECK(r4->pow(4) == sq * sq);
    }
  }
}

TEST_CASE("n-th roots respect embeddings") {
  const auto& Kz = field_Qzeta8();
  const auto& M = field_M();
  for (int trial = 0; trial < 15; ++trial) {
    NFElement y = random_nonzero(Kz);
    CHECK(nf_is_nth_power(embed_to(y * y, M), 2));
  }
}
