#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qb/kummer.hpp"
#include "test_util.hpp"

using namespace qb;

namespace {

FourthClassVec fc(long n) { return FourthClassVec::from_rational(rat(n)); }

// A random odd squarefree-ish integer avoiding +-1 and fourth powers.
long random_odd(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> pick(lo, hi);
  for (;;) {
    long v = pick(rng);
    if (v % 2 == 0 || v == 1 || v == -1 || v == 0) continue;
    return v;
  }
}

bool fourth_power_free(long v) {
  for (long p = 2; p * p * p * p <= std::abs(v); ++p)
    if (v % (p * p * p * p) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("fourth-power class arithmetic") {
  CHECK(fc(16).is_identity());
  CHECK(fc(1).is_identity());
  CHECK_FALSE(fc(-1).is_identity());
  CHECK((fc(-1) * fc(-1)).is_identity());
  CHECK(fc(36) * fc(5832) == fc(2 * 2 * 2 * 2 * 2 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3).pow(1));
  CHECK(fc(8).pow(3) == fc(2));  // 2^9 = 2 mod fourth powers
  CHECK(FourthClassVec::from_rational(rat(1, 2)) == fc(8));  // 1/2 = 8/16
}

TEST_CASE("mod4_member examples") {
  CHECK_FALSE(mod4_member(fc(2), {fc(3), fc(-4)}));
  CHECK(mod4_member(fc(2), {fc(2), fc(-4)}));
  // (2*3)^2 (2*9)^3 = 2^5 3^8 = 2 mod fourth powers.
  CHECK(mod4_member(fc(2), {fc(36), fc(5832)}));
  CHECK_THROWS_AS(mod4_member(fc(2), std::vector<FourthClassVec>(9, fc(3))),
                  std::invalid_argument);
}

TEST_CASE("condition Z examples") {
  CHECK(condition_Z({rat(1), rat(1), rat(1), rat(1)}));
  CHECK_FALSE(condition_Z({rat(1), rat(1), rat(2), rat(2)}));
  CHECK(condition_Z({rat(1), rat(1), rat(6), rat(10)}));
}

TEST_CASE("classify_pair examples") {
  CHECK(classify_pair(3, 9) == PairForm::form_b);
  CHECK(classify_pair(9, 3) == PairForm::form_b);  // symmetric in (a,b)
  CHECK(classify_pair(75, 9) == PairForm::form_a);
  CHECK(classify_pair(3, 5) == PairForm::none);
  CHECK_THROWS_AS(classify_pair(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(classify_pair(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(classify_pair(81, 3), std::invalid_argument);
}

TEST_CASE("screen_family examples") {
  CHECK(screen_family(FamilySpec::sd_family(rat(3), rat(1), rat(1))).st_holds);
  CHECK_FALSE(screen_family(FamilySpec::sd_family(rat(2), rat(1), rat(1))).st_holds);
  CHECK(screen_family(FamilySpec::general({rat(16), rat(1), rat(1), rat(1)})).st_holds);
  CHECK_THROWS_AS(FamilySpec::sd_family(rat(4), rat(1), rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::sd_family(rat(3), rat(2), rat(3)), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::all_odd({rat(2), rat(1), rat(1), rat(1)}), std::invalid_argument);
}

TEST_CASE("SD family sweep: inconclusive exactly at d=+-2, b in {1,2}") {
  for (long d = -30; d <= 30; ++d) {
    if (d == 0 || d % 4 == 0) continue;
    if (!fourth_power_free(d)) continue;
    for (long b : {1L, 2L, 3L, 5L}) {
      long a = 7;  // squarefree, coprime to every b in the sweep, a >= b
      if (b % 2 == 1 && b != 1 && d % (b * b) == 0) continue;  // alias of smaller d
      Verdict v = screen_family(FamilySpec::sd_family(rat(d), rat(a), rat(b)));
      bool expect_inconclusive = (d == 2 || d == -2) && (b == 1 || b == 2);
      CAPTURE(d);
      CAPTURE(b);
      CHECK(v.st_holds == !expect_inconclusive);
    }
  }
}

TEST_CASE("property: condition Z invariant under permutation and common scaling") {
  auto& rng = qbtest::rng();
  std::uniform_int_distribution<long> pick(1, 40), lpick(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Rational, 4> q;
    for (auto& x : q) x = rat(random_odd(rng, -40, 40)) * rat(1, pick(rng));
    bool base = condition_Z(q);
    std::array<Rational, 4> perm = q;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(condition_Z(perm) == base);
    Rational l = rat(lpick(rng), lpick(rng));
    std::array<Rational, 4> scaled = {q[0] * l, q[1] * l, q[2] * l, q[3] * l};
    CHECK(condition_Z(scaled) == base);
  }
}

TEST_CASE("property: condition Z invariant under 4th powers, -1, and 4 on one entry") {
  auto& rng = qbtest::rng();
  std::uniform_int_distribution<int> idx(0, 3), fpick(1, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Rational, 4> q;
    for (auto& x : q) x = rat(random_odd(rng, -60, 60));
    bool base = condition_Z(q);
    int j = idx(rng);
    std::array<Rational, 4> m = q;
    m[j] *= rat_pow(rat(fpick(rng)), 4);
    CHECK(condition_Z(m) == base);
    m = q;
    m[j] *= rat(-1);
    CHECK(condition_Z(m) == base);
    m = q;
    m[j] *= rat(4);
    CHECK(condition_Z(m) == base);
  }
}

TEST_CASE("property: all-odd quadruples lie in W (200 samples)") {
  auto& rng = qbtest::rng();
  for (int trial = 0; trial < 200; ++trial) {
    std::array<Rational, 4> q;
    for (auto& x : q) x = rat(random_odd(rng, -500, 500));
    CAPTURE(q[0].get_str());
    CHECK(condition_Z(q));
    CHECK(screen_family(FamilySpec::all_odd(q)).st_holds);
  }
}

TEST_CASE("property: classify_pair agrees with condition Z (200 admissible pairs)") {
  auto& rng = qbtest::rng();
  long primes[] = {3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> coin(0, 1), ppick(0, 4), epick13(0, 1);
  int nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    long a, b;
    if (coin(rng)) {
      // Construct a pair of the lemma's shape so both branches are exercised.
      long p = primes[ppick(rng)];
      a = (epick13(rng) ? p * p * p : p) * (coin(rng) ? -1 : 1);
      if (coin(rng)) {
        long q = primes[ppick(rng)];
        if (q != p) a *= q * q;
      }
      b = p * p * (coin(rng) ? -1 : 1);
      if (!fourth_power_free(a) || !fourth_power_free(b)) {
        --trial;
        continue;
      }
    } else {
      a = random_odd(rng, -200, 200);
      b = random_odd(rng, -200, 200);
      if (!fourth_power_free(a) || !fourth_power_free(b)) {
        --trial;
        continue;
      }
    }
    // classify_pair internally asserts agreement with condition_Z; also check
    // the equivalence explicitly.
    PairForm f = classify_pair(a, b);
    bool in_W = condition_Z({rat(1), rat(1), rat(2 * a), rat(2 * b)});
    CAPTURE(a);
    CAPTURE(b);
    CHECK((f != PairForm::none) == !in_W);
    if (f != PairForm::none) ++nontrivial;
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("property: W-membership preserved by powers of a fresh odd prime") {
  auto& rng = qbtest::rng();
  std::uniform_int_distribution<long> lp(-3, 3);
  long fresh[] = {101, 103, 107, 109, 113};
  std::uniform_int_distribution<int> fp(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<Rational, 4> q;
    for (auto& x : q) x = rat(random_odd(rng, -60, 60));
    if (!condition_Z(q)) continue;  // part 4 is stated for (a:b:c:d) in W
    long p = fresh[fp(rng)];
    bool divides = false;
    for (auto& x : q)
      if (x.get_num() % p == 0) divides = true;
    if (divides) continue;
    std::array<Rational, 4> m = q;
    for (auto& x : m) x *= rat_pow(rat(p), lp(rng));
    CAPTURE(p);
    CHECK(condition_Z(m));
  }
}
