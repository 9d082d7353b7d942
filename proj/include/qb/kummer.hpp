#pragma once
// Classes in Q*/Q*^4 and the screeners of section 5: condition Z, the set W,
// the classification of bad pairs (1:1:2a:2b), and family screening.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qb/rational.hpp"

namespace qb {

struct FourthClassVec {
  int sign_exp = 0;                   // exponent of -1, mod 4... only 0/1 matter
  std::map<Integer, int> prime_exps;  // prime -> exponent mod 4 (zeros omitted)

  static FourthClassVec from_rational(const Rational& r);
  friend FourthClassVec operator*(const FourthClassVec& x, const FourthClassVec& y);
  FourthClassVec pow(int k) const;
  bool is_identity() const { return sign_exp == 0 && prime_exps.empty(); }
  friend bool operator==(const FourthClassVec& x, const FourthClassVec& y) {
    return x.sign_exp == y.sign_exp && x.prime_exps == y.prime_exps;
  }
  std::string str() const;
};

// target in the Z/4-span of the generators, by exhaustive enumeration.
bool mod4_member(const FourthClassVec& target, const std::vector<FourthClassVec>& gens);

// True iff (a0:a1:a2:a3) lies in W, i.e. 2 is not in <a1/a0, a2/a0, a3/a0, -4>
// modulo fourth powers.  Cross-checks the equivalent +-2 form.
bool condition_Z(const std::array<Rational, 4>& a);

enum class PairForm { form_a, form_b, none };
// Lemma "equi" part 6 pattern match for odd fourth-power-free a,b != +-1;
// cross-checked against condition_Z(1,1,2a,2b).
PairForm classify_pair(long a, long b);

struct FamilySpec {
  enum Kind { SD, General, AllOdd } kind;
  // SD: d fourth-power free, not divisible by 4; a,b squarefree coprime
  // positive with a >= b.  Quadruple is (1, 4, d a^2, d b^2).
  Rational d, a, b;
  std::array<Rational, 4> quad;  // General / AllOdd
  static FamilySpec sd_family(const Rational& d, const Rational& a, const Rational& b);
  static FamilySpec general(const std::array<Rational, 4>& q);
  static FamilySpec all_odd(const std::array<Rational, 4>& q);
};

struct Verdict {
  bool st_holds;  // true = ST_holds_by_ccprop, false = inconclusive
  bool in_W;
  std::string citation;
};
Verdict screen_family(const FamilySpec& spec);

}  // namespace qb
