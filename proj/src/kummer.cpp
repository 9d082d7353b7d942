#include "qb/kummer.hpp"

#include <sstream>
#include <stdexcept>

namespace qb {

namespace {

int mod4(long e) { return static_cast<int>(((e % 4) + 4) % 4); }

bool is_fourth_power_free(const Factorization& f) {
  for (auto& [p, e] : f.exponents)
    if (e >= 4) return false;
  return true;
}

}  // namespace

FourthClassVec FourthClassVec::from_rational(const Rational& r) {
  if (r == 0) throw std::invalid_argument("FourthClassVec: zero");
  Factorization f = rational_factor(r);
  FourthClassVec v;
  v.sign_exp = f.sign < 0 ? 1 : 0;
  for (auto& [p, e] : f.exponents)
    if (mod4(e)) v.prime_exps[p] = mod4(e);
  return v;
}

FourthClassVec operator*(const FourthClassVec& x, const FourthClassVec& y) {
  FourthClassVec r = x;
  r.sign_exp = (x.sign_exp + y.sign_exp) % 2;  // (-1)^2 = 1 is a fourth power
  for (auto& [p, e] : y.prime_exps) {
    int ne = mod4(r.prime_exps.count(p) ? r.prime_exps[p] + e : e);
    if (ne)
      r.prime_exps[p] = ne;
    else
      r.prime_exps.erase(p);
  }
  return r;
}

FourthClassVec FourthClassVec::pow(int k) const {
  FourthClassVec r;
  r.sign_exp = (sign_exp * k) % 2;
  for (auto& [p, e] : prime_exps)
    if (mod4(e * k)) r.prime_exps[p] = mod4(e * k);
  return r;
}

std::string FourthClassVec::str() const {
  std::ostringstream os;
  os << (sign_exp ? "-1" : "1");
  for (auto& [p, e] : prime_exps) os << " * " << p.get_str() << "^" << e;
  return os.str();
}

bool mod4_member(const FourthClassVec& target, const std::vector<FourthClassVec>& gens) {
  if (gens.size() > 8) throw std::invalid_argument("mod4_member: more than 8 generators");
  size_t total = 1;
  for (size_t j = 0; j < gens.size(); ++j) total *= 4;
  for (size_t mask = 0; mask < total; ++mask) {
    FourthClassVec acc;
    size_t m = mask;
    for (const FourthClassVec& g : gens) {
      acc = acc * g.pow(static_cast<int>(m % 4));
      m /= 4;
    }
    if (acc == target) return true;
  }
  return false;
}

bool condition_Z(const std::array<Rational, 4>& a) {
  for (const Rational& x : a)
    if (x == 0) throw std::invalid_argument("condition_Z: zero coefficient");
  std::vector<FourthClassVec> ratios;
  for (int j = 1; j < 4; ++j) ratios.push_back(FourthClassVec::from_rational(a[j] / a[0]));
  FourthClassVec two = FourthClassVec::from_rational(rat(2));
  std::vector<FourthClassVec> with_m4 = ratios;
  with_m4.push_back(FourthClassVec::from_rational(rat(-4)));
  bool member = mod4_member(two, with_m4);
  // Equivalent form of Lemma "woul": 2 or -2 lies in the ratio subgroup alone.
  bool member_pm = mod4_member(two, ratios) ||
                   mod4_member(FourthClassVec::from_rational(rat(-2)), ratios);
  if (member != member_pm) throw std::logic_error("condition_Z: equivalent forms disagree");
  return !member;
}

namespace {

// Does (x, y) match one of the two shapes of Lemma "equi" part 6?
// y = +-(p_1 ... p_n)^2, x = +-p_1^{1 or 3} ... p_n^{1 or 3} * (q_1 ... q_r)^2,
// with distinct odd primes and r = 0 (form b) or r > 0 (form a).
PairForm match_forms(const Factorization& fx, const Factorization& fy) {
  for (auto& [p, e] : fy.exponents)
    if (e != 2) return PairForm::none;
  bool extra_squares = false;
  for (auto& [p, e] : fx.exponents) {
    if (fy.exponents.count(p)) {
      if (e != 1 && e != 3) return PairForm::none;
    } else {
      if (e != 2) return PairForm::none;
      extra_squares = true;
    }
  }
  // Every prime of y must appear in x (to an odd power).
  for (auto& [p, e] : fy.exponents)
    if (!fx.exponents.count(p)) return PairForm::none;
  return extra_squares ? PairForm::form_a : PairForm::form_b;
}

}  // namespace

PairForm classify_pair(long a, long b) {
  if (a % 2 == 0 || b % 2 == 0) throw std::invalid_argument("classify_pair: even argument");
  if (a == 1 || a == -1 || b == 1 || b == -1)
    throw std::invalid_argument("classify_pair: argument is a unit");
  Factorization fa = rational_factor(rat(a)), fb = rational_factor(rat(b));
  if (!is_fourth_power_free(fa) || !is_fourth_power_free(fb))
    throw std::invalid_argument("classify_pair: argument not fourth-power free");
  PairForm r = match_forms(fa, fb);
  if (r == PairForm::none) r = match_forms(fb, fa);
  bool in_W = condition_Z({rat(1), rat(1), rat(2 * a), rat(2 * b)});
  if ((r != PairForm::none) != !in_W)
    throw std::logic_error("classify_pair: disagrees with condition_Z");
  return r;
}

FamilySpec FamilySpec::sd_family(const Rational& d, const Rational& a, const Rational& b) {
  if (d == 0 || a <= 0 || b <= 0) throw std::invalid_argument("sd_family: bad parameters");
  if (!rat_is_integer(d) || !rat_is_integer(a) || !rat_is_integer(b))
    throw std::invalid_argument("sd_family: parameters must be integers");
  Factorization fd = rational_factor(d);
  if (!is_fourth_power_free(fd)) throw std::invalid_argument("sd_family: d not 4th-power free");
  if (rat_val2(d) >= 2) throw std::invalid_argument("sd_family: 4 divides d");
  for (const Rational* s : {&a, &b})
    for (auto& [p, e] : rational_factor(*s).exponents)
      if (e >= 2) throw std::invalid_argument("sd_family: a, b must be squarefree");
  Integer g = gcd(a.get_num(), b.get_num());
  if (g != 1) throw std::invalid_argument("sd_family: a, b must be coprime");
  if (a < b) throw std::invalid_argument("sd_family: requires a >= b");
  // An odd square factor of d shared with a or b makes d a^2 or d b^2 contain
  // a fourth power; the instance is then an alias of one with smaller (d, b)
  // and the normalization is not canonical.
  for (auto& [p, e] : fd.exponents)
    if (p % 2 == 1 && e >= 2 && (a.get_num() % p == 0 || b.get_num() % p == 0))
      throw std::invalid_argument("sd_family: square factor of d divides a or b");
  FamilySpec s;
  s.kind = SD;
  s.d = d;
  s.a = a;
  s.b = b;
  s.quad = {rat(1), rat(4), d * a * a, d * b * b};
  return s;
}

FamilySpec FamilySpec::general(const std::array<Rational, 4>& q) {
  FamilySpec s;
  s.kind = General;
  s.quad = q;
  return s;
}

FamilySpec FamilySpec::all_odd(const std::array<Rational, 4>& q) {
  for (const Rational& x : q)
    if (x == 0 || !rat_is_integer(x) || rat_val2(x) != 0)
      throw std::invalid_argument("all_odd: coefficients must be odd integers");
  FamilySpec s;
  s.kind = AllOdd;
  s.quad = q;
  return s;
}

Verdict screen_family(const FamilySpec& spec) {
  Verdict v;
  v.in_W = condition_Z(spec.quad);
  v.st_holds = v.in_W;
  switch (spec.kind) {
    case FamilySpec::SD:
      v.citation = v.st_holds ? "ST holds: (a0:a1:a2:a3) in W (Theorem ccprop)"
                              : "inconclusive: condition Z fails (SD family theorem, d=+-2 case)";
      break;
    case FamilySpec::AllOdd:
      v.citation = "ST holds: all-odd coefficients (Theorem gen via Lemma equi part 5)";
      break;
    default:
      v.citation = v.st_holds ? "ST holds: (a0:a1:a2:a3) in W (Theorem ccprop)"
                              : "inconclusive: condition Z fails (criterion is sufficient only)";
  }
  return v;
}

}  // namespace qb
