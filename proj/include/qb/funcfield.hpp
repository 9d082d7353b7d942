#pragma once
// Univariate function field K(s) over a catalog number field K: polynomials,
// rational functions, places of P^1, valuations, and multiplicity-mod-n
// tests via squarefree decomposition (never full factorization).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qb/numfield.hpp"

namespace qb {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const NumberField* K) : K_(K) {}
  Poly(const NumberField* K, std::vector<NFElement> c);
  static Poly constant(const NumberField* K, const NFElement& v);
  static Poly constant(const NumberField* K, const Rational& v);
  static Poly variable(const NumberField* K);

  const NumberField* field() const { return K_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  NFElement coeff(int i) const;
  const NFElement& lead() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(long k) const;  // k >= 0
  NFElement eval(const NFElement& a) const;
  std::string str(const std::string& var = "s") const;

 private:
  const NumberField* K_ = nullptr;
  std::vector<NFElement> c_;  // trimmed, index = degree
  void trim();
};

Poly poly_gcd(Poly a, Poly b);  // monic (or zero)

// Yun decomposition f = lc * prod part_i ^ mult_i with each part squarefree,
// monic, pairwise coprime.
struct SquarefreePart {
  Poly part;
  int mult;
};
std::vector<SquarefreePart> squarefree_decomposition(const Poly& f);

class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);  // reduced; denominator made monic
  static RatFunc constant(const NumberField* K, const NFElement& v);
  static RatFunc variable(const NumberField* K);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const NumberField* field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  NFElement constant_value() const;  // requires is_constant()

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(long k) const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
  RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

  NFElement eval(const NFElement& a) const;  // throws on pole
  std::string str(const std::string& var = "s") const;

 private:
  Poly num_, den_;
  void normalize();
};

// A place of P^1 over K: a monic finite polynomial (irreducible for honest
// places; degree-1 in all uses that take unit parts) or the infinite place.
struct Place {
  bool at_infinity = false;
  Poly p;  // monic, only for finite places
};
Place place_finite(Poly p);
Place place_of_value(const NumberField* K, const NFElement& a);  // s - a
Place place_infinity(const NumberField* K);

// Valuation of a nonzero rational function; uniformizer p (finite) or 1/s.
long rf_val(const RatFunc& f, const Place& v);
// Value of f * pi^{-val} at the place; requires a degree-1 finite place or
// the infinite place (residue field = K).
NFElement rf_unit_part(const RatFunc& f, const Place& v);

// If f = c * g^n for a constant c and g in K(s), return c (with g chosen
// monic-over-monic); otherwise nullopt.  f must be nonzero.
std::optional<NFElement> rf_nth_power_up_to_const(const RatFunc& f, int n);

}  // namespace qb
