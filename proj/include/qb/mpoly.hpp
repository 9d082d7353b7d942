#pragma once
// Sparse polynomials in three variables over a catalog number field, plus
// fractions of them (functions on the quartic surface in the chart w=1).

#include <array>
#include <map>
#include <string>

#include "qb/numfield.hpp"

namespace qb {

class MPoly {
 public:
  using Expo = std::array<int, 3>;

  MPoly() = default;
  explicit MPoly(const NumberField* K) : K_(K) {}
  static MPoly constant(const NumberField* K, const NFElement& c);
  static MPoly constant(const NumberField* K, const Rational& c);
  static MPoly var(const NumberField* K, int i, int e = 1);

  const NumberField* field() const { return K_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  NFElement constant_value() const;  // coefficient of the 1 monomial
  int deg_in(int v) const;
  int total_deg() const;
  const std::map<Expo, NFElement>& terms() const { return t_; }
  void add_term(const Expo& e, const NFElement& c);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
  MPoly pow(long k) const;

  // Remainder of repeated division by rel, treated as a polynomial in
  // variable v whose leading coefficient (in v) is a nonzero constant.
  MPoly reduce_mod(const MPoly& rel, int v) const;

  std::string str(const std::array<std::string, 3>& names = {"x", "y", "z"}) const;

 private:
  const NumberField* K_ = nullptr;
  std::map<Expo, NFElement> t_;  // no zero coefficients stored
};

// Generic evaluation: substitute ring values for the variables.  cmap lifts
// an NFElement coefficient into R; R needs +, * and copy construction.
template <class R, class CMap>
R mp_eval(const MPoly& p, const std::array<R, 3>& vals, const R& zero, const R& one, CMap cmap) {
  // Cache variable powers.
  std::array<std::vector<R>, 3> pows;
  for (int i = 0; i < 3; ++i) {
    pows[i].push_back(one);
    for (int k = 1; k <= p.deg_in(i); ++k) pows[i].push_back(pows[i].back() * vals[i]);
  }
  R acc = zero;
  for (const auto& [e, c] : p.terms()) {
    R term = cmap(c);
    for (int i = 0; i < 3; ++i)
      if (e[i] > 0) term = term * pows[i][e[i]];
    acc = acc + term;
  }
  return acc;
}

// A function on the surface in the chart w=1, as a fraction of MPolys with
// no gcd reduction (equality and vanishing are decided modulo the surface
// relation by callers).
class SurfFunc {
 public:
  SurfFunc() = default;
  SurfFunc(MPoly num, MPoly den);
  explicit SurfFunc(MPoly num);
  static SurfFunc constant(const NumberField* K, const NFElement& c);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  const NumberField* field() const { return num_.field(); }

  SurfFunc operator-() const;
  SurfFunc inverse() const;
  SurfFunc pow(long k) const;
  friend SurfFunc operator+(const SurfFunc& a, const SurfFunc& b);
  friend SurfFunc operator-(const SurfFunc& a, const SurfFunc& b);
  friend SurfFunc operator*(const SurfFunc& a, const SurfFunc& b);
  friend SurfFunc operator/(const SurfFunc& a, const SurfFunc& b);

  std::string str() const;

 private:
  MPoly num_, den_;
};

}  // namespace qb
