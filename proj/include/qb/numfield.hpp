#pragma once
// The fixed catalog of number fields used throughout:
//   Q,  Q(i),  Q(sqrt2),  Q(zeta8),  and the degree-8 field M = Q(i, 2^{1/4}).
// Each field is Q[t]/m(t) on a power basis; quadratic-tower data (computed
// and certified at startup by exact linear algebra) provides subfield
// decompositions, conjugation, and an n-th root algorithm.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qb/ratpoly.hpp"
#include "qb/rational.hpp"

namespace qb {

enum class FieldId { Q, GaussQ, Root2Q, Zeta8Q, M8 };

std::string field_id_name(FieldId id);

class NumberField;

class NFElement {
 public:
  NFElement() = default;
  NFElement(const NumberField* f, RatPoly rep);  // rep reduced mod minpoly

  const NumberField* field() const { return field_; }
  // Coefficient vector of fixed length = field degree.
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const;  // coefficient of t^0
  Rational rational_value() const;  // requires is_rational()

  NFElement operator-() const;
  NFElement inverse() const;
  NFElement pow(long k) const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  friend bool operator==(const NFElement& a, const NFElement& b);
  friend bool operator!=(const NFElement& a, const NFElement& b);

  NFElement& operator+=(const NFElement& b) { return *this = *this + b; }
  NFElement& operator-=(const NFElement& b) { return *this = *this - b; }
  NFElement& operator*=(const NFElement& b) { return *this = *this * b; }
  NFElement& operator/=(const NFElement& b) { return *this = *this / b; }

  // Raw rendering "c0 + c1*g + ..." in the field's generator symbol.
  std::string str() const;

 private:
  const NumberField* field_ = nullptr;
  std::vector<Rational> c_;
};

using RatMatrix = std::vector<std::vector<Rational>>;

// Exact inverse of a square rational matrix; throws if singular.
RatMatrix mat_inverse(const RatMatrix& m);
std::vector<Rational> mat_apply(const RatMatrix& m, const std::vector<Rational>& v);

// Data for writing a degree-2d field K as B(g), g^2 = delta in B:
// every x in K is uniquely embed(u) + embed(v)*g with u, v in B.
struct QuadraticSplit {
  const NumberField* base = nullptr;
  NFElement gen_image;  // image of B's generator in K
  NFElement g;          // square root of delta, in K
  NFElement delta;      // in B
  RatMatrix from_pair;  // columns: embed(basis_j), embed(basis_j)*g
  RatMatrix to_pair;    // inverse of from_pair

  NFElement embed(const NFElement& u) const;
  std::pair<NFElement, NFElement> split(const NFElement& x) const;
  NFElement combine(const NFElement& u, const NFElement& v) const;
  // Conjugation embed(u)+embed(v)*g -> embed(u)-embed(v)*g.
  NFElement conj(const NFElement& x) const;
  // Relative norm u^2 - delta*v^2, as an element of the base field.
  NFElement norm(const NFElement& x) const;
};

class NumberField {
 public:
  FieldId id;
  std::string name;        // e.g. "Q(zeta8)"
  std::string gen_symbol;  // e.g. "zeta8"
  RatPoly min_poly;        // monic

  int degree() const { return rp_deg(min_poly); }

  NFElement zero() const;
  NFElement one() const;
  NFElement from_rational(const Rational& r) const;
  NFElement gen() const;
  NFElement element(RatPoly rep) const;  // reduced mod min_poly

  bool has_i() const;  // contains a square root of -1

  // Primary quadratic tower used by the n-th root recursion (null for Q).
  const QuadraticSplit* tower() const;
  // Decomposition over a specific catalog subfield, if registered.
  const QuadraticSplit* split_over(FieldId base_id) const;

  std::vector<std::unique_ptr<QuadraticSplit>> splits;  // [0] = primary
};

// ---- catalog ----
const NumberField& field_Q();
const NumberField& field_Qi();
const NumberField& field_Qsqrt2();
const NumberField& field_Qzeta8();
const NumberField& field_M();
const NumberField& field_by_id(FieldId id);

// Distinguished constants (throws if the field lacks them).
NFElement nf_i(const NumberField& K);
NFElement nf_sqrt2(const NumberField& K);
NFElement nf_zeta8(const NumberField& K);
NFElement nf_root4_2(const NumberField& K);  // 2^{1/4}, M only

// Canonical inclusion along  Q < Q(i), Q(sqrt2) < Q(zeta8) < M.
bool has_embedding(FieldId src, FieldId dst);
NFElement embed_to(const NFElement& x, const NumberField& dst);

// Exact n-th root in the element's own field, n in {1,2,4}.  When roots
// exist the canonical one is returned: among all n-th roots, those whose
// highest nonzero coordinate is positive, then the lexicographically
// largest coefficient vector read from the top coordinate down.
std::optional<NFElement> nf_nth_root(const NFElement& x, int n);
bool nf_is_nth_power(const NFElement& x, int n);

}  // namespace qb
