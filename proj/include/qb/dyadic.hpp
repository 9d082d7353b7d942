#pragma once
// Completions at 2 of the catalog fields:
//   Q2,  Q2(i),  Q2(sqrt2),  Q2(zeta8) = Q2(i,sqrt2),  and M_u = Q2(i,2^{1/4}).
// Every completion here is totally ramified (f = 1), so an element's
// valuation in uniformizer units is the 2-adic valuation of its norm,
// computed exactly as a resultant with the defining polynomial.
//
// Elements are polynomials in the global generator with rational
// 2-integral coefficients plus an absolute precision O(pi^prec); arithmetic
// tracks precision pessimistically and truncates coefficients to keep
// representatives small.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qb/numfield.hpp"
#include "qb/rational.hpp"
#include "qb/ratpoly.hpp"

namespace qb {

// Default working precision in uniformizer units (env QB_PRECISION, else 40).
int dy_default_prec();
// Override (0 restores the environment/default value).
void dy_set_default_prec(int n);

struct DyadicField {
  FieldId id;
  std::string label;        // e.g. "Q2(sqrt2)"
  int deg = 1;              // = e, all catalog completions have f = 1
  int e = 1;
  RatPoly min_poly;         // the global field's minimal polynomial
  std::vector<Rational> pi; // uniformizer, coefficients in the power basis
  RatMatrix to_pi;          // power-basis coords -> pi-power-basis coords
  const NumberField* global = nullptr;
};

const DyadicField& dy_field(FieldId id);
const DyadicField& dyQ2();
const DyadicField& dyQ2i();
const DyadicField& dyQ2r2();
const DyadicField& dyQ2z8();
const DyadicField& dyMu();

struct dy_precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class DyadicElt {
 public:
  DyadicElt() = default;
  // rep reduced mod min_poly; vlow is a guaranteed valuation lower bound.
  DyadicElt(const DyadicField* K, RatPoly rep, long prec, long vlow);

  const DyadicField* field() const { return K_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  long prec() const { return prec_; }
  long vlow() const { return vlow_; }
  bool rep_is_zero() const;

  DyadicElt operator-() const;
  DyadicElt inverse() const;  // prec drops by 2*val
  DyadicElt pow(long k) const;

  friend DyadicElt operator+(const DyadicElt& a, const DyadicElt& b);
  friend DyadicElt operator-(const DyadicElt& a, const DyadicElt& b);
  friend DyadicElt operator*(const DyadicElt& a, const DyadicElt& b);
  friend DyadicElt operator/(const DyadicElt& a, const DyadicElt& b);

  std::string str() const;  // truncated coefficients + "O(pi^prec)"

 private:
  const DyadicField* K_ = nullptr;
  std::vector<Rational> c_;
  long prec_ = 0;
  long vlow_ = 0;
};

// ---- constructors ----
DyadicElt dy_from_rational(const DyadicField& K, const Rational& r, int prec = 0);
// x's field must embed into K.global along the catalog inclusions.
DyadicElt dy_from_global(const NFElement& x, const DyadicField& K, int prec = 0);
DyadicElt dy_pi(const DyadicField& K, int prec = 0);
DyadicElt dy_one(const DyadicField& K, int prec = 0);

// ---- valuation ----
// Exact valuation of x (pi units); throws dy_precision_error when the
// representative vanishes or its valuation reaches the precision bound.
long dy_val(const DyadicElt& x);
// True when val(x) >= bound (a zero representative counts); requires
// prec >= bound.
bool dy_val_at_least(const DyadicElt& x, long bound);
DyadicElt dy_unit_part(const DyadicElt& x);
// Tighten the stored valuation lower bound to the exact valuation.
void dy_refresh_vlow(DyadicElt& x);

// Move x along the catalog inclusion into the larger completion L
// (precision rescales by the ramification ratio).
DyadicElt dy_embed(const DyadicElt& x, const DyadicField& L);
// Inverse of dy_embed when x lies in the subfield B (to precision);
// nullopt when the residual is not O(pi^prec).
std::optional<DyadicElt> dy_descend(const DyadicElt& x, const DyadicField& B);

// Canonical residue key of x mod pi^m (digits in the pi-power integral
// basis); x must have vlow >= 0.
std::vector<Integer> dy_residue_key(const DyadicElt& x, int m);

// ---- roots and square classes ----
// n in {2,4}.  When roots exist, returns the canonical one: maximal
// val(root-1), ties broken by the smaller residue key.
std::optional<DyadicElt> dy_nth_root(const DyadicElt& c, int n);
bool dy_is_square(const DyadicElt& c);

// Canonical square-class representative: the first element of the fixed
// enumeration {1 + sum a_j pi^j : j = 1..2e} x {1, pi} whose ratio to c is
// a square.  Catalog fields with degree <= 4 only.
DyadicElt dy_square_class(const DyadicElt& c);
bool dy_same_square_class(const DyadicElt& a, const DyadicElt& b);

// ---- invariants and symbols ----
struct InvValue {
  int halves = 0;  // value halves/2 in Q/Z, halves in {0,1}
  friend InvValue operator+(InvValue a, InvValue b) { return {(a.halves + b.halves) % 2}; }
  friend bool operator==(InvValue a, InvValue b) { return a.halves == b.halves; }
  friend bool operator!=(InvValue a, InvValue b) { return a.halves != b.halves; }
  std::string str() const { return halves ? "1/2" : "0"; }
};

// Classical epsilon/omega exponent formula for the quaternion (a,b) over Q2.
InvValue hilbert_q2(const Rational& a, const Rational& b);

// Independent oracle: 0 iff z^2 = a x^2 + b y^2 has a primitive solution to
// the Hensel depth; catalog fields with degree <= 4 only.
InvValue hilbert_bruteforce(const DyadicElt& a, const DyadicElt& b);
InvValue hilbert_bruteforce_q2(const Rational& a, const Rational& b);

// Cor([sqrt(d), a + b sqrt(d)]) = [a, -d] + [-a b, a^2 - d b^2] over Q2.
struct CoresQuad {
  std::array<std::pair<Rational, Rational>, 2> symbols;
  InvValue inv() const;
};
CoresQuad cores_quad(const Rational& d, const Rational& a, const Rational& b);

// degree * v in Q/Z (restriction multiplies invariants by the degree).
InvValue inv_restrict(InvValue v, int degree);

// Trace and norm of x over the index-2 subfield B (solved exactly from
// x^2 - t x + n = 0 and verified to precision); throws if x does not
// satisfy a quadratic relation over B to precision.
struct QuadData {
  DyadicElt trace;  // in B
  DyadicElt norm;   // in B
};
QuadData dy_norm_quad(const DyadicElt& x, const DyadicField& B);

}  // namespace qb
