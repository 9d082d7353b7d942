#pragma once
// The diagonal quartic surface x^4 - y^4 = z^4 - w^4, its genus-one
// fibration t = (x^2-y^2)/(z^2-w^2), the 24 vertical lines, and exact
// valuations/residues of functions along those lines.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qb/funcfield.hpp"
#include "qb/mpoly.hpp"

namespace qb {

// ---- function catalog (chart w = 1, coefficients in Q(i)) ----
const MPoly& surface_relation();  // x^4 - y^4 - z^4 + 1
const SurfFunc& sf_t();
const SurfFunc& sf_u();   // f1 = (x-y)/(z-1)
const SurfFunc& sf_f2();  // (x+y)/(z-1)
const SurfFunc& sf_v();   // (t^3 - u^2) f2 / t
const SurfFunc& sf_G();   // u^2 - t^3
const SurfFunc& sf_F();   // v - i (t^2-1) u
const SurfFunc& sf_A(int j);  // j = 1..5
const SurfFunc& sf_B();
SurfFunc sf_t_shift(const NFElement& t0);  // t - t0, t0 in Q(i)
SurfFunc sf_coord(int i);                  // x, y, z as functions

// True iff the numerator of h vanishes identically on the surface.
bool surf_is_zero(const SurfFunc& h);
bool surf_equal(const SurfFunc& a, const SurfFunc& b);

// ---- the 24 lines ----
enum class FiberId { T0, T1, Tm1, Ti, Tmi, Tinf };
std::string fiber_name(FiberId f);
// The fiber parameter value as an element of Q(i); throws for Tinf.
NFElement fiber_value(FiberId f);
// t - t0 for a finite fiber, as a cached catalog function (T0 gives t).
const SurfFunc& sf_fiber_shift(FiberId f);

struct Line {
  int id;                 // 1..24
  FiberId fiber;
  const NumberField* k;   // field of definition of the parametrization
  std::array<Poly, 4> param;  // (x:y:z:w) as polynomials in the parameter s
  std::string equations;      // human-readable defining equations
};
const std::vector<Line>& line_catalog();

// ---- restriction and vertical valuation ----
struct Restriction {
  enum Kind { Zero, Infinity, Finite } kind;
  RatFunc value;  // meaningful iff kind == Finite
};
Restriction restrict_to_line(const SurfFunc& h, const Line& l);

struct ValRes {
  long v;       // valuation of h along the line
  RatFunc sbar; // residue h / pi^v restricted to the line (pi = t - t0 or 1/t)
};
ValRes vertical_val_res(const SurfFunc& h, const Line& l);

// line id -> valuation, omitting zeros.
std::map<int, long> vertical_divisor(const SurfFunc& h);

// ---- identity catalog ----
// Names: "a_F", "a_G", "a_G_printed", "b", "c", "d", "e1", "e2".
bool verify_identity(const std::string& name);
std::vector<std::string> identity_names();

// ---- evaluation at points ----
template <class R>
struct SurfacePoint {
  R x, y, z;  // chart w = 1
};

template <class R, class CMap>
R surf_eval(const SurfFunc& h, const SurfacePoint<R>& p, const R& zero, const R& one, CMap cmap) {
  std::array<R, 3> vals{p.x, p.y, p.z};
  R num = mp_eval(h.num(), vals, zero, one, cmap);
  R den = mp_eval(h.den(), vals, zero, one, cmap);
  return num / den;
}

}  // namespace qb
