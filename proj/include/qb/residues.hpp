#pragma once
// Symbol algebras (a,b)_n over the function field of the quartic surface,
// tame residues along the 24 vertical lines, purity scans, the residue
// tables for the twisted elements x_j, and the Faddeev-constraint solver.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qb/geometry.hpp"

namespace qb {

// The multiplicative monoid tracked exactly: constant * prod atom^e * a^ea * b^eb,
// with atoms the seven functions whose valuations along every line are known.
enum class Atom { F, G, T, Tp1, Tm1, Tpi, Tmi };  // t+1, t-1, t+i, t-i
const SurfFunc& atom_func(Atom a);
std::string atom_name(Atom a);

struct TrackedElt {
  NFElement cst;             // over Q(i), nonzero
  std::map<Atom, int> exps;  // atom -> exponent (zeros omitted)
  int ea = 0, eb = 0;        // exponents of the formal parameters a, b

  static TrackedElt constant(const NFElement& c);
  static TrackedElt atom(Atom a, int e = 1);
  static TrackedElt param_a();
  static TrackedElt param_b();

  TrackedElt pow(int k) const;
  friend TrackedElt operator*(const TrackedElt& x, const TrackedElt& y);
  std::string str() const;

  // Valuation along a line (a, b count as constants).
  long val_at(const Line& l) const;
  // Restriction to the line; requires val_at(l) == 0.
  RatFunc restrict_at(const Line& l) const;
};

struct Symbol {
  int n;  // 2 or 4; n=4 uses the identification mu_4 = Z/4 sending i to 1
  TrackedElt left, right;
  std::string str() const;
};

struct BrauerElement {
  std::vector<Symbol> terms;  // formal sum
  friend BrauerElement operator+(const BrauerElement& x, const BrauerElement& y);
  std::string str() const;
};

// Residue comparison mode: geometric (all constants trivial) or arithmetic
// over a concrete field containing the constants.
struct Mode {
  const NumberField* field;  // nullptr = geometric
};
inline Mode geometric() { return {nullptr}; }
inline Mode arithmetic(const NumberField& f) { return {&f}; }

// A class in H^1(k(Y), mu_n): constant * (monic/monic function part) * a^ea * b^eb,
// considered modulo n-th powers per the mode.
struct ResidueClass {
  const NumberField* k;  // field of definition of the line
  Mode mode;
  int n;
  NFElement cst;   // over k
  RatFunc func;    // over k; monic numerator and denominator
  long exp_a = 0, exp_b = 0;

  bool is_trivial() const;
  bool same_class(const ResidueClass& o) const;
  // Lift into mu_4 via q -> q^2 (no-op if already n=4).
  ResidueClass to_mu4() const;
  std::string str() const;
};

ResidueClass tame_residue(const Symbol& s, const Line& l, Mode mode);
ResidueClass brauer_residue(const BrauerElement& e, const Line& l, Mode mode);

// Lines carrying a nontrivial residue.
std::vector<int> purity_scan(const BrauerElement& e, Mode mode);

// Catalog: "A", "D", "E", "Z", "B", "E1".
const BrauerElement& brel(const std::string& name);
// x_j = base_j + (a,F)_2 + (b,G)_2 with formal parameters (j = 1,2,3 for A,D,E).
BrauerElement variant_x(int j);
// The same with concrete values substituted for a and b.
BrauerElement variant_x(int j, const NFElement& a, const NFElement& b);

struct TableRow {
  int line_id;
  ResidueClass rc;
};
// Rows for all 24 lines in arithmetic mode over `field`.
std::vector<TableRow> residue_table(int variant, const NumberField& field);

// Check a residue row against a printed mu_2 table value c * a^pa * b^pb,
// up to squares in the comparison field.
bool row_matches(const ResidueClass& rc, const NFElement& printed, int pa, int pb);

struct FaddeevReport {
  int variant;
  const NumberField* field;
  bool a_forced = false, b_forced = false;
  NFElement a_class, b_class;            // square-class representatives
  bool consistent = true;                // pairwise fiber constraints solvable
  std::map<FiberId, NFElement> fiber_chars;  // c_j when consistent
  NFElement obstruction_class;           // sum of c_j, or the clashing ratio
  bool descends = false;
  std::vector<std::string> log;
};
FaddeevReport faddeev_solve(int variant, const NumberField& field);

}  // namespace qb
