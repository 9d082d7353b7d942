#pragma once
// Deterministic row-oriented rendering of catalog objects, shared by the CLI
// and the python bindings.  Number-field constants use the NFElement grammar
//   elt  := term { " + " term | " - " term }
//   term := rational | rational "*" gen | gen "^" k
// with gen one of i, sqrt2, zeta8, theta (the generator of M), so golden
// files stay byte-stable.

#include <string>
#include <vector>

#include "qb/kummer.hpp"
#include "qb/residues.hpp"

namespace qb {

using Row = std::vector<std::string>;

// Resolve a field selector: accepts the catalog name ("Q(zeta8)") or the
// compact label ("Qzeta8", "Qi", "Qsqrt2", "Q", "M").
const NumberField& field_by_label(const std::string& label);
std::string field_label(const NumberField& f);

// The named Brauer elements plus the sum "A+D".
BrauerElement brauer_by_label(const std::string& label);

Row lines_header();
std::vector<Row> lines_rows();

Row divisor_header();
std::vector<Row> divisor_rows(const std::string& fn_name, const SurfFunc& fn);

Row table_header();
std::vector<Row> table_rows(int variant, const NumberField& field);

Row screen_header();
Row screen_row(const std::array<Rational, 4>& quad, const Verdict& v);

std::string tsv_join(const Row& r);

}  // namespace qb
