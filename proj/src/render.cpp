#include "qb/render.hpp"

#include <sstream>
#include <stdexcept>

namespace qb {

const NumberField& field_by_label(const std::string& label) {
  if (label == "Q") return field_Q();
  if (label == "Qi" || label == "Q(i)") return field_Qi();
  if (label == "Qsqrt2" || label == "Q(sqrt2)") return field_Qsqrt2();
  if (label == "Qzeta8" || label == "Q(zeta8)") return field_Qzeta8();
  if (label == "M") return field_M();
  throw std::invalid_argument("unknown field label: " + label);
}

std::string field_label(const NumberField& f) { return f.name; }

BrauerElement brauer_by_label(const std::string& label) {
  if (label == "A+D") return brel("A") + brel("D");
  return brel(label);
}

Row lines_header() { return {"id", "fiber", "field", "x", "y", "z", "w", "equations"}; }

std::vector<Row> lines_rows() {
  std::vector<Row> out;
  for (const Line& l : line_catalog()) {
    Row r{std::to_string(l.id), fiber_name(l.fiber), l.k->name};
    for (const Poly& p : l.param) r.push_back(p.str("s"));
    r.push_back(l.equations);
    out.push_back(std::move(r));
  }
  return out;
}

Row divisor_header() { return {"function", "line", "valuation"}; }

std::vector<Row> divisor_rows(const std::string& fn_name, const SurfFunc& fn) {
  std::vector<Row> out;
  for (const auto& [id, v] : vertical_divisor(fn))
    out.push_back({fn_name, std::to_string(id), std::to_string(v)});
  return out;
}

Row table_header() { return {"line", "residue"}; }

std::vector<Row> table_rows(int variant, const NumberField& field) {
  std::vector<Row> out;
  for (const TableRow& row : residue_table(variant, field))
    out.push_back({std::to_string(row.line_id), row.rc.str()});
  return out;
}

Row screen_header() { return {"a0", "a1", "a2", "a3", "in_W", "verdict", "citation"}; }

Row screen_row(const std::array<Rational, 4>& quad, const Verdict& v) {
  Row r;
  for (const Rational& q : quad) r.push_back(rat_str(q));
  r.push_back(v.in_W ? "true" : "false");
  r.push_back(v.st_holds ? "ST_holds_by_ccprop" : "inconclusive");
  r.push_back(v.citation);
  return r;
}

std::string tsv_join(const Row& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) os << '\t';
    for (char c : r[i]) os << (c == '\t' || c == '\n' ? ' ' : c);
  }
  return os.str();
}

}  // namespace qb
