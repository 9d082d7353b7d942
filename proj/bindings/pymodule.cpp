// Python bindings: a thin, string-rendering view of the library for smoke
// tests and notebook exploration.  Exact objects stay in C++; python sees
// deterministic strings and small dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qb/kummer.hpp"
#include "qb/obstruction.hpp"
#include "qb/render.hpp"
#include "qb/residues.hpp"

namespace py = pybind11;
using namespace qb;

namespace {

py::dict step_dict(const DerivStep& s) {
  py::dict d;
  d["step"] = s.step;
  d["rule"] = s.rule;
  d["inputs"] = s.inputs;
  d["output"] = s.output;
  d["verified"] = s.verified;
  return d;
}

py::dict report_dict(const InvReport& r) {
  py::dict d;
  d["value"] = r.value.str();
  d["all_verified"] = r.all_verified();
  py::list log;
  for (const auto& s : r.log) log.append(step_dict(s));
  d["log"] = log;
  return d;
}

}  // namespace

PYBIND11_MODULE(_quartic_brauer, m) {
  m.doc() = "exact reproductions for the diagonal quartic surface x^4 - y^4 = z^4 - w^4";

  m.def("identity_names", &identity_names);
  m.def("verify_identity", &verify_identity, py::arg("name"));

  m.def("lines", [] {
    py::list out;
    Row h = lines_header();
    for (const Row& r : lines_rows()) {
      py::dict d;
      for (size_t i = 0; i < h.size(); ++i) d[py::str(h[i])] = r[i];
      out.append(d);
    }
    return out;
  });

  m.def(
      "vertical_divisor",
      [](const std::string& fn) {
        const SurfFunc& h = fn == "F" ? sf_F() : fn == "G" ? sf_G() : throw py::value_error(fn);
        std::map<int, long> d = vertical_divisor(h);
        return d;
      },
      py::arg("function"));

  m.def(
      "purity_scan",
      [](const std::string& element, const std::string& mode, const std::string& field) {
        Mode md = mode == "geometric" ? geometric() : arithmetic(field_by_label(field));
        return purity_scan(brauer_by_label(element), md);
      },
      py::arg("element"), py::arg("mode") = "geometric", py::arg("field") = "M");

  m.def(
      "residue_table",
      [](int variant, const std::string& field) {
        std::vector<std::pair<int, std::string>> out;
        for (const TableRow& r : qb::residue_table(variant, field_by_label(field)))
          out.emplace_back(r.line_id, r.rc.str());
        return out;
      },
      py::arg("variant"), py::arg("field") = "Qzeta8");

  m.def(
      "faddeev_solve",
      [](int variant, const std::string& field) {
        FaddeevReport r = qb::faddeev_solve(variant, field_by_label(field));
        py::dict d;
        d["variant"] = r.variant;
        d["a_forced"] = r.a_forced;
        d["b_forced"] = r.b_forced;
        d["a_class"] = r.a_class.str();
        d["b_class"] = r.b_class.str();
        d["consistent"] = r.consistent;
        d["obstruction_class"] = r.obstruction_class.str();
        d["descends"] = r.descends;
        d["log"] = r.log;
        return d;
      },
      py::arg("variant"), py::arg("field"));

  m.def(
      "condition_Z",
      [](long a0, long a1, long a2, long a3) {
        return condition_Z({Rational(a0), Rational(a1), Rational(a2), Rational(a3)});
      },
      py::arg("a0"), py::arg("a1"), py::arg("a2"), py::arg("a3"));

  m.def(
      "classify_pair",
      [](long a, long b) {
        switch (classify_pair(a, b)) {
          case PairForm::form_a: return "form_a";
          case PairForm::form_b: return "form_b";
          default: return "none";
        }
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "screen",
      [](long a0, long a1, long a2, long a3, bool all_odd) {
        std::array<Rational, 4> q{Rational(a0), Rational(a1), Rational(a2), Rational(a3)};
        Verdict v = screen_family(all_odd ? FamilySpec::all_odd(q) : FamilySpec::general(q));
        py::dict d;
        d["in_W"] = v.in_W;
        d["verdict"] = v.st_holds ? "ST_holds_by_ccprop" : "inconclusive";
        d["citation"] = v.citation;
        return d;
      },
      py::arg("a0"), py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("all_odd") = false);

  m.def("default_precision", &dy_default_prec);
  m.def("set_precision", &dy_set_default_prec, py::arg("n"));
  m.def("lemma_l", [] { return lemma_l().str(); });
  m.def(
      "hilbert_q2", [](long a, long b) { return hilbert_q2(Rational(a), Rational(b)).str(); },
      py::arg("a"), py::arg("b"));

  m.def("obstruction", [] {
    ObstructionReport r = obstruction_sum();
    py::dict d;
    d["inv_P"] = r.at_P.value.str();
    d["inv_Q"] = r.at_Q.value.str();
    d["sum"] = r.sum.str();
    d["at_P"] = report_dict(r.at_P);
    d["at_Q"] = report_dict(r.at_Q);
    d["note"] = r.note;
    return d;
  });
}
