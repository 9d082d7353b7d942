// quartic-brauer: command-line front end for the exact reproductions.
// Exit codes: 0 success / verdicts as expected, 1 usage error, 2 verdict
// mismatch against the recorded expectations.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "qb/geometry.hpp"
#include "qb/kummer.hpp"
#include "qb/obstruction.hpp"
#include "qb/render.hpp"
#include "qb/residues.hpp"

using nlohmann::json;
using namespace qb;

namespace {

void emit_rows(const std::string& format, const std::string& name, const Row& header,
               const std::vector<Row>& rows) {
  if (format == "json") {
    json arr = json::array();
    for (const Row& r : rows) {
      json o;
      for (size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
      arr.push_back(std::move(o));
    }
    std::cout << json{{"schema", 1}, {name, std::move(arr)}}.dump(2) << "\n";
  } else if (format == "tsv") {
    std::cout << tsv_join(header) << "\n";
    for (const Row& r : rows) std::cout << tsv_join(r) << "\n";
  } else {
    for (const Row& r : rows) {
      std::ostringstream os;
      for (size_t i = 0; i < header.size(); ++i)
        os << (i ? "  " : "") << header[i] << "=" << r[i];
      std::cout << os.str() << "\n";
    }
  }
}

std::array<Rational, 4> parse_quad(const std::string& s) {
  std::array<Rational, 4> q;
  std::string t = s;
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream is(t);
  for (auto& x : q) {
    long v;
    if (!(is >> v)) throw CLI::ValidationError("--coeffs", "expected four integers");
    x = Rational(v);
  }
  return q;
}

int do_purity(const std::string& format, const std::string& element, const std::string& mode,
              const std::string& field) {
  BrauerElement e = brauer_by_label(element);
  Mode m = mode == "geometric" ? geometric() : arithmetic(field_by_label(field));
  std::vector<int> bad = purity_scan(e, m);
  bool pass = bad.empty();
  if (format == "json") {
    std::cout << json{{"schema", 1},
                      {"element", element},
                      {"mode", mode},
                      {"field", m.field ? m.field->name : "-"},
                      {"nontrivial_lines", bad},
                      {"pass", pass}}
                     .dump(2)
              << "\n";
  } else {
    std::ostringstream os;
    os << (pass ? "PASS: " : "FAIL: ") << bad.size() << "/24 nontrivial residues";
    if (!pass) {
      os << " at lines";
      for (int id : bad) os << " " << id;
    }
    std::cout << os.str() << "\n";
  }
  // recorded expectations: the purity claims reproduced from the paper
  bool expect_known = false, expect_pass = false;
  if (mode == "geometric" && (element == "A" || element == "D" || element == "A+D"))
    expect_known = true, expect_pass = true;
  if (mode == "arithmetic" && field == "M" &&
      (element == "B" || element == "D" || element == "E1"))
    expect_known = true, expect_pass = true;
  if (mode == "geometric" && element == "Z") expect_known = true, expect_pass = false;
  return expect_known && pass != expect_pass ? 2 : 0;
}

int do_faddeev(const std::string& format, int variant, const std::string& field) {
  const NumberField& K = field_by_label(field);
  FaddeevReport r = faddeev_solve(variant, K);
  if (format == "json") {
    json chars = json::object();
    for (const auto& [f, c] : r.fiber_chars) chars[fiber_name(f)] = c.str();
    std::cout << json{{"schema", 1},
                      {"variant", r.variant},
                      {"field", K.name},
                      {"a_forced", r.a_forced},
                      {"b_forced", r.b_forced},
                      {"a_class", r.a_class.str()},
                      {"b_class", r.b_class.str()},
                      {"consistent", r.consistent},
                      {"fiber_chars", std::move(chars)},
                      {"obstruction_class", r.obstruction_class.str()},
                      {"descends", r.descends},
                      {"log", r.log}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "variant=" << r.variant << " field=" << K.name << "\n"
              << "a_class=" << r.a_class.str() << (r.a_forced ? " (forced)" : "") << "\n"
              << "b_class=" << r.b_class.str() << (r.b_forced ? " (forced)" : "") << "\n"
              << "consistent=" << (r.consistent ? "true" : "false") << "\n";
    for (const auto& [f, c] : r.fiber_chars)
      std::cout << "fiber " << fiber_name(f) << ": " << c.str() << "\n";
    std::cout << "obstruction_class=" << r.obstruction_class.str() << "\n"
              << "descends=" << (r.descends ? "true" : "false") << "\n";
    for (const auto& line : r.log) std::cout << "  " << line << "\n";
  }
  if (variant == 1 && field == "Qzeta8" && r.descends) return 2;
  if (variant == 1 && field == "M" && !r.descends) return 2;
  return 0;
}

json step_json(const DerivStep& s) {
  return json{{"step", s.step},
              {"rule", s.rule},
              {"inputs", s.inputs},
              {"output", s.output},
              {"verified", s.verified}};
}

void print_report(const char* name, const InvReport& r) {
  std::cout << name << ": inv=" << r.value.str()
            << " all_verified=" << (r.all_verified() ? "true" : "false") << "\n";
  for (const auto& s : r.log)
    std::cout << "  [" << s.rule << (s.verified ? " ok" : " FAIL") << "] " << s.step << "\n";
}

int do_obstruction(const std::string& format) {
  ObstructionReport r = obstruction_sum();
  if (format == "json") {
    json steps_p = json::array(), steps_q = json::array();
    for (const auto& s : r.at_P.log) steps_p.push_back(step_json(s));
    for (const auto& s : r.at_Q.log) steps_q.push_back(step_json(s));
    std::cout << json{{"schema", 1},
                      {"inv_P", r.at_P.value.str()},
                      {"inv_Q", r.at_Q.value.str()},
                      {"sum", r.sum.str()},
                      {"steps_P", std::move(steps_p)},
                      {"steps_Q", std::move(steps_q)},
                      {"note", r.note}}
                     .dump(2)
              << "\n";
  } else {
    print_report("P", r.at_P);
    print_report("Q", r.at_Q);
    std::cout << "sum=" << r.sum.str() << "\n" << r.note << "\n";
  }
  bool ok = r.sum == InvValue{1} && r.at_P.value == InvValue{1} && r.at_Q.value == InvValue{0} &&
            r.at_P.all_verified() && r.at_Q.all_verified();
  return ok ? 0 : 2;
}

int do_dyadic_demo(const std::string& format) {
  const DyadicField& F = dyQ2r2();
  DyadicElt l = lemma_l();
  DyadicElt sq2 = dy_from_global(nf_sqrt2(field_Qsqrt2()), F);
  DyadicElt z2m1 = dy_from_rational(F, Rational(2)) + dy_from_rational(F, Rational(2)) * sq2;
  std::vector<std::pair<std::string, std::string>> facts = {
      {"l", l.str()},
      {"l^2", (l * l).str()},
      {"l^4", (l.pow(4)).str()},
      {"class(z0^2-1)", dy_square_class(z2m1).str()},
      {"class(z0^2-l^2)",
       dy_square_class(dy_from_rational(F, Rational(3)) + dy_from_rational(F, Rational(2)) * sq2 -
                       l * l)
           .str()},
      {"class(l^2+1)", dy_square_class(l * l + dy_one(F)).str()},
      {"hilbert_q2(-1,-2)", hilbert_q2(Rational(-1), Rational(-2)).str()},
      {"hilbert_q2(-2,-7)", hilbert_q2(Rational(-2), Rational(-7)).str()},
      {"hilbert_bruteforce(sqrt2,-1-2sqrt2)",
       hilbert_bruteforce(sq2, dy_from_rational(F, Rational(-1)) +
                                   dy_from_rational(F, Rational(-2)) * sq2)
           .str()},
  };
  if (format == "json") {
    json o{{"schema", 1}, {"field", F.label}, {"precision", dy_default_prec()}};
    for (const auto& [k, v] : facts) o[k] = v;
    std::cout << o.dump(2) << "\n";
  } else {
    std::cout << "field=" << F.label << " precision=" << dy_default_prec() << "\n";
    for (const auto& [k, v] : facts) std::cout << k << " = " << v << "\n";
  }
  return 0;
}

int do_screen_stdin(const std::string& format, bool all_odd) {
  std::vector<Row> rows;
  std::string line;
  while (std::getline(std::cin, line)) {
    std::istringstream is(line);
    std::array<Rational, 4> q;
    long v;
    int got = 0;
    for (auto& x : q)
      if (is >> v) x = Rational(v), ++got;
    if (got == 0) continue;  // blank line
    if (got != 4) {
      std::cerr << "screen: expected four integers per line, got: " << line << "\n";
      return 1;
    }
    FamilySpec spec = all_odd ? FamilySpec::all_odd(q) : FamilySpec::general(q);
    rows.push_back(screen_row(q, screen_family(spec)));
  }
  emit_rows(format == "text" ? "tsv" : format, "screen", screen_header(), rows);
  return 0;
}

int do_selftest() {
  int failed = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failed;
  };
  // a_G_printed reproduces the display with denominator exponent 4, which is
  // off by a factor of 1 - z^2; it is expected to fail.
  for (const std::string& n : identity_names()) {
    bool expect = n != "a_G_printed";
    check("identity " + n + (expect ? "" : " (expected to fail)"),
          verify_identity(n) == expect);
  }
  check("purity A geometric", purity_scan(brel("A"), geometric()).empty());
  check("purity D geometric", purity_scan(brel("D"), geometric()).empty());
  check("purity A+D geometric", purity_scan(brel("A") + brel("D"), geometric()).empty());
  for (const char* n : {"B", "D", "E1"})
    check(std::string("purity ") + n + " arithmetic(M)",
          purity_scan(brel(n), arithmetic(field_M())).empty());
  for (int v = 1; v <= 3; ++v)
    check("residue table variant " + std::to_string(v) + " has 24 rows",
          residue_table(v, field_Qzeta8()).size() == 24);
  check("faddeev variant 1 over Q(zeta8) does not descend",
        !faddeev_solve(1, field_Qzeta8()).descends);
  check("faddeev variant 1 over M descends", faddeev_solve(1, field_M()).descends);
  {
    bool agree = true;
    for (auto [a, b] : {std::pair<long, long>{3, 9}, {9, 3}, {75, 9}, {3, 5}, {15, 7}, {21, 5}}) {
      bool bad = classify_pair(a, b) != PairForm::none;
      bool in_w = condition_Z({Rational(1), Rational(1), Rational(2 * a), Rational(2 * b)});
      agree = agree && bad == !in_w;
    }
    check("classify_pair agrees with condition_Z on probe pairs", agree);
  }
  {
    DyadicElt l = lemma_l();
    const DyadicField& F = dyQ2r2();
    DyadicElt d(&F, RatPoly{Rational(-31), Rational(-24)}, (int)l.prec() + 20, 0);
    check("l^4 = 1 - 8 sqrt2 (3+2 sqrt2)", dy_val_at_least(l.pow(4) - d, l.pow(4).prec()));
    DyadicElt tgt = dy_from_rational(F, Rational(33)) +
                    dy_from_rational(F, Rational(20)) * dy_from_global(nf_sqrt2(field_Qsqrt2()), F);
    check("l^2 = 33 + 20 sqrt2 mod pi^11", dy_val_at_least(l * l - tgt, 11));
  }
  {
    ObstructionReport r = obstruction_sum();
    check("obstruction sum = 1/2 with verified derivation",
          r.sum == InvValue{1} && r.at_P.all_verified() && r.at_Q.all_verified());
  }
  return failed ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact reproductions for the diagonal quartic surface x^4 - y^4 = z^4 - w^4"};
  app.require_subcommand(1);
  std::string format = "text";
  int precision = 0;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "tsv", "json"}))
      ->capture_default_str();
  app.add_option("--precision", precision, "dyadic working precision (pi-adic digits)");

  auto* c_lines = app.add_subcommand("lines", "the 24 vertical lines of the fibration");
  std::string fn = "both";
  auto* c_div = app.add_subcommand("divisors", "vertical divisors of F and G");
  c_div->add_option("--function", fn, "F, G or both")->check(CLI::IsMember({"F", "G", "both"}));

  std::string element = "A", mode = "geometric", field = "M";
  auto* c_pur = app.add_subcommand("purity", "scan the 24 lines for nontrivial residues");
  c_pur->add_option("--element", element, "A, D, E, Z, B, E1 or A+D")->required();
  c_pur->add_option("--mode", mode, "geometric or arithmetic")
      ->check(CLI::IsMember({"geometric", "arithmetic"}));
  c_pur->add_option("--field", field, "comparison field for arithmetic mode");

  int variant = 1;
  std::string tfield = "Qzeta8";
  auto* c_tab = app.add_subcommand("tables", "residue tables of the twisted elements x_j");
  c_tab->add_option("--variant", variant, "1, 2 or 3")->check(CLI::Range(1, 3));
  c_tab->add_option("--field", tfield, "comparison field");

  int fvariant = 1;
  std::string ffield = "Qzeta8";
  auto* c_fad = app.add_subcommand("faddeev", "solve the Faddeev descent constraints");
  c_fad->add_option("--variant", fvariant, "1, 2 or 3")->check(CLI::Range(1, 3));
  c_fad->add_option("--field", ffield, "base field");

  std::string coeffs, sd;
  bool use_stdin = false, all_odd = false;
  auto* c_scr = app.add_subcommand("screen", "algebraicity screeners for (a0:a1:a2:a3)");
  c_scr->add_option("--coeffs", coeffs, "a0,a1,a2,a3");
  c_scr->add_option("--sd", sd, "d,a,b for the quadruple (1,4,d a^2,d b^2)");
  c_scr->add_flag("--all-odd", all_odd, "treat the quadruple as all-odd");
  c_scr->add_flag("--stdin", use_stdin, "read whitespace-separated quadruples from stdin");

  auto* c_dyn = app.add_subcommand("dyadic-demo", "2-adic arithmetic showcase");
  auto* c_obs = app.add_subcommand("obstruction", "the 2-adic invariant computation at u");
  auto* c_self = app.add_subcommand("selftest", "run every paper-anchored acceptance check");

  // let the global --format / --precision appear after the subcommand too
  for (auto* sc : app.get_subcommands({})) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (precision > 0) dy_set_default_prec(precision);

  try {
    if (c_lines->parsed()) {
      emit_rows(format, "lines", lines_header(), lines_rows());
      return 0;
    }
    if (c_div->parsed()) {
      std::vector<Row> rows;
      if (fn != "G")
        for (Row& r : divisor_rows("F", sf_F())) rows.push_back(std::move(r));
      if (fn != "F")
        for (Row& r : divisor_rows("G", sf_G())) rows.push_back(std::move(r));
      emit_rows(format, "divisors", divisor_header(), rows);
      return 0;
    }
    if (c_pur->parsed()) return do_purity(format, element, mode, field);
    if (c_tab->parsed()) {
      emit_rows(format, "rows", table_header(), table_rows(variant, field_by_label(tfield)));
      return 0;
    }
    if (c_fad->parsed()) return do_faddeev(format, fvariant, ffield);
    if (c_scr->parsed()) {
      if (use_stdin) return do_screen_stdin(format, all_odd);
      FamilySpec spec = [&] {
        if (!sd.empty()) {
          auto q = parse_quad(sd + ",0");  // reuse the 4-int parser, ignore tail
          return FamilySpec::sd_family(q[0], q[1], q[2]);
        }
        if (coeffs.empty()) throw CLI::ValidationError("screen", "need --coeffs, --sd or --stdin");
        auto q = parse_quad(coeffs);
        return all_odd ? FamilySpec::all_odd(q) : FamilySpec::general(q);
      }();
      Verdict v = screen_family(spec);
      if (format == "text") {
        std::cout << "in_W=" << (v.in_W ? "true" : "false")
                  << "; verdict=" << (v.st_holds ? "ST_holds_by_ccprop" : "inconclusive") << "\n";
      } else {
        std::array<Rational, 4> q = spec.quad;
        emit_rows(format, "screen", screen_header(), {screen_row(q, v)});
      }
      return 0;
    }
    if (c_dyn->parsed()) return do_dyadic_demo(format);
    if (c_obs->parsed()) return do_obstruction(format);
    if (c_self->parsed()) return do_selftest();
  } catch (const std::exception& e) {
    std::cerr << "quartic-brauer: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
