#include "confalg/cli/run.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

#include "confalg/errors.hpp"

namespace confalg::cli {

namespace {

Json failure_json(const Failure& f, const SuperSpace& space) {
  Json args = Json::array();
  for (std::size_t k : f.indices) args.push_back(k < space.dim() ? space.name(k) : std::to_string(k));
  Json j;
  j["identity"] = f.identity;
  j["args"] = std::move(args);
  if (!f.note.empty()) j["at"] = f.note;
  j["residual"] = f.residual_text.empty() ? f.residual.to_string(space) : f.residual_text;
  return j;
}

Json lines(const std::string& text) {
  Json out = Json::array();
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

Json bilinear_table(const GradedBilinearMap& map, const char* open, const char* sep, const char* close) {
  Json out = Json::object();
  const SuperSpace& space = map.space();
  for (std::size_t i = 0; i < map.dim(); ++i)
    for (std::size_t j = 0; j < map.dim(); ++j) {
      if (map(i, j).is_zero()) continue;
      out[std::string(open) + space.name(i) + sep + space.name(j) + close] = map(i, j).to_string(space);
    }
  return out;
}

Json lambda_table(const LambdaBracket& b) {
  Json out = Json::object();
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (b(i, j).is_zero()) continue;
      out["[" + b.space().name(i) + "_l " + b.space().name(j) + "]"] = b(i, j).to_string(b.space());
    }
  return out;
}

Json space_json(const SolutionSpace& s) {
  Json j;
  j["dimension"] = s.dimension();
  j["unknowns"] = s.layout.labels();
  Json basis = Json::array();
  for (std::size_t k = 0; k < s.dimension(); ++k) basis.push_back(lines(s.ansatz(k).to_string(s.layout.space())));
  j["basis"] = std::move(basis);
  if (s.dimension()) {
    auto names = s.parameter_names();
    j["parameters"] = names;
    j["general"] = lines(s.general().to_string(s.layout.space(), names));
  }
  return j;
}

const char* falling_text(unsigned i) {
  static const char* texts[] = {"", "m", "m(m-1)", "m(m-1)(m-2)"};
  return i < 4 ? texts[i] : nullptr;
}

/// phi(a_m, b_n) = sum_i m(m-1)...(m-i+1) alpha_i(a, b) [m+n-i+1=0], rendered per generator pair.
Json phi_formula(const CocycleAnsatz& alpha, const SuperSpace& space, const std::vector<std::string>& params) {
  Json out = Json::object();
  for (std::size_t a = 0; a < alpha.dim(); ++a)
    for (std::size_t b = 0; b < alpha.dim(); ++b) {
      std::string text;
      for (unsigned i = 0; i <= alpha.degree(); ++i) {
        const Scalar& c = alpha(i, a, b);
        if (c.is_zero()) continue;
        std::string coeff = c.to_string(params);
        if (c.needs_parentheses()) coeff = "(" + coeff + ")";
        std::string falling = falling_text(i) ? falling_text(i) : "m^(" + std::to_string(i) + ")";
        std::string term = falling.empty() ? coeff : (coeff == "1" ? falling : falling + "*" + coeff);
        long shift = 1 - static_cast<long>(i);
        std::string delta = "[m+n" + (shift == 0 ? std::string() : (shift > 0 ? "+" : "") + std::to_string(shift)) + "=0]";
        if (!text.empty()) text += " + ";
        text += term + "*" + delta;
      }
      if (!text.empty()) out["phi(" + space.name(a) + "_m, " + space.name(b) + "_n)"] = text;
    }
  return out;
}

Json single_failure(const std::string& identity, const std::string& message) {
  Json f;
  f["identity"] = identity;
  f["residual"] = message;
  return Json::array({f});
}

const GradedBilinearMap& need_circ(const AlgebraFile& file) {
  const GradedBilinearMap* c = file.circ();
  if (!c) throw std::invalid_argument("this command needs a circ op");
  return *c;
}

GradedBilinearMap bracket_or_zero(const AlgebraFile& file) {
  return file.bracket ? file.bracket->map : GradedBilinearMap(file.space);
}

void check_structure(Report& report, const AlgebraFile& file, const Options& opts) {
  CheckOptions co{opts.fail_fast};
  const std::string& w = opts.which;
  report.results["which"] = w;
  if (w == "t") {
    QuadraticData q = file.quadratic();
    report.results["star-mode"] = star_mode_name(q.mode);
    report.add_check("structure", check_structure_equations_t(q, co));
  } else if (w == "anl") {
    report.add_check("anl", check_anl(need_circ(file), bracket_or_zero(file), co));
  } else if (w == "symmetrized") {
    report.add_check("symmetrized", check_symmetrized_case(need_circ(file), bracket_or_zero(file), co));
  } else if (w == "star-zero") {
    report.add_check("star-zero", check_star_trivial_case(need_circ(file), bracket_or_zero(file), co));
  } else if (w == "circ-zero") {
    const GradedBilinearMap* s = file.op("star");
    if (!s) throw std::invalid_argument("--which circ-zero needs an op named star");
    report.add_check("circ-zero", check_circ_trivial_case(*s, bracket_or_zero(file), co));
  } else if (w == "gd") {
    report.add_check("gd", check_gd_bialgebra(need_circ(file), bracket_or_zero(file), co));
  } else if (w == "novikov") {
    report.add_check("novikov", check_novikov(need_circ(file), co));
  } else if (w == "assoc-novikov") {
    report.add_check("assoc-novikov", check_associative_novikov(need_circ(file), co));
  } else if (w == "averaging") {
    if (file.linear_maps.empty()) throw std::invalid_argument("--which averaging needs a linear-map block");
    const LinearMap& p = file.linear_maps.front().map;
    const GradedBilinearMap& product = need_circ(file);
    report.add_check("averaging", check_averaging(p, product, co));
    GradedBilinearMap induced = build_assoc_novikov_from_averaging(p, product);
    report.results["induced-circ"] = bilinear_table(induced, "", " o ", "");
    report.add_check("induced-assoc-novikov", check_associative_novikov(induced, co));
  } else {
    throw std::invalid_argument("unknown --which '" + w + "'");
  }
}

void verify_conformal(Report& report, const AlgebraFile& file, const Options& opts) {
  CheckOptions co{opts.fail_fast};
  LambdaBracket b = file.conformal();
  report.results["kind"] = opts.kind;
  report.results["bracket"] = lambda_table(b);
  if (opts.kind == "leibniz") report.add_check("leibniz", check_conformal_leibniz(b, co));
  else if (opts.kind == "lie") report.add_check("lie", check_lie_conformal(b, co));
  else if (opts.kind == "left-leibniz") report.add_check("left-leibniz", check_conformal_jacobi(b, co));
  else throw std::invalid_argument("unknown --kind '" + opts.kind + "'");
}

void classify(Report& report, const AlgebraFile& file) {
  BracketClassification c = classify_brackets(need_circ(file));
  report.results["unknowns"] = c.unknowns;
  Json basis = Json::array();
  for (const auto& row : c.linear_basis) {
    Json v = Json::object();
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != 0) v[c.unknowns[k]] = to_string(row[k]);
    }
    basis.push_back(std::move(v));
  }
  report.results["linear-basis"] = std::move(basis);
  report.results["parameters"] = c.family.space().params();
  report.results["family"] = bilinear_table(c.family, "[", ",", "]");
  Json residuals = Json::array();
  for (const auto& r : c.residual_constraints) residuals.push_back(r.to_string(c.family.space().params()) + " = 0");
  report.results["residual-constraints"] = std::move(residuals);
  report.results["residual-identically-zero"] = c.residual_identically_zero;
  report.results["residual-linear-solved"] = c.residual_linear_solved;
}

void central_ext(Report& report, const AlgebraFile& file, const Options& opts) {
  const GradedBilinearMap& circ = need_circ(file);
  GradedBilinearMap br = bracket_or_zero(file);
  GradedBilinearMap zero(file.space);
  const std::string& c = opts.case_name;
  CocycleSolution structured;
  QuadraticData q;
  AnsatzLayout layout = AnsatzLayout::up_to(file.space, 3);
  if (c == "anl") {
    structured = solve_central_ext_anl(circ, br);
    q = make_quadratic(circ, br, StarMode::Doubled);
  } else if (c == "assoc-novikov") {
    structured = solve_central_ext_assoc_novikov(circ);
    q = make_quadratic(circ, zero, StarMode::Doubled);
    layout = AnsatzLayout(file.space, {0, 1, 3});
  } else if (c == "gd") {
    structured = solve_leibniz_central_ext_gd(circ, br);
    q = make_quadratic(circ, br, StarMode::Symmetrized);
  } else if (c == "novikov-lie") {
    structured = solve_leibniz_central_ext_novikov(circ);
    q = make_quadratic(circ, zero, StarMode::Symmetrized);
  } else {
    throw std::invalid_argument("unknown --case '" + c + "'");
  }
  SolutionSpace direct = solve_central_ext_direct(build_quadratic_bracket(q), layout);
  report.results["case"] = c;
  report.results["space"] = space_json(structured.space);
  report.results["products-span"] = structured.products_span;
  report.results["direct-dimension"] = direct.dimension();
  for (const auto& w : structured.warnings) report.warnings.push_back(w);
  bool agree = structured.space.basis == direct.basis;
  Json why = Json::array();
  if (!agree) {
    Json f;
    f["identity"] = "two-route";
    f["direct"] = space_json(direct);
    why.push_back(std::move(f));
  }
  report.add_check("two-route-agreement", agree, std::move(why));
  if (opts.degree && *opts.degree > 3) {
    DegreeBoundReport d = degree_bound_experiment(q, *opts.degree);
    Json j;
    j["degree"] = d.degree;
    j["space"] = space_json(d.high);
    j["bound-on-products"] = d.bound_on_products;
    j["products-span"] = d.products_span;
    j["high-terms-vanish"] = d.high_terms_vanish;
    j["equals-degree-three"] = d.equals_degree_three;
    report.results["degree-bound"] = std::move(j);
    report.add_check("degree-bound-on-products", d.bound_on_products);
    if (d.products_span) report.add_check("degree-bound", d.high_terms_vanish && d.equals_degree_three);
  }
}

void coeff(Report& report, const AlgebraFile& file, const Options& opts) {
  auto [lo, hi] = opts.grid.value_or(std::pair<Mode, Mode>{-3, 3});
  CoeffAlgebra algebra(file.conformal());
  const SuperSpace& space = algebra.space();
  report.results["grid"] = std::to_string(lo) + ".." + std::to_string(hi);
  Json table = Json::object();
  for (std::size_t a = 0; a < space.dim(); ++a)
    for (std::size_t b = 0; b < space.dim(); ++b)
      for (Mode m = lo; m <= hi; ++m)
        for (Mode n = lo; n <= hi; ++n) {
          ModeExpr v = algebra.bracket(a, m, b, n);
          if (v.is_zero()) continue;
          table["[" + space.name(a) + "_" + std::to_string(m) + ", " + space.name(b) + "_" + std::to_string(n) + "]"] =
              v.to_string(space);
        }
  report.results["brackets"] = std::move(table);
  auto grid = cube_grid(lo, hi);
  CheckOptions co{opts.fail_fast};
  if (opts.verify) report.add_check("coeff-leibniz", check_coeff_leibniz(algebra, grid, co));
  if (opts.phi.empty()) return;
  if (opts.phi != "from-central-ext") throw std::invalid_argument("unknown --phi '" + opts.phi + "'");
  SolutionSpace cocycles = solve_central_ext_direct(algebra.source(), AnsatzLayout::up_to(space, 3));
  Json phis = Json::array();
  for (std::size_t k = 0; k < cocycles.dimension(); ++k) {
    CocycleAnsatz alpha = cocycles.ansatz(k);
    Json j;
    j["alpha"] = lines(alpha.to_string(space));
    j["phi"] = phi_formula(alpha, space, {});
    phis.push_back(std::move(j));
    report.add_check("phi-cocycle-" + std::to_string(k + 1), check_phi_cocycle(algebra, PhiCocycle(alpha), grid, co));
  }
  report.results["cocycles"] = std::move(phis);
  if (cocycles.dimension()) {
    auto names = cocycles.parameter_names();
    report.results["general-phi"] = phi_formula(cocycles.general(), space, names);
  }
}

std::string render(const Json& value, int indent);

void render_into(std::ostringstream& out, const Json& value, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << key << ":\n";
        render_into(out, v, indent + 2);
      } else {
        out << pad << key << ": " << render(v, 0) << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const auto& v : value) {
      if (v.is_structured() && !v.empty()) {
        out << pad << "-\n";
        render_into(out, v, indent + 2);
      } else {
        out << pad << "- " << render(v, 0) << "\n";
      }
    }
  } else {
    out << pad << render(value, 0) << "\n";
  }
}

std::string render(const Json& value, int indent) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_structured() && value.empty()) return value.is_array() ? "[]" : "{}";
  if (!value.is_structured()) return value.dump();
  std::ostringstream out;
  render_into(out, value, indent);
  return out.str();
}

}  // namespace

void Report::add_check(const std::string& name, const AxiomReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures()) failures.push_back(failure_json(f, report.space()));
  add_check(name, report.passed(), std::move(failures));
}

void Report::add_check(const std::string& name, bool passed, Json failures) {
  checks.push_back({name, passed, {}, std::move(failures)});
}

bool Report::passed(bool allow_known_deviations) const {
  return std::all_of(checks.begin(), checks.end(), [&](const CheckResult& c) {
    return c.passed || (allow_known_deviations && !c.known_deviation.empty());
  });
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["input"] = input;
  j["digest"] = digest;
  j["passed"] = passed();
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.known_deviation.empty()) cj["known-deviation"] = c.known_deviation;
    cj["failures"] = c.failures;
    cs.push_back(std::move(cj));
  }
  j["checks"] = std::move(cs);
  j["results"] = results;
  j["warnings"] = warnings;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command << "\n";
  if (!input.empty()) out << "input: " << input << "\n";
  if (!digest.empty()) out << "digest: " << digest << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.known_deviation.empty()) out << " (known deviation: " << c.known_deviation << ")";
    out << "\n";
    if (!c.failures.empty()) out << render(c.failures, 2);
  }
  if (!results.empty()) out << "results:\n" << render(results, 2);
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  out << (passed() ? "OK" : "FAILED") << "\n";
  return out.str();
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::pair<Mode, Mode> parse_grid(std::string_view text) {
  auto dots = text.find("..");
  if (dots == std::string_view::npos) throw std::invalid_argument("--grid expects lo..hi");
  try {
    std::size_t used = 0;
    std::string lo_text(text.substr(0, dots)), hi_text(text.substr(dots + 2));
    Mode lo = std::stoll(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument("");
    Mode hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("");
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("--grid expects lo..hi with integers lo <= hi");
  }
}

Report run(const AlgebraFile& file, const Options& opts) {
  Report report;
  report.command = opts.command;
  report.input = opts.file;
  report.digest = fnv1a_hex(print(file));
  if (!opts.at.empty()) report.results["at"] = opts.at;
  const std::string& c = opts.command;
  try {
    if (c == "verify-conformal") verify_conformal(report, file, opts);
    else if (c == "check-structure") check_structure(report, file, opts);
    else if (c == "classify-brackets") classify(report, file);
    else if (c == "central-ext") central_ext(report, file, opts);
    else if (c == "coeff") coeff(report, file, opts);
    else throw std::invalid_argument("unknown command '" + c + "'");
  } catch (const PreconditionError& e) {
    report.add_check("precondition", false, single_failure("precondition", e.what()));
  } catch (const ParityError& e) {
    report.add_check("precondition", false, single_failure("parity", e.what()));
  }
  return report;
}

int execute(const Options& opts, std::ostream& out, std::ostream& err) {
  Report report;
  try {
    if (opts.format != "text" && opts.format != "machine") throw std::invalid_argument("--format is text or machine");
    if (opts.command == "examples") {
      report = run_examples(opts);
    } else {
      if (opts.file.empty()) throw std::invalid_argument("missing algebra file");
      AlgebraFile file = parse_file(opts.file);
      if (!opts.at.empty()) file = instantiate(file, parse_assignments(opts.at));
      report = run(file, opts);
    }
  } catch (const ParseError& e) {
    err << opts.file << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (opts.format == "machine") out << report.to_json().dump(2) << "\n";
  else out << report.to_text();
  return report.passed(opts.allow_known_deviations) ? 0 : 1;
}

}  // namespace confalg::cli
