#include <functional>
#include <sstream>

#include "confalg/cli/run.hpp"

namespace confalg::cli {

namespace {

/// Empty string when the report shows the documented outcome.
using Expectation = std::function<std::string(const AlgebraFile&, const Report&)>;

struct ExampleCase {
  std::string name;
  std::string file;
  std::function<void(Options&)> configure;
  Expectation expect;
  std::string known_deviation;
};

const CheckResult* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Expectation check_is(const std::string& name, bool passed) {
  return [=](const AlgebraFile&, const Report& r) -> std::string {
    const CheckResult* c = find_check(r, name);
    if (!c) return "check " + name + " missing";
    if (c->passed != passed) return "check " + name + (passed ? " failed" : " passed");
    return {};
  };
}

Expectation all_of(std::vector<Expectation> parts) {
  return [parts](const AlgebraFile& f, const Report& r) -> std::string {
    for (const auto& p : parts) {
      if (auto why = p(f, r); !why.empty()) return why;
    }
    return {};
  };
}

/// Some failure of `check` has identity `identity` on exactly `args`.
Expectation fails_at(const std::string& check, const std::string& identity, std::vector<std::string> args) {
  return [=](const AlgebraFile&, const Report& r) -> std::string {
    const CheckResult* c = find_check(r, check);
    if (!c) return "check " + check + " missing";
    for (const auto& f : c->failures) {
      if (f.value("identity", "") == identity && f.contains("args") && f["args"] == Json(args)) return {};
    }
    return "no " + identity + " failure at the expected arguments";
  };
}

Expectation result_is(const std::string& pointer, const Json& expected) {
  return [=](const AlgebraFile&, const Report& r) -> std::string {
    Json::json_pointer p(pointer);
    if (!r.results.contains(p)) return expected.is_null() ? std::string() : pointer + " missing";
    if (r.results[p] != expected) return pointer + " is " + r.results[p].dump() + ", expected " + expected.dump();
    return {};
  };
}

/// The listed lambda-bracket entries, written in DSL syntax, equal the built bracket's.
Expectation bracket_entries(const std::string& entries) {
  return [=](const AlgebraFile& file, const Report&) -> std::string {
    AlgebraFile shell;
    shell.space = file.space;
    std::string text = print(shell) + "lambda-bracket {\n" + entries + "}\n";
    LambdaBracket expected = *parse(text).lambda_bracket;
    LambdaBracket built = file.conformal();
    for (std::size_t i = 0; i < built.dim(); ++i)
      for (std::size_t j = 0; j < built.dim(); ++j) {
        if (expected(i, j).is_zero()) continue;
        if (!(expected(i, j) == built(i, j))) {
          return "[" + file.space.name(i) + "_l " + file.space.name(j) + "] is " + built(i, j).to_string(file.space);
        }
      }
    return {};
  };
}

/// [L_m, W_n] = (m-n) L_{m+n-1} + a L_{m+n} and [W_m, W_n] = (m-n) W_{m+n-1} + b L_{m+n}.
std::string rab_mode_table(const AlgebraFile& file, const Report&) {
  CoeffAlgebra algebra(file.conformal());
  const std::size_t L = 0, W = 1;
  const Scalar a = Scalar::variable(0, 2), b = Scalar::variable(1, 2);
  for (Mode m = -4; m <= 4; ++m)
    for (Mode n = -4; n <= 4; ++n) {
      ModeExpr lw = ModeExpr::mode(L, m + n - 1, Scalar(m - n)) + ModeExpr::mode(L, m + n, a);
      ModeExpr ww = ModeExpr::mode(W, m + n - 1, Scalar(m - n)) + ModeExpr::mode(L, m + n, b);
      if (!(algebra.bracket(L, m, W, n) == lw) || !(algebra.bracket(W, m, W, n) == ww) ||
          !algebra.bracket(L, m, L, n).is_zero() || !algebra.bracket(W, n, L, m).is_zero()) {
        return "mode bracket differs from the closed formula at m=" + std::to_string(m) + ", n=" + std::to_string(n);
      }
    }
  return {};
}

std::vector<ExampleCase> cases() {
  auto cmd = [](std::string command, std::function<void(Options&)> more = {}) {
    return [command, more](Options& o) {
      o.command = command;
      if (more) more(o);
    };
  };
  auto kind = [](std::string k) { return [k](Options& o) { o.kind = k; }; };
  auto which = [](std::string w) { return [w](Options& o) { o.which = w; }; };
  Json r00_basis = Json::array({Json::array({"alpha1(L,W) = 1", "alpha1(W,W) = 1"}),
                                Json::array({"alpha3(L,W) = 1", "alpha3(W,W) = 1"})});
  return {
      {"rab-leibniz", "rab.alg", cmd("verify-conformal", kind("leibniz")), check_is("leibniz", true), {}},
      {"rab-not-lie", "rab.alg", cmd("verify-conformal", kind("lie")),
       all_of({check_is("lie", false), fails_at("lie", "conformal-skew", {"W", "L"})}), {}},
      {"rab-structure", "rab.alg", cmd("check-structure", which("t")), check_is("structure", true), {}},
      {"rab-anl", "rab.alg", cmd("check-structure", which("anl")), check_is("anl", true), {}},
      {"r00-assoc-novikov", "r00.alg", cmd("check-structure", which("assoc-novikov")),
       check_is("assoc-novikov", true), {}},
      {"r00-classify", "r00.alg", cmd("classify-brackets"),
       all_of({result_is("/family", Json{{"[W,L]", "t1 L"}, {"[W,W]", "t2 L"}}),
               result_is("/residual-identically-zero", true)}),
       {}},
      {"r00-central-ext", "r00.alg", cmd("central-ext", [](Options& o) { o.case_name = "assoc-novikov"; }),
       all_of({check_is("two-route-agreement", true), result_is("/space/dimension", 2),
               result_is("/space/basis", r00_basis)}),
       "the raw cocycle space is 4-dimensional; alpha(L,W) and alpha(W,W) are independent"},
      {"rab-central-ext", "rab.alg", cmd("central-ext", [](Options& o) {
         o.case_name = "anl";
         o.at = "a=1,b=-2";
       }),
       check_is("two-route-agreement", true), {}},
      {"rab-degree-bound", "rab.alg", cmd("central-ext", [](Options& o) {
         o.case_name = "anl";
         o.degree = 5;
         o.at = "a=0,b=0";
       }),
       all_of({check_is("degree-bound", true), check_is("two-route-agreement", true)}), {}},
      {"rab-coeff", "rab.alg", cmd("coeff", [](Options& o) {
         o.grid = std::pair<Mode, Mode>{-3, 3};
         o.verify = true;
       }),
       all_of({check_is("coeff-leibniz", true), rab_mode_table}), {}},
      {"r00-phi", "r00.alg", cmd("coeff", [](Options& o) {
         o.grid = std::pair<Mode, Mode>{-4, 4};
         o.phi = "from-central-ext";
       }),
       [](const AlgebraFile&, const Report& r) -> std::string {
         for (const auto& c : r.checks) {
           if (!c.passed) return c.name + " failed";
         }
         return r.results.contains("cocycles") ? std::string() : "no cocycles";
       },
       {}},
      {"astar-circ-structure", "astar_circ.alg", cmd("check-structure", which("star-zero")),
       check_is("star-zero", true), {}},
      {"astar-circ-leibniz", "astar_circ.alg", cmd("verify-conformal", kind("leibniz")),
       all_of({check_is("leibniz", true), bracket_entries("a a -> d b;"), result_is("/bracket/[a_l b]", nullptr)}),
       {}},
      {"astar-circ-not-lie", "astar_circ.alg", cmd("verify-conformal", kind("lie")), check_is("lie", false), {}},
      {"astar-star-structure", "astar_star.alg", cmd("check-structure", which("circ-zero")),
       check_is("circ-zero", true), {}},
      {"astar-star-leibniz", "astar_star.alg", cmd("verify-conformal", kind("leibniz")),
       all_of({check_is("leibniz", true), bracket_entries("a a -> l b;"), result_is("/bracket/[a_l b]", nullptr)}),
       {}},
      {"f-lie", "f_lie.alg", cmd("verify-conformal", kind("lie")), check_is("lie", true), {}},
      {"gd-final-novikov", "gd_final.alg", cmd("check-structure", which("novikov")), check_is("novikov", true), {}},
      {"gd-final-lie", "gd_final.alg", cmd("verify-conformal", kind("lie")),
       all_of({check_is("lie", true), bracket_entries("L L -> (d + 2*l) L; L W -> (d + a*l) W;"),
               result_is("/bracket/[W_l W]", nullptr)}),
       {}},
      {"gd-final-central-ext", "gd_final.alg", cmd("central-ext", [](Options& o) {
         o.case_name = "gd";
         o.at = "a=2";
       }),
       check_is("two-route-agreement", true), {}},
      {"averaging", "averaging.alg", cmd("check-structure", which("averaging")),
       all_of({check_is("averaging", true), check_is("induced-assoc-novikov", true)}), {}},
      {"current-leibniz", "current.alg", cmd("verify-conformal", kind("leibniz")), check_is("leibniz", true), {}},
      {"current-not-lie", "current.alg", cmd("verify-conformal", kind("lie")), check_is("lie", false), {}},
      {"neveu-schwarz-lie", "neveu_schwarz.alg", cmd("verify-conformal", kind("lie")), check_is("lie", true), {}},
  };
}

}  // namespace

Report run_examples(const Options& opts) {
  Report report;
  report.command = "examples";
  report.input = opts.corpus_dir;
  std::string digests;
  for (const auto& ex : cases()) {
    Options o;
    o.file = opts.corpus_dir + "/" + ex.file;
    ex.configure(o);
    CheckResult check{"example:" + ex.name, false, {}, Json::array()};
    try {
      AlgebraFile file = parse_file(o.file);
      if (!o.at.empty()) file = instantiate(file, parse_assignments(o.at));
      Report r = run(file, o);
      digests += r.digest;
      std::string why = ex.expect(file, r);
      check.passed = why.empty();
      if (!why.empty()) {
        Json f;
        f["identity"] = "expected-outcome";
        f["residual"] = why;
        check.failures.push_back(std::move(f));
      }
    } catch (const std::exception& e) {
      Json f;
      f["identity"] = "error";
      f["residual"] = e.what();
      check.failures.push_back(std::move(f));
    }
    if (!check.passed) check.known_deviation = ex.known_deviation;
    report.checks.push_back(std::move(check));
  }
  report.digest = fnv1a_hex(digests);
  return report;
}

}  // namespace confalg::cli
