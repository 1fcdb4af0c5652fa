#include "confalg/conformal.hpp"

#include <stdexcept>

#include "confalg/errors.hpp"

namespace confalg {

namespace {

SymbolPoly sym(Symbol s) { return SymbolPoly::symbol(s); }

/// Splits a coefficient polynomial by d-degree: term -> (d exponent, rest).
struct Piece {
  unsigned d_power;
  SymbolPoly rest;
};

std::vector<Piece> split_by_d(const SymbolPoly& p) {
  std::map<unsigned, SymbolPoly> by_power;
  for (const auto& [e, c] : p.terms()) {
    SymbolExponents rest = e;
    unsigned k = rest[static_cast<std::size_t>(Symbol::D)];
    rest[static_cast<std::size_t>(Symbol::D)] = 0;
    by_power[k] += SymbolPoly::monomial(rest, c);
  }
  std::vector<Piece> out;
  for (auto& [k, rest] : by_power) out.push_back({k, std::move(rest)});
  return out;
}

Scalar sign(const SuperSpace& s, std::size_t a, std::size_t b) { return Scalar(koszul_sign(s.parity(a), s.parity(b))); }

}  // namespace

LambdaBracket::LambdaBracket(SuperSpace space)
    : space_(std::move(space)), entries_(space_.dim() * space_.dim()) {}

void LambdaBracket::set(std::size_t i, std::size_t j, const VPoly& value) {
  if (i >= dim() || j >= dim()) throw std::out_of_range("lambda-bracket index out of range");
  if (value.contains(Symbol::Mu) || value.contains(Symbol::Nu)) {
    throw std::invalid_argument("generator brackets may only involve d and l");
  }
  Parity target = space_.parity(i) + space_.parity(j);
  for (const auto& [k, p] : value.terms()) {
    if (k >= dim()) throw std::out_of_range("lambda-bracket value names an unknown generator");
    if (space_.parity(k) != target) {
      throw ParityError("[" + space_.name(i) + "_l " + space_.name(j) + "] must be " + parity_name(target) +
                        " but has a term on " + space_.name(k));
    }
  }
  entries_[i * dim() + j] = value.reduced(space_);
}

VPoly apply_bracket(const LambdaBracket& bracket, const VPoly& x, const VPoly& y, Symbol attach) {
  if (x.contains(attach) || y.contains(attach)) {
    throw VariableCaptureError(std::string("bracket variable '") + symbol_name(attach) + "' already occurs in an argument");
  }
  if (attach == Symbol::D) throw std::invalid_argument("d cannot carry a bracket parameter");
  const SymbolPoly v = sym(attach);
  const SymbolPoly minus_v = -v;
  const SymbolPoly d_plus_v = sym(Symbol::D) + v;

  VPoly result;
  for (const auto& [i, px] : x.terms()) {
    auto xs = split_by_d(px);
    for (const auto& [j, py] : y.terms()) {
      const VPoly& entry = bracket(i, j);
      if (entry.is_zero()) continue;
      VPoly value = attach == Symbol::Lambda ? entry : entry.substitute(Symbol::Lambda, v);
      auto ys = split_by_d(py);
      for (const auto& a : xs) {
        for (const auto& b : ys) {
          SymbolPoly factor = a.rest * b.rest * minus_v.pow(a.d_power) * d_plus_v.pow(b.d_power);
          result += factor * value;
        }
      }
    }
  }
  return result.reduced(bracket.space());
}

VPoly substitute(const VPoly& x, Symbol var, const SymbolPoly& replacement) { return x.substitute(var, replacement); }

AxiomReport check_conformal_sesquilinearity(const LambdaBracket& bracket, const CheckOptions& opts) {
  AxiomReport report(bracket.space());
  report.mark_checked("sesquilinearity");
  const auto& space = bracket.space();
  const SymbolPoly d = sym(Symbol::D);
  const SymbolPoly l = sym(Symbol::Lambda);
  for (std::size_t i = 0; i < bracket.dim(); ++i) {
    for (std::size_t j = 0; j < bracket.dim(); ++j) {
      VPoly base = bracket(i, j);
      VPoly dx = space[i].killed_by_d ? VPoly() : d * VPoly::basis(i);
      VPoly dy = space[j].killed_by_d ? VPoly() : d * VPoly::basis(j);
      VPoly r1 = apply_bracket(bracket, dx, VPoly::basis(j), Symbol::Lambda);
      VPoly r2 = apply_bracket(bracket, VPoly::basis(i), dy, Symbol::Lambda);
      VPoly e1 = space[i].killed_by_d ? VPoly() : (-l) * base;
      VPoly e2 = space[j].killed_by_d ? VPoly() : ((d + l) * base).reduced(space);
      VPoly res1 = r1 - e1;
      VPoly res2 = r2 - e2;
      if (!res1.is_zero()) {
        report.add_failure({"sesquilinearity", {i, j}, res1, "[d a_l b] = -l[a_l b]"});
        if (opts.fail_fast) return report;
      }
      if (!res2.is_zero()) {
        report.add_failure({"sesquilinearity", {i, j}, res2, "[a_l d b] = (d+l)[a_l b]"});
        if (opts.fail_fast) return report;
      }
    }
  }
  return report;
}

namespace {

/// [[x_l y]_{sub} z] where sub is the polynomial replacing the scratch variable.
VPoly outer_bracket(const LambdaBracket& bracket, const VPoly& inner, std::size_t z, const SymbolPoly& sub) {
  VPoly expanded = apply_bracket(bracket, inner, VPoly::basis(z), Symbol::Nu);
  return expanded.substitute(Symbol::Nu, sub).reduced(bracket.space());
}

template <typename Residual>
void for_each_triple(const LambdaBracket& bracket, const std::string& name, const CheckOptions& opts,
                     AxiomReport& report, Residual residual) {
  report.mark_checked(name);
  const std::size_t d = bracket.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        VPoly r = residual(a, b, c);
        if (!r.is_zero()) {
          report.add_failure({name, {a, b, c}, r, {}});
          if (opts.fail_fast) return;
        }
      }
    }
  }
}

}  // namespace

AxiomReport check_conformal_leibniz(const LambdaBracket& bracket, const CheckOptions& opts) {
  AxiomReport report(bracket.space());
  const auto& space = bracket.space();
  const SymbolPoly l_plus_m = sym(Symbol::Lambda) + sym(Symbol::Mu);
  const SymbolPoly minus_m_minus_d = -sym(Symbol::Mu) - sym(Symbol::D);
  for_each_triple(bracket, "conformal-leibniz", opts, report, [&](std::size_t a, std::size_t b, std::size_t c) {
    VPoly b_mu_c = apply_bracket(bracket, VPoly::basis(b), VPoly::basis(c), Symbol::Mu);
    VPoly lhs = apply_bracket(bracket, VPoly::basis(a), b_mu_c, Symbol::Lambda);
    VPoly first = outer_bracket(bracket, apply_bracket(bracket, VPoly::basis(a), VPoly::basis(b), Symbol::Lambda), c,
                                l_plus_m);
    VPoly second = outer_bracket(bracket, apply_bracket(bracket, VPoly::basis(a), VPoly::basis(c), Symbol::Lambda), b,
                                 minus_m_minus_d);
    return (lhs - first + SymbolPoly(sign(space, b, c)) * second).reduced(space);
  });
  return report;
}

AxiomReport check_conformal_skew(const LambdaBracket& bracket, const CheckOptions& opts) {
  AxiomReport report(bracket.space());
  report.mark_checked("conformal-skew");
  const auto& space = bracket.space();
  const SymbolPoly minus_l_minus_d = -sym(Symbol::Lambda) - sym(Symbol::D);
  for (std::size_t a = 0; a < bracket.dim(); ++a) {
    for (std::size_t b = 0; b < bracket.dim(); ++b) {
      VPoly swapped = apply_bracket(bracket, VPoly::basis(b), VPoly::basis(a), Symbol::Nu)
                          .substitute(Symbol::Nu, minus_l_minus_d)
                          .reduced(space);
      VPoly r = bracket(a, b) + SymbolPoly(sign(space, a, b)) * swapped;
      if (!r.is_zero()) {
        report.add_failure({"conformal-skew", {a, b}, r, {}});
        if (opts.fail_fast) return report;
      }
    }
  }
  return report;
}

AxiomReport check_conformal_jacobi(const LambdaBracket& bracket, const CheckOptions& opts) {
  AxiomReport report(bracket.space());
  const auto& space = bracket.space();
  const SymbolPoly l_plus_m = sym(Symbol::Lambda) + sym(Symbol::Mu);
  for_each_triple(bracket, "conformal-jacobi", opts, report, [&](std::size_t a, std::size_t b, std::size_t c) {
    VPoly b_mu_c = apply_bracket(bracket, VPoly::basis(b), VPoly::basis(c), Symbol::Mu);
    VPoly lhs = apply_bracket(bracket, VPoly::basis(a), b_mu_c, Symbol::Lambda);
    VPoly first = outer_bracket(bracket, apply_bracket(bracket, VPoly::basis(a), VPoly::basis(b), Symbol::Lambda), c,
                                l_plus_m);
    VPoly a_l_c = apply_bracket(bracket, VPoly::basis(a), VPoly::basis(c), Symbol::Lambda);
    VPoly second = apply_bracket(bracket, VPoly::basis(b), a_l_c, Symbol::Mu);
    return (lhs - first - SymbolPoly(sign(space, a, b)) * second).reduced(space);
  });
  return report;
}

AxiomReport check_lie_conformal(const LambdaBracket& bracket, const CheckOptions& opts) {
  AxiomReport report = check_conformal_skew(bracket, opts);
  if (opts.fail_fast && !report.passed()) return report;
  report.merge(check_conformal_jacobi(bracket, opts));
  return report;
}

LambdaBracket to_left_conformal(const LambdaBracket& bracket) {
  LambdaBracket out(bracket.space());
  const auto& space = bracket.space();
  const SymbolPoly minus_l_minus_d = -sym(Symbol::Lambda) - sym(Symbol::D);
  for (std::size_t a = 0; a < bracket.dim(); ++a) {
    for (std::size_t b = 0; b < bracket.dim(); ++b) {
      VPoly swapped = apply_bracket(bracket, VPoly::basis(b), VPoly::basis(a), Symbol::Nu)
                          .substitute(Symbol::Nu, minus_l_minus_d);
      out.set(a, b, SymbolPoly(-sign(space, a, b)) * swapped);
    }
  }
  return out;
}

std::vector<VPoly> jth_products(const LambdaBracket& bracket, std::size_t i, std::size_t j) {
  const VPoly& entry = bracket(i, j);
  unsigned top = entry.degree_in(Symbol::Lambda);
  std::vector<VPoly> out;
  if (entry.is_zero()) return out;
  for (unsigned n = 0; n <= top; ++n) {
    VPoly product;
    for (const auto& [k, p] : entry.terms()) {
      SymbolPoly coeff;
      for (const auto& [e, c] : p.terms()) {
        if (e[static_cast<std::size_t>(Symbol::Lambda)] != n) continue;
        SymbolExponents rest = e;
        rest[static_cast<std::size_t>(Symbol::Lambda)] = 0;
        coeff += SymbolPoly::monomial(rest, Scalar(Rational(factorial(n))) * c);
      }
      product += VPoly::term(k, coeff);
    }
    out.push_back(std::move(product));
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

LambdaBracket embed(const LambdaBracket& bracket, const SuperSpace& target, std::span<const std::size_t> param_map) {
  if (target.dim() < bracket.dim()) throw std::invalid_argument("embedding target is too small");
  for (std::size_t i = 0; i < bracket.dim(); ++i) {
    if (!(target[i] == bracket.space()[i])) throw std::invalid_argument("embedding target has a different basis");
  }
  auto move = [&](const Scalar& c) {
    return c.arity() == 0 ? c.extended(target.arity()) : c.remapped(param_map, target.arity());
  };
  LambdaBracket out(target);
  for (std::size_t i = 0; i < bracket.dim(); ++i) {
    for (std::size_t j = 0; j < bracket.dim(); ++j) {
      VPoly value;
      for (const auto& [k, p] : bracket(i, j).terms()) {
        SymbolPoly q;
        for (const auto& [e, c] : p.terms()) q += SymbolPoly::monomial(e, move(c));
        value += VPoly::term(k, q);
      }
      out.set(i, j, value);
    }
  }
  return out;
}

bool is_parameter_free(const LambdaBracket& bracket) {
  for (std::size_t i = 0; i < bracket.dim(); ++i) {
    for (std::size_t j = 0; j < bracket.dim(); ++j) {
      for (const auto& [k, p] : bracket(i, j).terms()) {
        for (const auto& [e, c] : p.terms()) {
          if (!c.is_constant()) return false;
        }
      }
    }
  }
  return true;
}

LambdaBracket build_current(const GradedBilinearMap& bracket) {
  LambdaBracket out(bracket.space());
  for (std::size_t i = 0; i < bracket.dim(); ++i) {
    for (std::size_t j = 0; j < bracket.dim(); ++j) out.set(i, j, VPoly::from_vec(bracket(i, j)));
  }
  return out;
}

}  // namespace confalg
