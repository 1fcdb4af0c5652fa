#include "confalg/coeff.hpp"

#include <sstream>
#include <stdexcept>

namespace confalg {

std::vector<ModeTriple> cube_grid(Mode lo, Mode hi) {
  std::vector<ModeTriple> grid;
  for (Mode m = lo; m <= hi; ++m)
    for (Mode n = lo; n <= hi; ++n)
      for (Mode p = lo; p <= hi; ++p) grid.push_back({m, n, p});
  return grid;
}

ModeExpr ModeExpr::mode(std::size_t k, Mode m, const Scalar& coefficient) {
  ModeExpr x;
  x.add({k, m}, coefficient);
  return x;
}

Scalar ModeExpr::coefficient(std::size_t k, Mode m) const {
  auto it = terms_.find({k, m});
  return it == terms_.end() ? Scalar() : it->second;
}

void ModeExpr::add(const Key& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ModeExpr ModeExpr::operator-() const {
  ModeExpr out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

ModeExpr& ModeExpr::operator+=(const ModeExpr& other) {
  for (const auto& [key, c] : other.terms_) add(key, c);
  return *this;
}

ModeExpr& ModeExpr::operator-=(const ModeExpr& other) {
  for (const auto& [key, c] : other.terms_) add(key, -c);
  return *this;
}

ModeExpr operator*(const Scalar& s, const ModeExpr& x) {
  ModeExpr out;
  if (s.is_zero()) return out;
  for (const auto& [key, c] : x.terms_) out.add(key, s * c);
  return out;
}

std::string ModeExpr::to_string(const SuperSpace& space) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string coeff = c.to_string(space.params());
    bool negative = !coeff.empty() && coeff[0] == '-' && !c.needs_parentheses();
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (coeff != "1") out << (c.needs_parentheses() ? "(" + coeff + ")" : coeff) << " ";
    out << space.name(key.first) << "_" << key.second;
  }
  return out.str();
}

CoeffAlgebra::CoeffAlgebra(LambdaBracket source) : source_(std::move(source)) {
  products_.resize(dim() * dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) products_[i * dim() + j] = jth_products(source_, i, j);
}

ModeExpr CoeffAlgebra::mode_of(std::size_t k, unsigned r, Mode p) const {
  if (space()[k].killed_by_d) return (r == 0 && p == -1) ? ModeExpr::mode(k, -1) : ModeExpr();
  Rational c(falling_factorial(p, r));
  if (r % 2) c = -c;
  return ModeExpr::mode(k, p - static_cast<Mode>(r), Scalar(c));
}

ModeExpr CoeffAlgebra::mode_of(const VPoly& x, Mode p) const {
  ModeExpr out;
  for (const auto& [k, poly] : x.terms()) {
    for (const auto& [e, c] : poly.terms()) {
      for (Symbol s : {Symbol::Lambda, Symbol::Mu, Symbol::Nu}) {
        if (e[static_cast<std::size_t>(s)] != 0) throw std::invalid_argument("mode of an element that is not in V[d]");
      }
      out += c * mode_of(k, e[static_cast<std::size_t>(Symbol::D)], p);
    }
  }
  return out;
}

ModeExpr CoeffAlgebra::bracket(std::size_t a, Mode m, std::size_t b, Mode n) const {
  ModeExpr out;
  if ((space()[a].killed_by_d && m != -1) || (space()[b].killed_by_d && n != -1)) return out;
  const auto& products = products_[a * dim() + b];
  for (unsigned j = 0; j < products.size(); ++j) {
    Rational c = binomial(m, j);
    if (c == 0) continue;
    out += Scalar(c) * mode_of(products[j], m + n - static_cast<Mode>(j));
  }
  return out;
}

ModeExpr CoeffAlgebra::bracket(const ModeExpr& x, const ModeExpr& y) const {
  ModeExpr out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) out += (cx * cy) * bracket(kx.first, kx.second, ky.first, ky.second);
  return out;
}

ModeExpr coeff_bracket(const CoeffAlgebra& algebra, std::size_t a, Mode m, std::size_t b, Mode n) {
  return algebra.bracket(a, m, b, n);
}

namespace {

std::string mode_note(const ModeTriple& t) {
  return "[m=" + std::to_string(t[0]) + ", n=" + std::to_string(t[1]) + ", p=" + std::to_string(t[2]) + "]";
}

std::vector<std::size_t> live_generators(const SuperSpace& space) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < space.dim(); ++k)
    if (!space[k].killed_by_d) out.push_back(k);
  return out;
}

}  // namespace

AxiomReport check_coeff_leibniz(const CoeffAlgebra& algebra, const std::vector<ModeTriple>& grid,
                                const CheckOptions& opts) {
  if (grid.empty()) throw std::invalid_argument("empty mode grid");
  AxiomReport report(algebra.space());
  report.mark_checked("coeff-leibniz");
  const auto gens = live_generators(algebra.space());
  for (std::size_t x : gens)
    for (std::size_t y : gens)
      for (std::size_t z : gens)
        for (const auto& t : grid) {
          ModeExpr xm = ModeExpr::mode(x, t[0]), yn = ModeExpr::mode(y, t[1]), zp = ModeExpr::mode(z, t[2]);
          ModeExpr lhs = algebra.bracket(xm, algebra.bracket(yn, zp));
          ModeExpr rhs = algebra.bracket(algebra.bracket(xm, yn), zp);
          ModeExpr swapped = algebra.bracket(algebra.bracket(xm, zp), yn);
          if (koszul_sign(algebra.space().parity(y), algebra.space().parity(z)) < 0) rhs += swapped;
          else rhs -= swapped;
          ModeExpr residual = lhs - rhs;
          if (residual.is_zero()) continue;
          Failure f{"coeff-leibniz", {x, y, z}, {}, mode_note(t)};
          f.residual_text = residual.to_string(algebra.space());
          report.add_failure(std::move(f));
          if (opts.fail_fast) return report;
        }
  return report;
}

PhiCocycle::PhiCocycle(const CocycleAnsatz& alpha, unsigned component) : alpha_(alpha.dim(), alpha.degree()) {
  for (std::size_t p = 0; p < alpha.dim(); ++p)
    for (std::size_t q = 0; q < alpha.dim(); ++q) alpha_.set(component, p, q, alpha(component, p, q));
}

PhiCocycle::PhiCocycle(const CocycleAnsatz& alpha) : alpha_(alpha) {}

Scalar PhiCocycle::operator()(std::size_t a, Mode m, std::size_t b, Mode n) const {
  if (a >= alpha_.dim() || b >= alpha_.dim()) return {};
  Mode i = m + n + 1;
  if (i < 0 || i > static_cast<Mode>(alpha_.degree())) return {};
  const auto component = static_cast<unsigned>(i);
  return Scalar(Rational(falling_factorial(m, component))) * alpha_(component, a, b);
}

Scalar PhiCocycle::operator()(const ModeExpr& x, const ModeExpr& y) const {
  Scalar out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      Scalar v = (*this)(kx.first, kx.second, ky.first, ky.second);
      if (!v.is_zero()) out += cx * cy * v;
    }
  return out;
}

std::vector<PhiCocycle> build_phi_cocycles(const CocycleAnsatz& alpha) {
  std::vector<PhiCocycle> out;
  for (unsigned i = 0; i <= alpha.degree(); ++i) out.emplace_back(alpha, i);
  return out;
}

AxiomReport check_phi_cocycle(const CoeffAlgebra& algebra, const PhiCocycle& phi, const std::vector<ModeTriple>& grid,
                              const CheckOptions& opts) {
  if (grid.empty()) throw std::invalid_argument("empty mode grid");
  AxiomReport report(algebra.space());
  report.mark_checked("phi-cocycle");
  const auto gens = live_generators(algebra.space());
  for (std::size_t x : gens)
    for (std::size_t y : gens)
      for (std::size_t z : gens)
        for (const auto& t : grid) {
          ModeExpr xm = ModeExpr::mode(x, t[0]), yn = ModeExpr::mode(y, t[1]), zp = ModeExpr::mode(z, t[2]);
          Scalar lhs = phi(xm, algebra.bracket(yn, zp));
          Scalar rhs = phi(algebra.bracket(xm, yn), zp);
          Scalar swapped = phi(algebra.bracket(xm, zp), yn);
          if (koszul_sign(algebra.space().parity(y), algebra.space().parity(z)) < 0) rhs += swapped;
          else rhs -= swapped;
          Scalar residual = lhs - rhs;
          if (residual.is_zero()) continue;
          Failure f{"phi-cocycle", {x, y, z}, {}, mode_note(t)};
          f.residual_text = residual.to_string(algebra.space().params());
          report.add_failure(std::move(f));
          if (opts.fail_fast) return report;
        }
  return report;
}

}  // namespace confalg
