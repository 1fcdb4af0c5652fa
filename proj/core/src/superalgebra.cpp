#include "confalg/superalgebra.hpp"

namespace confalg {

namespace {

using TripleResidual = Vec (*)(const GradedBilinearMap&, std::size_t, std::size_t, std::size_t);

Vec e(const GradedBilinearMap& m, std::size_t i) { return Vec::basis(m.dim(), i); }

Vec jacobi_residual(const GradedBilinearMap& m, std::size_t a, std::size_t b, std::size_t c) {
  const auto& s = m.space();
  Vec lhs = m.apply(e(m, a), m(b, c));
  Vec rhs = m.apply(m(a, b), e(m, c)) + Scalar(koszul_sign(s.parity(a), s.parity(b))) * m.apply(e(m, b), m(a, c));
  return lhs - rhs;
}

Vec right_leibniz_residual(const GradedBilinearMap& m, std::size_t a, std::size_t b, std::size_t c) {
  const auto& s = m.space();
  Vec lhs = m.apply(e(m, a), m(b, c));
  Vec rhs = m.apply(m(a, b), e(m, c)) - Scalar(koszul_sign(s.parity(b), s.parity(c))) * m.apply(m(a, c), e(m, b));
  return lhs - rhs;
}

bool check_triples(const GradedBilinearMap& m, const std::string& name, TripleResidual residual,
                   const CheckOptions& opts, AxiomReport& report) {
  report.mark_checked(name);
  const std::size_t d = m.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        Vec r = residual(m, a, b, c);
        if (!r.is_zero()) {
          report.add_failure({name, {a, b, c}, VPoly::from_vec(r), {}});
          if (opts.fail_fast) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

AxiomReport check_lie_superalgebra(const GradedBilinearMap& bracket, const CheckOptions& opts) {
  AxiomReport report(bracket.space());
  const auto& s = bracket.space();
  report.mark_checked("skew-symmetry");
  for (std::size_t a = 0; a < bracket.dim(); ++a) {
    for (std::size_t b = 0; b < bracket.dim(); ++b) {
      Vec r = bracket(a, b) + Scalar(koszul_sign(s.parity(a), s.parity(b))) * bracket(b, a);
      if (!r.is_zero()) {
        report.add_failure({"skew-symmetry", {a, b}, VPoly::from_vec(r), {}});
        if (opts.fail_fast) return report;
      }
    }
  }
  check_triples(bracket, "jacobi", jacobi_residual, opts, report);
  return report;
}

AxiomReport check_leibniz_superalgebra(const GradedBilinearMap& bracket, const CheckOptions& opts) {
  AxiomReport report(bracket.space());
  check_triples(bracket, "right-leibniz", right_leibniz_residual, opts, report);
  return report;
}

AxiomReport check_left_leibniz_superalgebra(const GradedBilinearMap& bracket, const CheckOptions& opts) {
  AxiomReport report(bracket.space());
  check_triples(bracket, "left-leibniz", jacobi_residual, opts, report);
  return report;
}

GradedBilinearMap to_left_superalgebra(const GradedBilinearMap& bracket) { return -bracket.super_flipped(); }

}  // namespace confalg
