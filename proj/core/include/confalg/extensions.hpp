#pragma once

// One-dimensional central extensions R + Cc, with c even, d c = 0 and c
// central. The extension is given by a form alpha_l(a, b) = sum_i l^i alpha_i(a, b)
// on generators, added to the bracket as alpha_l(a, b) c.
//
// Two independent routes produce the space of admissible alpha:
//  * direct: put unknown alpha_i(e_p, e_q) into the extended bracket as
//    scalar parameters, expand the conformal Leibniz identity and read off
//    the c-component coefficient of every l^i m^j as a linear equation;
//  * structured: instantiate the finite dimensional cocycle equations for
//    the relevant class of quadratic algebras on every basis triple.
// Both are solved exactly and compared as canonical RREF bases.
//
// No coboundary quotient is taken: the spaces reported are raw cocycle spaces.

#include <optional>
#include <string>
#include <vector>

#include "confalg/conformal.hpp"
#include "confalg/identity.hpp"
#include "confalg/linear_system.hpp"
#include "confalg/quadratic.hpp"

namespace confalg {

/// alpha_0 .. alpha_N as dim x dim matrices. Entries are Scalars so a whole
/// family (e.g. beta, gamma) can be carried symbolically.
class CocycleAnsatz {
 public:
  CocycleAnsatz() = default;
  CocycleAnsatz(std::size_t dim, unsigned degree);

  std::size_t dim() const { return dim_; }
  unsigned degree() const { return static_cast<unsigned>(alphas_.size()) - 1; }
  const Scalar& operator()(unsigned i, std::size_t p, std::size_t q) const { return alphas_[i][p * dim_ + q]; }
  void set(unsigned i, std::size_t p, std::size_t q, const Scalar& value) { alphas_[i][p * dim_ + q] = value; }
  bool is_zero() const;

  /// alpha_i(u, v) for coordinate vectors.
  Scalar apply(unsigned i, const Vec& u, const Vec& v) const;
  /// sum_i l^i alpha_i(e_p, e_q).
  SymbolPoly lambda_poly(std::size_t p, std::size_t q) const;

  /// Throws ParityError if some alpha_i pairs generators of different parity.
  void check_parity(const SuperSpace& space) const;

  /// `alpha1(L,W) = 1` lines for every nonzero entry.
  std::string to_string(const SuperSpace& space, std::span<const std::string> params = {}) const;

  bool operator==(const CocycleAnsatz&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Scalar>> alphas_;
};

/// Unknown alpha_i(e_p, e_q) for i in `degrees` and equal-parity (p, q), in
/// (i, p, q) lexicographic order.
class AnsatzLayout {
 public:
  struct Entry {
    unsigned degree;
    std::size_t left;
    std::size_t right;
  };

  AnsatzLayout() = default;
  AnsatzLayout(SuperSpace space, std::vector<unsigned> degrees);
  static AnsatzLayout up_to(SuperSpace space, unsigned degree);

  const SuperSpace& space() const { return space_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  unsigned max_degree() const;
  std::size_t size() const { return entries_.size(); }
  const Entry& operator[](std::size_t n) const { return entries_[n]; }
  std::optional<std::size_t> find(unsigned degree, std::size_t p, std::size_t q) const;
  /// `alpha1(L,W)`.
  std::string label(std::size_t n) const;
  std::vector<std::string> labels() const;

  /// Reads a coordinate vector as an ansatz.
  CocycleAnsatz ansatz(const RationalRow& coords) const;
  /// sum_k param_k * basis_k with parameters as the scalar ring.
  CocycleAnsatz family(const std::vector<RationalRow>& basis, std::size_t arity) const;

 private:
  SuperSpace space_;
  std::vector<unsigned> degrees_;
  std::vector<Entry> entries_;
};

struct SolutionSpace {
  AnsatzLayout layout;
  /// Canonical RREF basis in layout coordinates.
  std::vector<RationalRow> basis;

  std::size_t dimension() const { return basis.size(); }
  CocycleAnsatz ansatz(std::size_t k) const { return layout.ansatz(basis[k]); }
  /// Greek-letter names for small spaces, t1..tk otherwise.
  std::vector<std::string> parameter_names() const;
  /// The general element with parameter_names() as parameters.
  CocycleAnsatz general() const;
};

/// Outcome of a structured solve plus the V = V o V hypothesis test.
struct CocycleSolution {
  SolutionSpace space;
  /// Whether the o-products span V, the hypothesis under which degree 3 suffices.
  bool products_span = false;
  std::vector<std::string> warnings;
};

/// Extended bracket on the basis plus an even, d-killed central vector
/// (named `c`, or `c_`, `c__`, ... if taken). When `alpha_params` is given,
/// alpha's scalars live in their own ring, appended after the bracket's
/// parameters; otherwise alpha shares the bracket's ring.
/// Throws ParityError for an alpha pairing generators of different parity.
LambdaBracket extend_bracket(const LambdaBracket& bracket, const CocycleAnsatz& alpha,
                             const std::vector<std::string>& alpha_params = {});

/// alpha_l(a,[b_m c]) = alpha_{l+m}([a_l b], c) - (-1)^{bc} alpha_{-m}([a_l c], b) on all
/// generator triples, evaluated by direct expansion. Identity name: `cocycle`.
AxiomReport check_cocycle_direct(const LambdaBracket& bracket, const CocycleAnsatz& alpha,
                                 const CheckOptions& opts = {});

/// Linear system of the direct route. The bracket must be parameter-free.
LinearSystem direct_cocycle_system(const LambdaBracket& bracket, const AnsatzLayout& layout);
SolutionSpace solve_central_ext_direct(const LambdaBracket& bracket, const AnsatzLayout& layout);

// Structured equation tables. Slots 0, 1, 2 are a, b, c.
const std::vector<FormEquation>& anl_cocycle_equations();
const std::vector<FormEquation>& assoc_novikov_cocycle_equations();
const std::vector<FormEquation>& gd_cocycle_equations();
const std::vector<FormEquation>& novikov_cocycle_equations();

/// Instantiates form equations over all ordered basis triples.
LinearSystem structured_cocycle_system(const std::vector<FormEquation>& equations, const Operations& ops,
                                       const AnsatzLayout& layout);

/// Case * = 2o; requires check_anl. Unknowns alpha_0..alpha_3.
CocycleSolution solve_central_ext_anl(const GradedBilinearMap& circ, const GradedBilinearMap& bracket);
/// Bracket 0, * = 2o; requires an associative Novikov o. Unknowns alpha_0, alpha_1, alpha_3.
CocycleSolution solve_central_ext_assoc_novikov(const GradedBilinearMap& circ);
/// Symmetrized *: requires a super Gel'fand-Dorfman bialgebra. With a zero
/// bracket the Novikov-only system is used instead.
CocycleSolution solve_leibniz_central_ext_gd(const GradedBilinearMap& circ, const GradedBilinearMap& bracket);
/// Bracket 0, symmetrized *; requires a Novikov o.
CocycleSolution solve_leibniz_central_ext_novikov(const GradedBilinearMap& circ);

/// Whether the products e_i o e_j span V (rank test).
bool products_span(const GradedBilinearMap& circ);

struct DegreeBoundReport {
  unsigned degree = 0;
  SolutionSpace high;   // direct route at `degree`
  SolutionSpace three;  // direct route at degree 3
  /// alpha_i(u, c) = 0 for every i > 3, every o-product u and every generator c.
  bool bound_on_products = true;
  bool products_span = false;
  /// Every solution has alpha_i = 0 for i > 3.
  bool high_terms_vanish = true;
  /// The degree-N space is the degree-3 space padded with zeros.
  bool equals_degree_three = false;
};

/// Direct solver at degrees 0..N, N > 3, compared with degree 3.
DegreeBoundReport degree_bound_experiment(const QuadraticData& q, unsigned degree);

/// Structure data with every constant a rational; throws InstantiationRequired otherwise.
void require_parameter_free(const GradedBilinearMap& map, const char* what);

}  // namespace confalg
