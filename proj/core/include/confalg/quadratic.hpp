#pragma once

// Quadratic Lie conformal superalgebras: brackets of the form
//   [x_l y] = d(y o x) + l(y * x) + [y, x]
// on a finite dimensional super space, and the finite dimensional structure
// equations that characterize when such a bracket is Leibniz.

#include <optional>
#include <string>
#include <vector>

#include "confalg/conformal.hpp"
#include "confalg/identity.hpp"
#include "confalg/linear_system.hpp"

namespace confalg {

enum class StarMode {
  Explicit,     // * supplied as its own table
  Doubled,      // * = 2 o
  Symmetrized,  // a * b = a o b + (-1)^{ab} b o a
  StarZero,     // * = 0
  CircZero,     // o = 0, * supplied
};

const char* star_mode_name(StarMode mode);

/// Derives * from o for the dependent modes. `explicit_star` is required for
/// Explicit and CircZero and ignored otherwise.
GradedBilinearMap derive_star(const GradedBilinearMap& circ, StarMode mode,
                              const std::optional<GradedBilinearMap>& explicit_star = std::nullopt);

struct QuadraticData {
  GradedBilinearMap circ;
  GradedBilinearMap star;
  GradedBilinearMap bracket;
  StarMode mode = StarMode::Explicit;

  const SuperSpace& space() const { return circ.space(); }
  Operations operations() const { return {&circ, &star, &bracket}; }
};

/// Assembles the data, deriving * from the mode. For CircZero, o is the zero map.
QuadraticData make_quadratic(const GradedBilinearMap& circ, const GradedBilinearMap& bracket, StarMode mode,
                             const std::optional<GradedBilinearMap>& explicit_star = std::nullopt);

/// [e_i _l e_j] = d(e_j o e_i) + l(e_j * e_i) + [e_j, e_i].
LambdaBracket build_quadratic_bracket(const QuadraticData& q);

// Equation tables. Slots 0, 1, 2 are x, y, z (equivalently a, b, c).
const std::vector<VecEquation>& structure_equations_t();
const std::vector<VecEquation>& anl_equations();
const std::vector<VecEquation>& novikov_equations();
const std::vector<VecEquation>& associative_novikov_equations();
const std::vector<VecEquation>& gd_compatibility_equations();
const std::vector<VecEquation>& symmetrized_equations();
const std::vector<VecEquation>& star_trivial_equations();
const std::vector<VecEquation>& circ_trivial_equations();
VecEquation left_leibniz_equation();

/// Evaluates equations on every ordered basis triple.
AxiomReport check_equations(const std::vector<VecEquation>& equations, const Operations& ops,
                            const SuperSpace& space, const CheckOptions& opts = {});

/// The full structure equations on (o, *, [,]) plus left Leibniz for [,].
/// Together they are equivalent to the Leibniz property of the quadratic bracket.
AxiomReport check_structure_equations_t(const QuadraticData& q, const CheckOptions& opts = {});

/// Case * = 2o.
AxiomReport check_anl(const GradedBilinearMap& circ, const GradedBilinearMap& bracket,
                      const CheckOptions& opts = {});
AxiomReport check_novikov(const GradedBilinearMap& circ, const CheckOptions& opts = {});
AxiomReport check_associative_novikov(const GradedBilinearMap& circ, const CheckOptions& opts = {});
/// Novikov o, Lie [,] and the compatibility condition.
AxiomReport check_gd_bialgebra(const GradedBilinearMap& circ, const GradedBilinearMap& bracket,
                               const CheckOptions& opts = {});
/// Case a * b = a o b + (-1)^{ab} b o a: Novikov o, left Leibniz [,] and the residual equations.
AxiomReport check_symmetrized_case(const GradedBilinearMap& circ, const GradedBilinearMap& bracket,
                                   const CheckOptions& opts = {});
/// Case * = 0.
AxiomReport check_star_trivial_case(const GradedBilinearMap& circ, const GradedBilinearMap& bracket,
                                    const CheckOptions& opts = {});
/// Case o = 0.
AxiomReport check_circ_trivial_case(const GradedBilinearMap& star, const GradedBilinearMap& bracket,
                                    const CheckOptions& opts = {});

/// [x, y] = a x.y - (-1)^{xy} b y.x.
GradedBilinearMap scalar_bracket(const GradedBilinearMap& product, const Scalar& a, const Scalar& b);

/// For [x,y] = a x o y - s b y o x with * = 0 the Leibniz property reduces
/// to (x o y) o z = x o (y o z) = 0. The returned report checks exactly that.
AxiomReport check_star_trivial_scalar(const GradedBilinearMap& circ, const CheckOptions& opts = {});
/// Same reduction with o = 0: (x * y) * z = x * (y * z) = 0.
AxiomReport check_circ_trivial_scalar(const GradedBilinearMap& star, const CheckOptions& opts = {});

/// Supercommutative associative product.
AxiomReport check_commutative_associative(const GradedBilinearMap& product, const CheckOptions& opts = {});

/// P(P(x) y) = P(x) P(y). Throws ParityError if P is not even and
/// PreconditionError if the product is not supercommutative associative.
AxiomReport check_averaging(const LinearMap& p, const GradedBilinearMap& product, const CheckOptions& opts = {});

/// x o y = P(x) y, associative Novikov whenever P is averaging.
GradedBilinearMap build_assoc_novikov_from_averaging(const LinearMap& p, const GradedBilinearMap& product);

/// All brackets [,] that make (o, [,]) satisfy the * = 2o equations.
struct BracketClassification {
  /// Names of the unknown structure constants, e.g. `[W,L]_L`.
  std::vector<std::string> unknowns;
  /// Basis of the solutions of the linear equations, in unknown coordinates.
  std::vector<RationalRow> linear_basis;
  /// The general solution: a bracket with one parameter t1..tr per basis vector.
  GradedBilinearMap family;
  /// Remaining left Leibniz constraints in t1..tr (quadratic); empty if none.
  std::vector<Scalar> residual_constraints;
  bool residual_identically_zero = false;
  /// The residual constraints were linear and have been folded into the basis.
  bool residual_linear_solved = false;
};

/// Unknown bracket constants enter the compatibility equations linearly and
/// the left Leibniz identity quadratically. Throws InstantiationRequired for a
/// parametric o and PreconditionError if o is not associative Novikov.
BracketClassification classify_brackets(const GradedBilinearMap& circ);

}  // namespace confalg
