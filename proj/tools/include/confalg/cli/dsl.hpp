#pragma once

// Algebra definition files.
//
//   algebra rab
//   params a b
//   basis L even W even
//   op circ {
//     W L -> L;
//     W W -> W;
//   }
//   bracket br {
//     W L -> a L;
//   }
//   star = 2*circ
//   lambda-bracket {
//     L W -> (d + 2*l + a) L;
//   }
//   linear-map P {
//     L -> L;
//   }
//
// Coefficients are polynomials in the declared parameters with rational
// constants; `d` and `l` are only meaningful inside lambda-bracket blocks.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "confalg/conformal.hpp"
#include "confalg/quadratic.hpp"

namespace confalg::cli {

enum class StarDirective { None, Doubled, Symmetrized, Zero, Explicit };

struct NamedMap {
  std::string name;
  GradedBilinearMap map;
  bool operator==(const NamedMap&) const = default;
};

struct NamedLinearMap {
  std::string name;
  LinearMap map;
  bool operator==(const NamedLinearMap&) const = default;
};

struct AlgebraFile {
  std::string name;
  SuperSpace space;
  /// `op` blocks in file order.
  std::vector<NamedMap> ops;
  std::optional<NamedMap> bracket;
  StarDirective star = StarDirective::None;
  /// Op named by `star = 2*x` or `symmetrized(x)`.
  std::string star_source;
  std::optional<LambdaBracket> lambda_bracket;
  std::vector<NamedLinearMap> linear_maps;

  bool operator==(const AlgebraFile&) const = default;

  const GradedBilinearMap* op(std::string_view name) const;
  /// The o product: the star source, else the op named `circ`, else the first op.
  const GradedBilinearMap* circ() const;
  /// Quadratic data implied by the ops and the star directive.
  QuadraticData quadratic() const;
  /// The explicit lambda-bracket, or the quadratic bracket built from the ops.
  LambdaBracket conformal() const;
};

/// Throws ParseError with line and column on lexical, syntactic,
/// unresolved-identifier and parity errors.
AlgebraFile parse(std::string_view text);
AlgebraFile parse_file(const std::string& path);

/// Canonical form; parse(print(a)) == a.
std::string print(const AlgebraFile& file);

/// Substitutes the given parameters and drops them from the scalar ring.
/// Throws std::invalid_argument for an undeclared parameter.
AlgebraFile instantiate(const AlgebraFile& file, const std::map<std::string, Rational>& values);

/// `a=1,b=-1/2`.
std::map<std::string, Rational> parse_assignments(std::string_view text);

}  // namespace confalg::cli
