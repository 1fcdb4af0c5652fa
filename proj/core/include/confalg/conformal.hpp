#pragma once

// Lambda-brackets on free modules R = C[d]V and the conformal axioms.
//
// Nested brackets are evaluated the way they are computed by hand: expand
// the inner bracket, bracket the result against a generator with a fresh
// scratch variable `n` as the bracket parameter, expand completely using
// sesquilinearity, and only then substitute n -> l + m or n -> -m - d. After
// full expansion every d is the total derivation, so the substitution is a
// plain polynomial substitution.

#include <vector>

#include "confalg/report.hpp"
#include "confalg/superalgebra.hpp"
#include "confalg/vpoly.hpp"

namespace confalg {

/// [e_i _l e_j] for all generator pairs, each an element of V[d, l].
class LambdaBracket {
 public:
  LambdaBracket() = default;
  explicit LambdaBracket(SuperSpace space);

  const SuperSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const VPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim() + j]; }

  /// Throws std::invalid_argument if the value mentions m or n, and
  /// ParityError if a term lands in the wrong parity.
  void set(std::size_t i, std::size_t j, const VPoly& value);

  bool operator==(const LambdaBracket& other) const = default;

 private:
  SuperSpace space_;
  std::vector<VPoly> entries_;
};

/// [x _attach y] for x, y in V[d] (other symbols ride along as scalar
/// multipliers): [d^p e_i _v d^q e_j] = (-v)^p (d+v)^q B(i,j)|_{l->v}.
/// Throws VariableCaptureError if `attach` already occurs in x or y.
VPoly apply_bracket(const LambdaBracket& bracket, const VPoly& x, const VPoly& y, Symbol attach);

/// Literal polynomial substitution var -> replacement.
VPoly substitute(const VPoly& x, Symbol var, const SymbolPoly& replacement);

/// Self-test of the expansion machinery on generators; passes by construction.
AxiomReport check_conformal_sesquilinearity(const LambdaBracket& bracket, const CheckOptions& opts = {});

/// [a_l[b_m c]] = [[a_l b]_{l+m} c] - (-1)^{bc}[[a_l c]_{-m-d} b].
AxiomReport check_conformal_leibniz(const LambdaBracket& bracket, const CheckOptions& opts = {});

/// [a_l b] = -(-1)^{ab}[b_{-l-d} a].
AxiomReport check_conformal_skew(const LambdaBracket& bracket, const CheckOptions& opts = {});

/// [a_l[b_m c]] = [[a_l b]_{l+m} c] + (-1)^{ab}[b_m[a_l c]]; also the left
/// Leibniz conformal identity.
AxiomReport check_conformal_jacobi(const LambdaBracket& bracket, const CheckOptions& opts = {});

/// Skew-symmetry and Jacobi together.
AxiomReport check_lie_conformal(const LambdaBracket& bracket, const CheckOptions& opts = {});

/// [a_l b]' = -(-1)^{ab}[b_{-l-d} a].
LambdaBracket to_left_conformal(const LambdaBracket& bracket);

/// a_(n)b = n! * (coefficient of l^n in [a_l b]), trailing zeros trimmed.
std::vector<VPoly> jth_products(const LambdaBracket& bracket, std::size_t i, std::size_t j);

/// Copies the bracket into `target`, whose basis starts with the bracket's
/// basis; parameter i moves to position param_map[i].
LambdaBracket embed(const LambdaBracket& bracket, const SuperSpace& target, std::span<const std::size_t> param_map);

/// True when every coefficient is a rational constant.
bool is_parameter_free(const LambdaBracket& bracket);

/// Cur: [a_l b] = [a, b].
LambdaBracket build_current(const GradedBilinearMap& bracket);

}  // namespace confalg
