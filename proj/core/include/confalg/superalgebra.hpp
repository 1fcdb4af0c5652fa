#pragma once

// Classical (non-conformal) superalgebra axioms.
//
// Every identity checked here is multilinear in its arguments, and each
// basis vector is homogeneous, so an identity holds for all homogeneous
// elements iff it holds on all ordered basis pairs/triples: expand the
// arguments in the basis and collect terms by parity.

#include "confalg/report.hpp"
#include "confalg/superspace.hpp"

namespace confalg {

/// [a,b] = -(-1)^{ab}[b,a] on pairs and [a,[b,c]] = [[a,b],c] + (-1)^{ab}[b,[a,c]] on triples.
AxiomReport check_lie_superalgebra(const GradedBilinearMap& bracket, const CheckOptions& opts = {});

/// Right Leibniz identity [a,[b,c]] = [[a,b],c] - (-1)^{bc}[[a,c],b].
AxiomReport check_leibniz_superalgebra(const GradedBilinearMap& bracket, const CheckOptions& opts = {});

/// Left Leibniz identity [a,[b,c]] = [[a,b],c] + (-1)^{ab}[b,[a,c]].
AxiomReport check_left_leibniz_superalgebra(const GradedBilinearMap& bracket, const CheckOptions& opts = {});

/// [a,b]' = -(-1)^{ab}[b,a]. Right Leibniz brackets become left Leibniz and back.
GradedBilinearMap to_left_superalgebra(const GradedBilinearMap& bracket);

}  // namespace confalg
