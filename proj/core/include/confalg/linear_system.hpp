#pragma once

// Homogeneous linear systems over Q.

#include <cstddef>
#include <string>
#include <vector>

#include "confalg/rational.hpp"
#include "confalg/scalar.hpp"

namespace confalg {

using RationalRow = std::vector<Rational>;

/// Rows of a homogeneous system sum_j row[j] * x_j = 0.
struct LinearSystem {
  std::vector<std::string> unknowns;
  std::vector<RationalRow> rows;

  std::size_t columns() const { return unknowns.size(); }
  /// Adds the linear form `form` (degree <= 1 in the unknowns, which are the
  /// scalar parameters). Throws PreconditionError on a nonzero constant or a
  /// nonlinear term.
  void add_linear_form(const Scalar& form);
};

/// Reduced row echelon form, computed fraction-free on integer-scaled rows.
/// Zero rows are dropped; `pivots` receives the pivot column of each row.
std::vector<RationalRow> rref(const std::vector<RationalRow>& rows, std::size_t columns,
                              std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const std::vector<RationalRow>& rows, std::size_t columns);

/// A basis of the solution space in canonical form: the basis vectors are
/// the rows of an RREF matrix, so two systems with the same solution space
/// produce identical bases.
std::vector<RationalRow> nullspace(const std::vector<RationalRow>& rows, std::size_t columns);

}  // namespace confalg
