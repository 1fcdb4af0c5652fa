#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confalg/rational.hpp"

namespace confalg {

/// Exponent vector of a parameter monomial, one entry per declared parameter.
using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// earlier parameters weighing more.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A polynomial with rational coefficients in commuting, never-inverted
/// parameters. Storage is canonical (no zero coefficients, fixed arity), so
/// structural equality is polynomial equality and `is_zero` decides whether
/// the polynomial vanishes for every parameter value.
///
/// Arity 0 marks a pure rational constant; it combines with scalars of any
/// arity. Two scalars with different non-zero arities raise ArityError.
class Scalar {
 public:
  using Terms = std::map<Exponents, Rational, GradedLex>;

  Scalar() = default;
  Scalar(const Rational& value);  // NOLINT: constants convert implicitly
  Scalar(long value);             // NOLINT

  static Scalar constant(const Rational& value, std::size_t arity);
  static Scalar variable(std::size_t index, std::size_t arity);
  static Scalar zero(std::size_t arity) { return constant(0, arity); }

  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value if the polynomial is constant, otherwise nullopt.
  std::optional<Rational> as_rational() const;
  /// Like as_rational, but throws InstantiationRequired for a genuine polynomial.
  Rational to_rational() const;
  unsigned total_degree() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar pow(unsigned n) const;

  bool operator==(const Scalar& other) const;

  /// Re-embeds into a ring with `new_arity` parameters; parameter i moves to
  /// position index_map[i].
  Scalar remapped(std::span<const std::size_t> index_map, std::size_t new_arity) const;
  /// Appends fresh parameters at the end.
  Scalar extended(std::size_t new_arity) const;
  /// Substitutes the parameters that have a value and drops them from the
  /// ring; the survivors keep their relative order.
  Scalar specialized(std::span<const std::optional<Rational>> values) const;
  Rational evaluate(std::span<const Rational> values) const;

  /// Human/DSL rendering, e.g. `2*a^2*b - 1/3`.
  std::string to_string(std::span<const std::string> names) const;
  /// True when the rendering needs parentheses before a basis symbol.
  bool needs_parentheses() const;

 private:
  void check_arity(const Scalar& other);
  void add_term(const Exponents& e, const Rational& c);

  std::size_t arity_ = 0;
  Terms terms_;
};

}  // namespace confalg
