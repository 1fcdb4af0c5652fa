#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "confalg/scalar.hpp"

namespace confalg {

/// Formal variables of conformal computations. `Nu` is the scratch variable
/// that carries a bracket parameter until it is substituted.
enum class Symbol : std::uint8_t { D = 0, Lambda = 1, Mu = 2, Nu = 3 };

inline constexpr std::size_t kSymbolCount = 4;

using SymbolExponents = std::array<std::uint16_t, kSymbolCount>;

struct SymbolOrder {
  bool operator()(const SymbolExponents& a, const SymbolExponents& b) const;
};

/// Commutative polynomial in d (the derivation), l, m, n with Scalar
/// coefficients. Inside a fully expanded expression `d` always means the
/// total (outer) derivation.
class SymbolPoly {
 public:
  using Terms = std::map<SymbolExponents, Scalar, SymbolOrder>;

  SymbolPoly() = default;
  SymbolPoly(const Scalar& constant);  // NOLINT

  static SymbolPoly symbol(Symbol s);
  static SymbolPoly monomial(const SymbolExponents& e, const Scalar& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool contains(Symbol s) const;
  unsigned degree_in(Symbol s) const;
  /// Coefficient of a monomial (zero when absent).
  Scalar coefficient(const SymbolExponents& e) const;

  SymbolPoly operator-() const;
  SymbolPoly& operator+=(const SymbolPoly& other);
  SymbolPoly& operator-=(const SymbolPoly& other);
  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
  SymbolPoly pow(unsigned n) const;
  bool operator==(const SymbolPoly& other) const = default;

  /// Literal substitution s -> replacement, then re-expansion.
  SymbolPoly substitute(Symbol s, const SymbolPoly& replacement) const;
  /// Drops every term containing `s` (used for d-killed central elements).
  SymbolPoly without(Symbol s) const;

  /// Renders with d, l, m, n for the four symbols.
  std::string to_string(std::span<const std::string> params) const;

 private:
  void add_term(const SymbolExponents& e, const Scalar& c);
  Terms terms_;
};

const char* symbol_name(Symbol s);

}  // namespace confalg
