#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "confalg/superspace.hpp"
#include "confalg/symbol_poly.hpp"

namespace confalg {

/// Finite sum of basis vectors with SymbolPoly coefficients: an element of
/// V[d, l, m, n]. The carrier of every conformal bracket expansion.
class VPoly {
 public:
  using Terms = std::map<std::size_t, SymbolPoly>;

  VPoly() = default;
  static VPoly basis(std::size_t k) { return term(k, SymbolPoly(Scalar(1))); }
  static VPoly term(std::size_t k, const SymbolPoly& coefficient);
  static VPoly from_vec(const Vec& v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool contains(Symbol s) const;
  unsigned degree_in(Symbol s) const;
  SymbolPoly coefficient(std::size_t k) const;

  VPoly operator-() const;
  VPoly& operator+=(const VPoly& other);
  VPoly& operator-=(const VPoly& other);
  friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
  friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
  /// Multiplication by a polynomial in the formal symbols.
  friend VPoly operator*(const SymbolPoly& p, const VPoly& v);
  bool operator==(const VPoly& other) const = default;

  VPoly substitute(Symbol s, const SymbolPoly& replacement) const;
  /// Drops d-multiples of d-killed generators (d c = 0).
  VPoly reduced(const SuperSpace& space) const;

  /// `(d + 2*l + a) L + b W` rendering.
  std::string to_string(const SuperSpace& space) const;

 private:
  void add(std::size_t k, const SymbolPoly& p);
  Terms terms_;
};

}  // namespace confalg
