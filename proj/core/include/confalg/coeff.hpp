#pragma once

// The coefficient superalgebra Coeff(R) of a free finite conformal
// superalgebra: basis a_m for generators a and all integers m, with
//   [a_m, b_n] = sum_j C(m, j) (a_(j) b)_{m+n-j}
// and (d a)_p = -p a_{p-1}. A d-killed generator c only survives as c_{-1}.
// Modes are never truncated; identities are checked exactly on a finite grid.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confalg/conformal.hpp"
#include "confalg/extensions.hpp"
#include "confalg/report.hpp"

namespace confalg {

using Mode = std::int64_t;
using ModeTriple = std::array<Mode, 3>;

/// All triples with entries in lo..hi.
std::vector<ModeTriple> cube_grid(Mode lo, Mode hi);

/// Finite sum of modes e_k[m] with Scalar coefficients.
class ModeExpr {
 public:
  using Key = std::pair<std::size_t, Mode>;
  using Terms = std::map<Key, Scalar>;

  ModeExpr() = default;
  static ModeExpr mode(std::size_t k, Mode m, const Scalar& coefficient = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(std::size_t k, Mode m) const;
  /// Coefficient of k_{-1}, the only surviving mode of a d-killed generator.
  Scalar central(std::size_t k) const { return coefficient(k, -1); }

  ModeExpr operator-() const;
  ModeExpr& operator+=(const ModeExpr& other);
  ModeExpr& operator-=(const ModeExpr& other);
  friend ModeExpr operator+(ModeExpr a, const ModeExpr& b) { return a += b; }
  friend ModeExpr operator-(ModeExpr a, const ModeExpr& b) { return a -= b; }
  friend ModeExpr operator*(const Scalar& s, const ModeExpr& x);
  bool operator==(const ModeExpr& other) const = default;

  /// `(2*a) L_3 - W_-1` rendering.
  std::string to_string(const SuperSpace& space) const;

 private:
  void add(const Key& key, const Scalar& c);
  Terms terms_;
};

class CoeffAlgebra {
 public:
  CoeffAlgebra() = default;
  explicit CoeffAlgebra(LambdaBracket source);

  const LambdaBracket& source() const { return source_; }
  const SuperSpace& space() const { return source_.space(); }
  std::size_t dim() const { return source_.dim(); }

  /// (d^r e_k)_p with the d-killed rule applied.
  ModeExpr mode_of(std::size_t k, unsigned r, Mode p) const;
  /// The element x_p for x in V[d] (no l or m allowed).
  ModeExpr mode_of(const VPoly& x, Mode p) const;

  /// [a_m, b_n] on generators.
  ModeExpr bracket(std::size_t a, Mode m, std::size_t b, Mode n) const;
  /// Bilinear extension.
  ModeExpr bracket(const ModeExpr& x, const ModeExpr& y) const;

 private:
  LambdaBracket source_;
  /// j-th products per generator pair.
  std::vector<std::vector<VPoly>> products_;
};

ModeExpr coeff_bracket(const CoeffAlgebra& algebra, std::size_t a, Mode m, std::size_t b, Mode n);

/// [x_m,[y_n,z_p]] = [[x_m,y_n],z_p] - (-1)^{yz}[[x_m,z_p],y_n] on every
/// triple of non-central generators and every grid point. Identity name:
/// `coeff-leibniz`. Throws std::invalid_argument for an empty grid.
AxiomReport check_coeff_leibniz(const CoeffAlgebra& algebra, const std::vector<ModeTriple>& grid,
                                const CheckOptions& opts = {});

/// phi(a_m, b_n) = sum over components i of m(m-1)...(m-i+1) alpha_i(a, b) delta_{m+n-i+1, 0}.
class PhiCocycle {
 public:
  PhiCocycle() = default;
  /// Component i of alpha alone.
  PhiCocycle(const CocycleAnsatz& alpha, unsigned component);
  /// All components of alpha.
  explicit PhiCocycle(const CocycleAnsatz& alpha);

  const CocycleAnsatz& alpha() const { return alpha_; }
  Scalar operator()(std::size_t a, Mode m, std::size_t b, Mode n) const;
  /// Bilinear extension; modes of indices >= alpha.dim() are ignored.
  Scalar operator()(const ModeExpr& x, const ModeExpr& y) const;

 private:
  CocycleAnsatz alpha_;
};

/// One PhiCocycle per component alpha_0 .. alpha_N.
std::vector<PhiCocycle> build_phi_cocycles(const CocycleAnsatz& alpha);

/// phi(x_m,[y_n,z_p]) = phi([x_m,y_n],z_p) - (-1)^{yz} phi([x_m,z_p],y_n).
/// Identity name: `phi-cocycle`.
AxiomReport check_phi_cocycle(const CoeffAlgebra& algebra, const PhiCocycle& phi, const std::vector<ModeTriple>& grid,
                              const CheckOptions& opts = {});

}  // namespace confalg
