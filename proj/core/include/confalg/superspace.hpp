#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "confalg/scalar.hpp"

namespace confalg {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}

/// Koszul sign (-1)^{ab}: -1 exactly when both parities are odd.
inline int koszul_sign(Parity a, Parity b) { return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1; }

const char* parity_name(Parity p);

struct BasisVector {
  std::string name;
  Parity parity = Parity::Even;
  /// Central generators of extensions satisfy d c = 0.
  bool killed_by_d = false;

  bool operator==(const BasisVector&) const = default;
};

/// Ordered homogeneous basis plus the parameter names of its scalar ring.
class SuperSpace {
 public:
  SuperSpace() = default;
  /// Throws std::invalid_argument on an empty basis or duplicate names.
  explicit SuperSpace(std::vector<BasisVector> basis, std::vector<std::string> params = {});

  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const BasisVector& operator[](std::size_t i) const { return basis_[i]; }
  Parity parity(std::size_t i) const { return basis_[i].parity; }
  const std::string& name(std::size_t i) const { return basis_[i].name; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const std::vector<std::string>& params() const { return params_; }
  std::size_t arity() const { return params_.size(); }

  /// Same basis, new scalar ring.
  SuperSpace with_params(std::vector<std::string> params) const;
  /// Appends an even, d-killed generator (the center of a central extension).
  SuperSpace with_central(const std::string& name) const;

  bool operator==(const SuperSpace&) const = default;

 private:
  std::vector<BasisVector> basis_;
  std::vector<std::string> params_;
};

/// Coordinates of an element of V in the basis of a SuperSpace.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : coords_(dim) {}
  static Vec basis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const;

  Vec& operator+=(const Vec& other);
  Vec& operator-=(const Vec& other);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, const Vec& v);
  Vec operator-() const;
  bool operator==(const Vec& other) const = default;

  /// `a L + (b + 1) W` style rendering.
  std::string to_string(const SuperSpace& space) const;

 private:
  std::vector<Scalar> coords_;
};

/// Structure constants of a bilinear map V x V -> V. Entries violating the
/// grading are rejected at insertion, so every stored map is grading-consistent.
class GradedBilinearMap {
 public:
  GradedBilinearMap() = default;
  explicit GradedBilinearMap(SuperSpace space);

  const SuperSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  /// e_i * e_j.
  const Vec& operator()(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return (*this)(i, j)[k]; }

  /// Throws ParityError if a nonzero coordinate has the wrong parity.
  void set(std::size_t i, std::size_t j, const Vec& value);
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

  /// Bilinear extension to arbitrary elements.
  Vec apply(const Vec& x, const Vec& y) const;
  bool is_zero() const;

  /// (k | parity(k) = parity(i) + parity(j)): the admissible targets of e_i * e_j.
  std::vector<std::size_t> admissible_targets(std::size_t i, std::size_t j) const;

  GradedBilinearMap scaled(const Scalar& s) const;
  GradedBilinearMap operator+(const GradedBilinearMap& other) const;
  GradedBilinearMap operator-() const { return scaled(Scalar(-1)); }
  /// (x, y) -> (-1)^{|x||y|} y * x.
  GradedBilinearMap super_flipped() const;
  /// Moves every constant into the given scalar ring (see Scalar::remapped).
  GradedBilinearMap rehomed(const SuperSpace& space, std::span<const std::size_t> param_map) const;

  bool operator==(const GradedBilinearMap& other) const = default;

 private:
  SuperSpace space_;
  std::vector<Vec> table_;
};

/// Linear endomorphism of V; column j is the image of e_j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(SuperSpace space);
  static LinearMap identity(const SuperSpace& space);

  const SuperSpace& space() const { return space_; }
  const Vec& image(std::size_t j) const { return columns_[j]; }
  void set_image(std::size_t j, const Vec& v) { columns_[j] = v; }
  Vec apply(const Vec& x) const;
  /// Parity-preserving.
  bool is_even() const;

  bool operator==(const LinearMap& other) const = default;

 private:
  SuperSpace space_;
  std::vector<Vec> columns_;
};

}  // namespace confalg
