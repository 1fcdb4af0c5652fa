#include "confalg/superspace.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "confalg/errors.hpp"

namespace confalg {

const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

SuperSpace::SuperSpace(std::vector<BasisVector> basis, std::vector<std::string> params)
    : basis_(std::move(basis)), params_(std::move(params)) {
  if (basis_.empty()) throw std::invalid_argument("a super space needs at least one basis vector");
  std::set<std::string> seen;
  for (const auto& b : basis_) {
    if (!seen.insert(b.name).second) throw std::invalid_argument("duplicate basis name '" + b.name + "'");
  }
  std::set<std::string> seen_params;
  for (const auto& p : params_) {
    if (!seen_params.insert(p).second) throw std::invalid_argument("duplicate parameter '" + p + "'");
  }
}

std::optional<std::size_t> SuperSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name == name) return i;
  }
  return std::nullopt;
}

SuperSpace SuperSpace::with_params(std::vector<std::string> params) const {
  return SuperSpace(basis_, std::move(params));
}

SuperSpace SuperSpace::with_central(const std::string& name) const {
  auto basis = basis_;
  basis.push_back({name, Parity::Even, true});
  return SuperSpace(std::move(basis), params_);
}

Vec Vec::basis(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = Scalar(1);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Vec& Vec::operator+=(const Vec& other) {
  if (coords_.size() != other.coords_.size()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& other) {
  if (coords_.size() != other.coords_.size()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r = v;
  if (s.is_zero()) return Vec(v.dim());
  for (auto& c : r.coords_) {
    if (!c.is_zero()) c = s * c;
  }
  return r;
}

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::string Vec::to_string(const SuperSpace& space) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    const Scalar& c = coords_[k];
    if (c.is_zero()) continue;
    std::string coeff = c.to_string(space.params());
    bool negative = !c.needs_parentheses() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    if (c.needs_parentheses()) out << "(" << coeff << ") ";
    else if (coeff != "1") out << coeff << " ";
    out << space.name(k);
  }
  return first ? "0" : out.str();
}

GradedBilinearMap::GradedBilinearMap(SuperSpace space)
    : space_(std::move(space)), table_(space_.dim() * space_.dim(), Vec(space_.dim())) {}

void GradedBilinearMap::set(std::size_t i, std::size_t j, const Vec& value) {
  if (value.dim() != dim()) throw std::invalid_argument("structure constant vector has wrong dimension");
  Parity target = space_.parity(i) + space_.parity(j);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (!value[k].is_zero() && space_.parity(k) != target) {
      throw ParityError("product " + space_.name(i) + " * " + space_.name(j) + " must be " + parity_name(target) +
                        " but has a component on " + parity_name(space_.parity(k)) + " " + space_.name(k));
    }
  }
  table_[i * dim() + j] = value;
}

void GradedBilinearMap::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) {
  Vec v = (*this)(i, j);
  v[k] = value;
  set(i, j, v);
}

Vec GradedBilinearMap::apply(const Vec& x, const Vec& y) const {
  Vec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Vec& p = (*this)(i, j);
      if (p.is_zero()) continue;
      r += (x[i] * y[j]) * p;
    }
  }
  return r;
}

bool GradedBilinearMap::is_zero() const {
  for (const auto& v : table_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> GradedBilinearMap::admissible_targets(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out;
  Parity target = space_.parity(i) + space_.parity(j);
  for (std::size_t k = 0; k < dim(); ++k) {
    if (space_.parity(k) == target) out.push_back(k);
  }
  return out;
}

GradedBilinearMap GradedBilinearMap::scaled(const Scalar& s) const {
  GradedBilinearMap r(space_);
  for (std::size_t n = 0; n < table_.size(); ++n) r.table_[n] = s * table_[n];
  return r;
}

GradedBilinearMap GradedBilinearMap::operator+(const GradedBilinearMap& other) const {
  if (!(space_ == other.space_)) throw std::invalid_argument("bilinear maps live on different spaces");
  GradedBilinearMap r(space_);
  for (std::size_t n = 0; n < table_.size(); ++n) r.table_[n] = table_[n] + other.table_[n];
  return r;
}

GradedBilinearMap GradedBilinearMap::super_flipped() const {
  GradedBilinearMap r(space_);
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      r.table_[i * dim() + j] = Scalar(koszul_sign(space_.parity(i), space_.parity(j))) * (*this)(j, i);
    }
  }
  return r;
}

GradedBilinearMap GradedBilinearMap::rehomed(const SuperSpace& space, std::span<const std::size_t> param_map) const {
  if (space.basis() != space_.basis()) throw std::invalid_argument("rehoming requires the same basis");
  GradedBilinearMap r(space);
  for (std::size_t n = 0; n < table_.size(); ++n) {
    Vec v(dim());
    for (std::size_t k = 0; k < dim(); ++k) {
      const Scalar& c = table_[n][k];
      if (!c.is_zero()) v[k] = c.arity() == 0 ? c.extended(space.arity()) : c.remapped(param_map, space.arity());
    }
    r.table_[n] = std::move(v);
  }
  return r;
}

LinearMap::LinearMap(SuperSpace space) : space_(std::move(space)), columns_(space_.dim(), Vec(space_.dim())) {}

LinearMap LinearMap::identity(const SuperSpace& space) {
  LinearMap m(space);
  for (std::size_t j = 0; j < space.dim(); ++j) m.columns_[j] = Vec::basis(space.dim(), j);
  return m;
}

Vec LinearMap::apply(const Vec& x) const {
  Vec r(space_.dim());
  for (std::size_t j = 0; j < space_.dim(); ++j) {
    if (!x[j].is_zero()) r += x[j] * columns_[j];
  }
  return r;
}

bool LinearMap::is_even() const {
  for (std::size_t j = 0; j < space_.dim(); ++j) {
    for (std::size_t k = 0; k < space_.dim(); ++k) {
      if (!columns_[j][k].is_zero() && space_.parity(k) != space_.parity(j)) return false;
    }
  }
  return true;
}

}  // namespace confalg
