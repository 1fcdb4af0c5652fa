#include "confalg/scalar.hpp"

#include <numeric>
#include <sstream>

#include "confalg/errors.hpp"

namespace confalg {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = degree_of(a);
  unsigned db = degree_of(b);
  if (da != db) return da < db;
  // Larger leading exponent sorts later, so iteration in reverse gives the
  // conventional "a^2 before a*b before b^2" display order.
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Scalar::Scalar(const Rational& value) : Scalar(constant(value, 0)) {}

Scalar::Scalar(long value) : Scalar(constant(Rational(value), 0)) {}

Scalar Scalar::constant(const Rational& value, std::size_t arity) {
  Scalar s;
  s.arity_ = arity;
  if (value != 0) s.terms_.emplace(Exponents(arity, 0), value);
  return s;
}

Scalar Scalar::variable(std::size_t index, std::size_t arity) {
  if (index >= arity) throw ArityError("parameter index out of range");
  Scalar s;
  s.arity_ = arity;
  Exponents e(arity, 0);
  e[index] = 1;
  s.terms_.emplace(std::move(e), Rational(1));
  return s;
}

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

std::optional<Rational> Scalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

Rational Scalar::to_rational() const {
  auto value = as_rational();
  if (!value) throw InstantiationRequired("structure constant depends on parameters; instantiate them first");
  return *value;
}

unsigned Scalar::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

void Scalar::check_arity(const Scalar& other) {
  if (arity_ == other.arity_ || other.arity_ == 0) return;
  if (arity_ == 0) {
    *this = extended(other.arity_);
    return;
  }
  throw ArityError("scalar arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
}

void Scalar::add_term(const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_arity(other);
  if (other.arity_ == arity_) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : other.extended(arity_).terms_) add_term(e, c);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.arity_ != b.arity_ && a.arity_ != 0 && b.arity_ != 0) {
    throw ArityError("scalar arity mismatch: " + std::to_string(a.arity_) + " vs " + std::to_string(b.arity_));
  }
  std::size_t arity = std::max(a.arity_, b.arity_);
  Scalar r = Scalar::zero(arity);
  if (a.is_zero() || b.is_zero()) return r;
  const Scalar& lhs = a.arity_ == arity ? a : a.extended(arity);
  const Scalar rhs = b.arity_ == arity ? b : b.extended(arity);
  Exponents e(arity);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < arity; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Scalar Scalar::pow(unsigned n) const {
  Scalar r = constant(1, arity_);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

bool Scalar::operator==(const Scalar& other) const {
  if (terms_.empty() && other.terms_.empty()) return true;
  if (arity_ == other.arity_) return terms_ == other.terms_;
  if (arity_ == 0) return extended(other.arity_).terms_ == other.terms_;
  if (other.arity_ == 0) return terms_ == other.extended(arity_).terms_;
  return false;
}

Scalar Scalar::remapped(std::span<const std::size_t> index_map, std::size_t new_arity) const {
  if (index_map.size() != arity_) throw ArityError("remap table does not match scalar arity");
  Scalar r = zero(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_arity, 0);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (index_map[i] >= new_arity) throw ArityError("remap target out of range");
      ne[index_map[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

Scalar Scalar::extended(std::size_t new_arity) const {
  if (new_arity < arity_) throw ArityError("cannot shrink a scalar ring by extension");
  std::vector<std::size_t> map(arity_);
  std::iota(map.begin(), map.end(), 0);
  return remapped(map, new_arity);
}

Scalar Scalar::specialized(std::span<const std::optional<Rational>> values) const {
  if (values.size() != arity_ && arity_ != 0) throw ArityError("specialization table does not match scalar arity");
  std::size_t survivors = 0;
  for (const auto& v : values) survivors += v ? 0 : 1;
  Scalar r = zero(survivors);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents ne;
    ne.reserve(survivors);
    for (std::size_t i = 0; i < arity_; ++i) {
      if (values[i]) {
        for (std::uint32_t k = 0; k < e[i]; ++k) coeff *= *values[i];
      } else {
        ne.push_back(e[i]);
      }
    }
    if (arity_ == 0) ne.assign(survivors, 0);
    r.add_term(ne, coeff);
  }
  return r;
}

Rational Scalar::evaluate(std::span<const Rational> values) const {
  std::vector<std::optional<Rational>> opt(values.begin(), values.end());
  if (arity_ == 0) return as_rational().value_or(0);
  return specialized(opt).to_rational();
}

std::string Scalar::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool unit = degree_of(e) == 0;
    bool wrote = false;
    if (magnitude != 1 || unit) {
      out << confalg::to_string(magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << (i < names.size() ? names[i] : "p" + std::to_string(i));
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

bool Scalar::needs_parentheses() const { return terms_.size() > 1; }

}  // namespace confalg
