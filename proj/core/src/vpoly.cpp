#include "confalg/vpoly.hpp"

#include <sstream>

namespace confalg {

VPoly VPoly::term(std::size_t k, const SymbolPoly& coefficient) {
  VPoly v;
  v.add(k, coefficient);
  return v;
}

VPoly VPoly::from_vec(const Vec& v) {
  VPoly r;
  for (std::size_t k = 0; k < v.dim(); ++k) r.add(k, SymbolPoly(v[k]));
  return r;
}

void VPoly::add(std::size_t k, const SymbolPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool VPoly::contains(Symbol s) const { return degree_in(s) > 0; }

unsigned VPoly::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& [k, p] : terms_) d = std::max(d, p.degree_in(s));
  return d;
}

SymbolPoly VPoly::coefficient(std::size_t k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? SymbolPoly() : it->second;
}

VPoly VPoly::operator-() const {
  VPoly r = *this;
  for (auto& [k, p] : r.terms_) p = -p;
  return r;
}

VPoly& VPoly::operator+=(const VPoly& other) {
  for (const auto& [k, p] : other.terms_) add(k, p);
  return *this;
}

VPoly& VPoly::operator-=(const VPoly& other) {
  for (const auto& [k, p] : other.terms_) add(k, -p);
  return *this;
}

VPoly operator*(const SymbolPoly& p, const VPoly& v) {
  VPoly r;
  if (p.is_zero()) return r;
  for (const auto& [k, q] : v.terms_) r.add(k, p * q);
  return r;
}

VPoly VPoly::substitute(Symbol s, const SymbolPoly& replacement) const {
  VPoly r;
  for (const auto& [k, p] : terms_) r.add(k, p.substitute(s, replacement));
  return r;
}

VPoly VPoly::reduced(const SuperSpace& space) const {
  VPoly r;
  for (const auto& [k, p] : terms_) r.add(k, k < space.dim() && space[k].killed_by_d ? p.without(Symbol::D) : p);
  return r;
}

std::string VPoly::to_string(const SuperSpace& space) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, p] : terms_) {
    std::string coeff = p.to_string(space.params());
    bool single = p.terms().size() == 1 && p.terms().begin()->second.terms().size() == 1;
    bool negative = single && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    if (!single) out << "(" << coeff << ") ";
    else if (coeff != "1") out << coeff << " ";
    out << (k < space.dim() ? space.name(k) : "e" + std::to_string(k));
  }
  return out.str();
}

}  // namespace confalg
