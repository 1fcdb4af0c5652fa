#include "confalg/symbol_poly.hpp"

#include <sstream>

namespace confalg {

namespace {

unsigned degree_of(const SymbolExponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace

const char* symbol_name(Symbol s) {
  switch (s) {
    case Symbol::D: return "d";
    case Symbol::Lambda: return "l";
    case Symbol::Mu: return "m";
    case Symbol::Nu: return "n";
  }
  return "?";
}

bool SymbolOrder::operator()(const SymbolExponents& a, const SymbolExponents& b) const {
  unsigned da = degree_of(a);
  unsigned db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SymbolPoly::SymbolPoly(const Scalar& constant) {
  if (!constant.is_zero()) terms_.emplace(SymbolExponents{}, constant);
}

SymbolPoly SymbolPoly::symbol(Symbol s) {
  SymbolExponents e{};
  e[static_cast<std::size_t>(s)] = 1;
  return monomial(e, Scalar(1));
}

SymbolPoly SymbolPoly::monomial(const SymbolExponents& e, const Scalar& c) {
  SymbolPoly p;
  p.add_term(e, c);
  return p;
}

bool SymbolPoly::contains(Symbol s) const { return degree_in(s) > 0; }

unsigned SymbolPoly::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[static_cast<std::size_t>(s)]);
  return d;
}

Scalar SymbolPoly::coefficient(const SymbolExponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar() : it->second;
}

void SymbolPoly::add_term(const SymbolExponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymbolPoly SymbolPoly::operator-() const {
  SymbolPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
  SymbolPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      SymbolExponents e;
      for (std::size_t i = 0; i < kSymbolCount; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SymbolPoly SymbolPoly::pow(unsigned n) const {
  SymbolPoly r(Scalar(1));
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

SymbolPoly SymbolPoly::substitute(Symbol s, const SymbolPoly& replacement) const {
  const auto idx = static_cast<std::size_t>(s);
  std::map<unsigned, SymbolPoly> powers;
  SymbolPoly r;
  for (const auto& [e, c] : terms_) {
    unsigned k = e[idx];
    SymbolExponents rest = e;
    rest[idx] = 0;
    if (k == 0) {
      r.add_term(rest, c);
      continue;
    }
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, replacement.pow(k)).first;
    r += monomial(rest, c) * it->second;
  }
  return r;
}

SymbolPoly SymbolPoly::without(Symbol s) const {
  SymbolPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(s)] == 0) r.terms_.emplace(e, c);
  }
  return r;
}

std::string SymbolPoly::to_string(std::span<const std::string> params) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string coeff = c.to_string(params);
    bool constant_monomial = degree_of(e) == 0;
    bool negative = !c.needs_parentheses() && !coeff.empty() && coeff[0] == '-';
    if (negative) coeff = coeff.substr(1);
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    bool wrote = false;
    if (constant_monomial) {
      out << (c.needs_parentheses() ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (coeff != "1") {
      out << (c.needs_parentheses() ? "(" + coeff + ")" : coeff);
      wrote = true;
    }
    for (std::size_t i = 0; i < kSymbolCount; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << symbol_name(static_cast<Symbol>(i));
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace confalg
