#include "confalg/rational.hpp"

#include <stdexcept>

namespace confalg {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Integer numerator(n);
  Integer denominator{std::string(den)};
  if (denominator == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer falling_factorial(std::int64_t m, unsigned j) {
  Integer result = 1;
  for (unsigned k = 0; k < j; ++k) {
    result *= Integer(static_cast<long>(m - static_cast<std::int64_t>(k)));
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

Rational binomial(std::int64_t m, unsigned j) {
  Rational r(falling_factorial(m, j), factorial(j));
  r.canonicalize();
  return r;
}

}  // namespace confalg
