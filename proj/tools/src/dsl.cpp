#include "confalg/cli/dsl.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "confalg/errors.hpp"

namespace confalg::cli {

namespace {

enum class Tok { Ident, Number, Punct, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const std::set<std::string, std::less<>> kKeywords = {
    "algebra", "params", "basis", "op", "bracket", "lambda-bracket", "linear-map", "even", "odd",
};
const std::set<std::string, std::less<>> kReserved = {"d", "l", "m", "n"};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::Punct, {}, line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      for (std::string_view suffix : {"-bracket", "-map"}) {
        std::string joined = word + std::string(suffix);
        if ((joined == "lambda-bracket" || joined == "linear-map") && text.substr(j, suffix.size()) == suffix) {
          word = joined;
          j += suffix.size();
        }
      }
      t.kind = Tok::Ident;
      t.text = word;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Tok::Arrow;
      t.text = "->";
      advance(2);
    } else if (std::string_view("{};+-*/^()=,").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, {}, line, col});
  return out;
}

/// Value of a right-hand side expression: a scalar part plus a basis part.
struct Linear {
  SymbolPoly scalar;
  std::map<std::size_t, SymbolPoly> vec;

  bool has_vec() const { return !vec.empty(); }
  void add(const Linear& o, bool negate) {
    scalar += negate ? -o.scalar : o.scalar;
    for (const auto& [k, p] : o.vec) {
      auto& slot = vec[k];
      slot += negate ? -p : p;
      if (slot.is_zero()) vec.erase(k);
    }
  }
  Linear scaled(const SymbolPoly& s) const {
    Linear r;
    r.scalar = s * scalar;
    for (const auto& [k, p] : vec) {
      SymbolPoly v = s * p;
      if (!v.is_zero()) r.vec.emplace(k, std::move(v));
    }
    return r;
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  AlgebraFile run() {
    AlgebraFile file;
    std::vector<std::string> params;
    std::vector<BasisVector> basis;
    bool have_name = false, have_params = false, have_basis = false;
    auto require_space = [&](const Token& at) {
      if (!have_basis) throw ParseError("basis must be declared before this block", at.line, at.column);
    };
    while (peek().kind != Tok::End) {
      const Token& t = peek();
      if (t.kind != Tok::Ident) throw error("expected a statement", t);
      if (t.text == "algebra") {
        next();
        if (have_name) throw error("duplicate algebra statement", t);
        file.name = expect_name("algebra name").text;
        have_name = true;
      } else if (t.text == "params") {
        next();
        if (have_params || have_basis) throw error("params must come once, before basis", t);
        while (peek().kind == Tok::Ident && !is_statement_start()) {
          const Token& p = next();
          check_new_name(p, params, basis);
          params.push_back(p.text);
        }
        have_params = true;
      } else if (t.text == "basis") {
        next();
        if (have_basis) throw error("duplicate basis statement", t);
        while (peek().kind == Tok::Ident && !is_statement_start()) {
          const Token& b = next();
          check_new_name(b, params, basis);
          const Token& parity = next();
          if (parity.kind != Tok::Ident || (parity.text != "even" && parity.text != "odd")) {
            throw error("expected 'even' or 'odd' after basis vector " + b.text, parity);
          }
          basis.push_back({b.text, parity.text == "odd" ? Parity::Odd : Parity::Even, false});
        }
        if (basis.empty()) throw error("basis needs at least one vector", t);
        file.space = SuperSpace(basis, params);
        space_ = &file.space;
        have_basis = true;
      } else if (t.text == "op") {
        next();
        require_space(t);
        const Token& name = expect_name("op name");
        for (const auto& op : file.ops) {
          if (op.name == name.text) throw error("duplicate op '" + name.text + "'", name);
        }
        if (file.bracket && file.bracket->name == name.text) throw error("duplicate op '" + name.text + "'", name);
        file.ops.push_back({name.text, bilinear_block()});
      } else if (t.text == "bracket") {
        next();
        require_space(t);
        if (file.bracket) throw error("duplicate bracket block", t);
        const Token& name = expect_name("bracket name");
        for (const auto& op : file.ops) {
          if (op.name == name.text) throw error("duplicate op '" + name.text + "'", name);
        }
        file.bracket = NamedMap{name.text, bilinear_block()};
      } else if (t.text == "lambda-bracket") {
        next();
        require_space(t);
        if (file.lambda_bracket) throw error("duplicate lambda-bracket block", t);
        file.lambda_bracket = lambda_block();
      } else if (t.text == "linear-map") {
        next();
        require_space(t);
        const Token& name = expect_name("linear map name");
        for (const auto& m : file.linear_maps) {
          if (m.name == name.text) throw error("duplicate linear map '" + name.text + "'", name);
        }
        file.linear_maps.push_back({name.text, linear_block()});
      } else if (t.text == "star" && peek(1).kind == Tok::Punct && peek(1).text == "=") {
        next();
        next();
        if (file.star != StarDirective::None) throw error("duplicate star directive", t);
        star_directive(file);
      } else {
        throw error("expected a statement, found '" + t.text + "'", t);
      }
    }
    if (!have_basis) throw error("missing basis statement", peek());
    if (!file.star_source.empty() && !file.op(file.star_source)) {
      throw ParseError("unresolved identifier '" + file.star_source + "'", star_line_, star_column_);
    }
    if (file.star == StarDirective::Explicit && !file.op("star")) {
      throw ParseError("star = explicit needs an op named star", star_line_, star_column_);
    }
    return file;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  static ParseError error(const std::string& message, const Token& at) {
    return ParseError(message, at.line, at.column);
  }
  bool is_statement_start() const {
    const Token& t = peek();
    if (t.kind != Tok::Ident) return false;
    if (kKeywords.count(t.text) && t.text != "even" && t.text != "odd") return true;
    return t.text == "star" && peek(1).kind == Tok::Punct && peek(1).text == "=";
  }
  bool accept(const std::string& punct) {
    if (peek().kind == Tok::Punct && peek().text == punct) {
      next();
      return true;
    }
    return false;
  }
  void expect(const std::string& punct) {
    if (!accept(punct)) throw error("expected '" + punct + "'", peek());
  }
  const Token& expect_name(const std::string& what) {
    const Token& t = next();
    if (t.kind != Tok::Ident || kKeywords.count(t.text)) throw error("expected " + what, t);
    return t;
  }
  void check_new_name(const Token& t, const std::vector<std::string>& params, const std::vector<BasisVector>& basis) {
    if (kKeywords.count(t.text) || kReserved.count(t.text) || t.text == "star") {
      throw error("'" + t.text + "' is reserved", t);
    }
    for (const auto& p : params) {
      if (p == t.text) throw error("duplicate name '" + t.text + "'", t);
    }
    for (const auto& b : basis) {
      if (b.name == t.text) throw error("duplicate name '" + t.text + "'", t);
    }
  }

  std::size_t basis_index(const Token& t) {
    if (t.kind != Tok::Ident) throw error("expected a basis vector", t);
    auto k = space_->index_of(t.text);
    if (!k) throw error("unresolved identifier '" + t.text + "'", t);
    return *k;
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Linear expr() {
    Linear acc;
    bool negate = false;
    if (accept("-")) negate = true;
    else accept("+");
    acc.add(term(), negate);
    while (true) {
      if (accept("+")) acc.add(term(), false);
      else if (accept("-")) acc.add(term(), true);
      else break;
    }
    return acc;
  }

  bool starts_atom() const {
    const Token& t = peek();
    return t.kind == Tok::Ident || t.kind == Tok::Number || (t.kind == Tok::Punct && t.text == "(");
  }

  // term := factor (('*' | '/' | juxtaposition) factor)*
  Linear term() {
    Linear acc = factor();
    while (true) {
      const Token& t = peek();
      if (accept("*") || starts_atom()) {
        acc = multiply(acc, factor(), t);
      } else if (accept("/")) {
        const Token& at = peek();
        Linear divisor = factor();
        auto value = constant_of(divisor);
        if (!value || *value == 0) throw error("division is only by a nonzero rational constant", at);
        acc = acc.scaled(SymbolPoly(Scalar(Rational(1) / *value)));
      } else {
        break;
      }
    }
    return acc;
  }

  Linear multiply(const Linear& a, const Linear& b, const Token& at) {
    if (a.has_vec() && b.has_vec()) throw error("product of two basis vectors", at);
    if (a.has_vec()) return a.scaled(b.scalar);
    return b.scaled(a.scalar);
  }

  static std::optional<Rational> constant_of(const Linear& v) {
    if (v.has_vec()) return std::nullopt;
    if (v.scalar.is_zero()) return Rational(0);
    if (v.scalar.terms().size() != 1 || v.scalar.terms().begin()->first != SymbolExponents{}) return std::nullopt;
    return v.scalar.terms().begin()->second.as_rational();
  }

  // factor := atom ('^' number)?
  Linear factor() {
    const Token& at = peek();
    Linear base = atom();
    if (accept("^")) {
      const Token& e = next();
      if (e.kind != Tok::Number) throw error("expected an integer exponent", e);
      if (base.has_vec()) throw error("power of a basis vector", at);
      Linear r;
      r.scalar = base.scalar.pow(static_cast<unsigned>(std::stoul(e.text)));
      return r;
    }
    return base;
  }

  Linear atom() {
    const Token& t = next();
    Linear v;
    if (t.kind == Tok::Number) {
      v.scalar = SymbolPoly(Scalar(Rational(mpz_class(t.text))));
      return v;
    }
    if (t.kind == Tok::Punct && t.text == "(") {
      v = expr();
      expect(")");
      return v;
    }
    if (t.kind != Tok::Ident) throw error("expected a coefficient or basis vector", t);
    for (std::size_t i = 0; i < space_->arity(); ++i) {
      if (space_->params()[i] == t.text) {
        v.scalar = SymbolPoly(Scalar::variable(i, space_->arity()));
        return v;
      }
    }
    if (auto k = space_->index_of(t.text)) {
      v.vec.emplace(*k, SymbolPoly(Scalar(1)));
      return v;
    }
    if (lambda_context_ && t.text == "d") {
      v.scalar = SymbolPoly::symbol(Symbol::D);
      return v;
    }
    if (lambda_context_ && t.text == "l") {
      v.scalar = SymbolPoly::symbol(Symbol::Lambda);
      return v;
    }
    throw error("unresolved identifier '" + t.text + "'", t);
  }

  /// Parses `rhs ;` and returns the basis part.
  std::map<std::size_t, SymbolPoly> rhs(const Token& at) {
    Linear v = expr();
    if (!v.scalar.is_zero()) throw error("right-hand side must be a combination of basis vectors", at);
    expect(";");
    return v.vec;
  }

  Vec to_vec(const std::map<std::size_t, SymbolPoly>& parts) const {
    Vec out(space_->dim());
    for (const auto& [k, p] : parts) out[k] = p.coefficient(SymbolExponents{});
    return out;
  }

  GradedBilinearMap bilinear_block() {
    GradedBilinearMap map(*space_);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    expect("{");
    while (!accept("}")) {
      const Token& first = peek();
      std::size_t i = basis_index(next());
      std::size_t j = basis_index(next());
      if (peek().kind != Tok::Arrow) throw error("expected '->'", peek());
      const Token& arrow = next();
      if (!seen.insert({i, j}).second) throw error("duplicate entry", first);
      Vec value = to_vec(rhs(arrow));
      try {
        map.set(i, j, value);
      } catch (const ParityError& e) {
        throw error(std::string("parity violation: ") + e.what(), first);
      }
    }
    return map;
  }

  LambdaBracket lambda_block() {
    LambdaBracket bracket(*space_);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    lambda_context_ = true;
    expect("{");
    while (!accept("}")) {
      const Token& first = peek();
      std::size_t i = basis_index(next());
      std::size_t j = basis_index(next());
      if (peek().kind != Tok::Arrow) throw error("expected '->'", peek());
      const Token& arrow = next();
      if (!seen.insert({i, j}).second) throw error("duplicate entry", first);
      VPoly value;
      for (const auto& [k, p] : rhs(arrow)) value += VPoly::term(k, p);
      try {
        bracket.set(i, j, value);
      } catch (const ParityError& e) {
        throw error(std::string("parity violation: ") + e.what(), first);
      }
    }
    lambda_context_ = false;
    return bracket;
  }

  LinearMap linear_block() {
    LinearMap map(*space_);
    std::set<std::size_t> seen;
    expect("{");
    while (!accept("}")) {
      const Token& first = peek();
      std::size_t j = basis_index(next());
      if (peek().kind != Tok::Arrow) throw error("expected '->'", peek());
      const Token& arrow = next();
      if (!seen.insert(j).second) throw error("duplicate entry", first);
      map.set_image(j, to_vec(rhs(arrow)));
    }
    return map;
  }

  void star_directive(AlgebraFile& file) {
    const Token& t = next();
    star_line_ = t.line;
    star_column_ = t.column;
    if (t.kind == Tok::Number) {
      if (t.text != "2") throw error("only star = 2*<op> is supported", t);
      expect("*");
      file.star = StarDirective::Doubled;
      file.star_source = expect_name("op name").text;
    } else if (t.kind == Tok::Ident && t.text == "symmetrized") {
      expect("(");
      file.star = StarDirective::Symmetrized;
      file.star_source = expect_name("op name").text;
      expect(")");
    } else if (t.kind == Tok::Ident && t.text == "zero") {
      file.star = StarDirective::Zero;
    } else if (t.kind == Tok::Ident && t.text == "explicit") {
      file.star = StarDirective::Explicit;
    } else {
      throw error("expected 2*<op>, symmetrized(<op>), zero or explicit", t);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const SuperSpace* space_ = nullptr;
  bool lambda_context_ = false;
  std::size_t star_line_ = 0;
  std::size_t star_column_ = 0;
};

void print_bilinear(std::ostringstream& out, const GradedBilinearMap& map) {
  out << " {\n";
  const SuperSpace& space = map.space();
  for (std::size_t i = 0; i < map.dim(); ++i)
    for (std::size_t j = 0; j < map.dim(); ++j) {
      if (map(i, j).is_zero()) continue;
      out << "  " << space.name(i) << " " << space.name(j) << " -> " << map(i, j).to_string(space) << ";\n";
    }
  out << "}\n";
}

Scalar specialize(const Scalar& s, std::span<const std::optional<Rational>> values, std::size_t arity) {
  if (s.arity() == 0) return s;
  Scalar r = s.specialized(values);
  return r.arity() == arity ? r : Scalar::constant(r.to_rational(), arity);
}

Vec specialize(const Vec& v, std::span<const std::optional<Rational>> values, std::size_t arity) {
  Vec out(v.dim());
  for (std::size_t k = 0; k < v.dim(); ++k) out[k] = specialize(v[k], values, arity);
  return out;
}

GradedBilinearMap specialize(const GradedBilinearMap& map, const SuperSpace& space,
                             std::span<const std::optional<Rational>> values) {
  GradedBilinearMap out(space);
  for (std::size_t i = 0; i < map.dim(); ++i)
    for (std::size_t j = 0; j < map.dim(); ++j) out.set(i, j, specialize(map(i, j), values, space.arity()));
  return out;
}

}  // namespace

const GradedBilinearMap* AlgebraFile::op(std::string_view name) const {
  for (const auto& o : ops) {
    if (o.name == name) return &o.map;
  }
  return nullptr;
}

const GradedBilinearMap* AlgebraFile::circ() const {
  if (!star_source.empty()) return op(star_source);
  if (auto* c = op("circ")) return c;
  for (const auto& o : ops) {
    if (o.name != "star") return &o.map;
  }
  return nullptr;
}

QuadraticData AlgebraFile::quadratic() const {
  GradedBilinearMap zero(space);
  const GradedBilinearMap& br = bracket ? bracket->map : zero;
  const GradedBilinearMap* c = circ();
  const GradedBilinearMap* s = op("star");
  switch (star) {
    case StarDirective::Doubled:
      return make_quadratic(*c, br, StarMode::Doubled);
    case StarDirective::Symmetrized:
      return make_quadratic(*c, br, StarMode::Symmetrized);
    case StarDirective::Zero:
      if (!c) throw std::invalid_argument("star = zero needs a circ op");
      return make_quadratic(*c, br, StarMode::StarZero);
    case StarDirective::Explicit:
    case StarDirective::None:
      if (!s) throw std::invalid_argument("no star directive and no op named star");
      if (!c) return make_quadratic(zero, br, StarMode::CircZero, *s);
      return make_quadratic(*c, br, StarMode::Explicit, *s);
  }
  throw std::logic_error("unknown star directive");
}

LambdaBracket AlgebraFile::conformal() const {
  if (lambda_bracket) return *lambda_bracket;
  return build_quadratic_bracket(quadratic());
}

AlgebraFile parse(std::string_view text) { return Parser(text).run(); }

AlgebraFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string print(const AlgebraFile& file) {
  std::ostringstream out;
  const SuperSpace& space = file.space;
  if (!file.name.empty()) out << "algebra " << file.name << "\n";
  if (space.arity()) {
    out << "params";
    for (const auto& p : space.params()) out << " " << p;
    out << "\n";
  }
  out << "basis";
  for (const auto& b : space.basis()) out << " " << b.name << " " << (b.parity == Parity::Odd ? "odd" : "even");
  out << "\n";
  for (const auto& op : file.ops) {
    out << "op " << op.name;
    print_bilinear(out, op.map);
  }
  if (file.bracket) {
    out << "bracket " << file.bracket->name;
    print_bilinear(out, file.bracket->map);
  }
  switch (file.star) {
    case StarDirective::None:
      break;
    case StarDirective::Doubled:
      out << "star = 2*" << file.star_source << "\n";
      break;
    case StarDirective::Symmetrized:
      out << "star = symmetrized(" << file.star_source << ")\n";
      break;
    case StarDirective::Zero:
      out << "star = zero\n";
      break;
    case StarDirective::Explicit:
      out << "star = explicit\n";
      break;
  }
  if (file.lambda_bracket) {
    out << "lambda-bracket {\n";
    const LambdaBracket& b = *file.lambda_bracket;
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) {
        if (b(i, j).is_zero()) continue;
        out << "  " << space.name(i) << " " << space.name(j) << " -> " << b(i, j).to_string(space) << ";\n";
      }
    out << "}\n";
  }
  for (const auto& m : file.linear_maps) {
    out << "linear-map " << m.name << " {\n";
    for (std::size_t j = 0; j < space.dim(); ++j) {
      if (m.map.image(j).is_zero()) continue;
      out << "  " << space.name(j) << " -> " << m.map.image(j).to_string(space) << ";\n";
    }
    out << "}\n";
  }
  return out.str();
}

AlgebraFile instantiate(const AlgebraFile& file, const std::map<std::string, Rational>& values) {
  const auto& params = file.space.params();
  for (const auto& [name, v] : values) {
    if (std::find(params.begin(), params.end(), name) == params.end()) {
      throw std::invalid_argument("--at names an undeclared parameter '" + name + "'");
    }
  }
  std::vector<std::optional<Rational>> table;
  std::vector<std::string> survivors;
  for (const auto& p : params) {
    auto it = values.find(p);
    table.push_back(it == values.end() ? std::nullopt : std::optional<Rational>(it->second));
    if (it == values.end()) survivors.push_back(p);
  }
  AlgebraFile out = file;
  out.space = file.space.with_params(survivors);
  const std::size_t arity = survivors.size();
  for (auto& op : out.ops) op.map = specialize(op.map, out.space, table);
  if (out.bracket) out.bracket->map = specialize(out.bracket->map, out.space, table);
  if (out.lambda_bracket) {
    LambdaBracket b(out.space);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t j = 0; j < b.dim(); ++j) {
        VPoly value;
        for (const auto& [k, p] : (*file.lambda_bracket)(i, j).terms()) {
          SymbolPoly poly;
          for (const auto& [e, c] : p.terms()) poly += SymbolPoly::monomial(e, specialize(c, table, arity));
          value += VPoly::term(k, poly);
        }
        b.set(i, j, value);
      }
    out.lambda_bracket = b;
  }
  for (auto& m : out.linear_maps) {
    LinearMap lm(out.space);
    for (std::size_t j = 0; j < out.space.dim(); ++j) lm.set_image(j, specialize(m.map.image(j), table, arity));
    m.map = lm;
  }
  return out;
}

std::map<std::string, Rational> parse_assignments(std::string_view text) {
  std::map<std::string, Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw std::invalid_argument("expected name=value in --at");
    std::string name(item.substr(0, eq));
    if (!out.emplace(name, parse_rational(item.substr(eq + 1))).second) {
      throw std::invalid_argument("parameter '" + name + "' assigned twice in --at");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace confalg::cli
