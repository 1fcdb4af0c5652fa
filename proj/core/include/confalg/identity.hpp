#pragma once

// Formal identity templates over three slots x, y, z (a, b, c).
//
// Each structure equation is stored as data: two lists of signed terms,
// LHS and RHS, each term a coefficient, a Koszul sign made of slot-parity
// pairs, and a product tree. This keeps transcriptions one-to-one with the
// written equations so a wrong sign is local to a single term.

#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "confalg/rational.hpp"
#include "confalg/superspace.hpp"

namespace confalg {

enum class Op : unsigned char { Circ, Star, Bracket };

/// Product tree whose leaves are slots 0, 1, 2.
class Expr {
 public:
  static Expr slot(int index);
  static Expr apply(Op op, Expr left, Expr right);

  bool is_slot() const { return node_ == nullptr; }
  int slot_index() const { return slot_; }
  Op op() const;
  const Expr& left() const;
  const Expr& right() const;

 private:
  struct Node;
  int slot_ = 0;
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Op op;
  Expr left;
  Expr right;
};

inline Op Expr::op() const { return node_->op; }
inline const Expr& Expr::left() const { return node_->left; }
inline const Expr& Expr::right() const { return node_->right; }

inline Expr circ(Expr a, Expr b) { return Expr::apply(Op::Circ, std::move(a), std::move(b)); }
inline Expr star(Expr a, Expr b) { return Expr::apply(Op::Star, std::move(a), std::move(b)); }
inline Expr br(Expr a, Expr b) { return Expr::apply(Op::Bracket, std::move(a), std::move(b)); }

/// Product of factors (-1)^{|s_i||s_j|} over the listed slot pairs.
struct KoszulSign {
  std::vector<std::pair<int, int>> pairs;
  int evaluate(std::span<const Parity> slot_parities) const;
};

inline KoszulSign sgn(std::initializer_list<std::pair<int, int>> pairs) { return KoszulSign{pairs}; }

/// coefficient * sign * expr, an element of V.
struct VecTerm {
  Rational coefficient;
  KoszulSign sign;
  Expr expr;
};

struct VecEquation {
  std::string name;
  std::vector<VecTerm> lhs;
  std::vector<VecTerm> rhs;
};

/// coefficient * sign * alpha_degree(left, right), a scalar bilinear form value.
struct FormTerm {
  Rational coefficient;
  KoszulSign sign;
  unsigned degree;
  Expr left;
  Expr right;
};

struct FormEquation {
  std::string name;
  std::vector<FormTerm> lhs;
  std::vector<FormTerm> rhs;
};

/// The three products an Expr may use; unused ones may be null.
struct Operations {
  const GradedBilinearMap* circ = nullptr;
  const GradedBilinearMap* star = nullptr;
  const GradedBilinearMap* bracket = nullptr;
};

/// Evaluates an expression with slots bound to basis vectors.
Vec evaluate(const Expr& expr, const Operations& ops, std::span<const std::size_t> slots);

/// LHS - RHS on one basis triple.
Vec residual(const VecEquation& eq, const Operations& ops, std::span<const std::size_t> slots);

}  // namespace confalg
