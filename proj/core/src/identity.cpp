#include "confalg/identity.hpp"

#include <stdexcept>

namespace confalg {

Expr Expr::slot(int index) {
  Expr e;
  e.slot_ = index;
  return e;
}

Expr Expr::apply(Op op, Expr left, Expr right) {
  Expr e;
  e.node_ = std::make_shared<const Node>(Node{op, std::move(left), std::move(right)});
  return e;
}

int KoszulSign::evaluate(std::span<const Parity> slot_parities) const {
  int s = 1;
  for (const auto& [i, j] : pairs) s *= koszul_sign(slot_parities[i], slot_parities[j]);
  return s;
}

namespace {

const GradedBilinearMap& select(Op op, const Operations& ops) {
  const GradedBilinearMap* m = nullptr;
  switch (op) {
    case Op::Circ: m = ops.circ; break;
    case Op::Star: m = ops.star; break;
    case Op::Bracket: m = ops.bracket; break;
  }
  if (m == nullptr) throw std::logic_error("identity uses an operation that was not supplied");
  return *m;
}

std::size_t dimension(const Operations& ops) {
  for (const auto* m : {ops.circ, ops.star, ops.bracket}) {
    if (m) return m->dim();
  }
  throw std::logic_error("no operations supplied");
}

}  // namespace

Vec evaluate(const Expr& expr, const Operations& ops, std::span<const std::size_t> slots) {
  if (expr.is_slot()) return Vec::basis(dimension(ops), slots[expr.slot_index()]);
  const auto& m = select(expr.op(), ops);
  // Products of two slots read the table directly.
  if (expr.left().is_slot() && expr.right().is_slot()) {
    return m(slots[expr.left().slot_index()], slots[expr.right().slot_index()]);
  }
  return m.apply(evaluate(expr.left(), ops, slots), evaluate(expr.right(), ops, slots));
}

Vec residual(const VecEquation& eq, const Operations& ops, std::span<const std::size_t> slots) {
  const std::size_t d = dimension(ops);
  const auto* any = ops.circ ? ops.circ : (ops.star ? ops.star : ops.bracket);
  std::vector<Parity> parities;
  for (auto s : slots) parities.push_back(any->space().parity(s));
  Vec r(d);
  for (const auto& t : eq.lhs) {
    r += Scalar(t.coefficient * t.sign.evaluate(parities)) * evaluate(t.expr, ops, slots);
  }
  for (const auto& t : eq.rhs) {
    r -= Scalar(t.coefficient * t.sign.evaluate(parities)) * evaluate(t.expr, ops, slots);
  }
  return r;
}

}  // namespace confalg
