#include "confalg/linear_system.hpp"

#include <algorithm>

#include "confalg/errors.hpp"

namespace confalg {

void LinearSystem::add_linear_form(const Scalar& form) {
  RationalRow row(columns());
  for (const auto& [e, c] : form.terms()) {
    unsigned deg = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      deg += e[i];
      if (e[i] != 0) var = i;
    }
    if (deg == 0) throw PreconditionError("inconsistent equation: nonzero constant term");
    if (deg > 1) throw PreconditionError("equation is not linear in the unknowns");
    row[var] = c;
  }
  rows.push_back(std::move(row));
}

namespace {

using IntRow = std::vector<Integer>;

IntRow to_integers(const RationalRow& row) {
  Integer l = 1;
  for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& q : row) out.push_back(Integer(q.get_num() * (l / q.get_den())));
  return out;
}

void remove_content(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// target <- p * target - e * pivot_row, eliminating `col`.
void eliminate(IntRow& target, const IntRow& pivot_row, std::size_t col) {
  if (target[col] == 0) return;
  Integer p = pivot_row[col];
  Integer e = target[col];
  for (std::size_t j = 0; j < target.size(); ++j) target[j] = p * target[j] - e * pivot_row[j];
  remove_content(target);
}

}  // namespace

std::vector<RationalRow> rref(const std::vector<RationalRow>& rows, std::size_t columns,
                              std::vector<std::size_t>* pivots) {
  std::vector<IntRow> m;
  for (const auto& r : rows) {
    IntRow ir = to_integers(r);
    if (std::any_of(ir.begin(), ir.end(), [](const Integer& x) { return x != 0; })) {
      remove_content(ir);
      m.push_back(std::move(ir));
    }
  }
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < m.size(); ++col) {
    std::size_t best = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][col] != 0 && (best == m.size() || abs(m[i][col]) < abs(m[best][col]))) best = i;
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != r) eliminate(m[i], m[r], col);
    }
    piv.push_back(col);
    ++r;
  }
  m.resize(r);
  std::vector<RationalRow> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    RationalRow row(columns);
    for (std::size_t j = 0; j < columns; ++j) {
      row[j] = Rational(m[i][j], m[i][piv[i]]);
      row[j].canonicalize();
    }
    out.push_back(std::move(row));
  }
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::size_t rank(const std::vector<RationalRow>& rows, std::size_t columns) { return rref(rows, columns).size(); }

std::vector<RationalRow> nullspace(const std::vector<RationalRow>& rows, std::size_t columns) {
  std::vector<std::size_t> piv;
  auto reduced = rref(rows, columns, &piv);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<RationalRow> basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    RationalRow v(columns);
    v[f] = 1;
    for (std::size_t i = 0; i < reduced.size(); ++i) v[piv[i]] = -reduced[i][f];
    basis.push_back(std::move(v));
  }
  return rref(basis, columns);
}

}  // namespace confalg
