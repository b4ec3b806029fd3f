#include "exact_linalg.hpp"

#include "lowdeg/errors.hpp"

namespace lowdeg::detail {

RationalMatrix to_rational(const std::vector<DivisorClass>& rows) {
  RationalMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    m.emplace_back(r.coords().begin(), r.coords().end());
  }
  return m;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && sgn(m[p][col]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t matrix_rank(const std::vector<DivisorClass>& rows, std::size_t cols) {
  auto m = to_rational(rows);
  return row_reduce(m, cols).size();
}

DivisorClass primitive_direction(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& q : v) {
    Rational s = q * l;
    out.push_back(s.get_num());
  }
  return DivisorClass(std::move(out)).primitive();
}

std::vector<DivisorClass> integer_kernel(const std::vector<DivisorClass>& rows, std::size_t cols) {
  auto m = to_rational(rows);
  auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<DivisorClass> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(primitive_direction(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> span_coefficients(const std::vector<DivisorClass>& gens,
                                                       const DivisorClass& target) {
  const std::size_t k = gens.size();
  const std::size_t n = target.rank();
  // Augmented system: columns are generators, last column the target.
  RationalMatrix m(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = gens[j][i];
    m[i][k] = target[i];
  }
  auto pivots = row_reduce(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) throw InvariantError("span_coefficients: generators are dependent");
  std::vector<Rational> coeff(k);
  for (std::size_t r = 0; r < k; ++r) coeff[pivots[r]] = m[r][k];
  return coeff;
}

Integer dot(const DivisorClass& a, const DivisorClass& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace lowdeg::detail
