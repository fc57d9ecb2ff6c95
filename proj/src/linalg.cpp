#include "fmq/linalg.hpp"

#include <string>

namespace fmq {

RowEchelon rref(const RatMat& m) {
  RatMat a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    const Rat inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const Rat f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RatMat& m) { return rref(m).pivots.size(); }

std::vector<RatVec> kernel_basis(const RatMat& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_rational(const RatMat& m, const RatVec& b) {
  if (b.size() != m.rows())
    throw InputError("right-hand side of length " + std::to_string(b.size()) + " for " +
                     m.shape() + " system");
  RatMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVec x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

RatMat inverse(const RatMat& m) {
  if (!m.square()) throw InputError("inverse of non-square " + m.shape() + " matrix");
  const std::size_t n = m.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw InputError("singular matrix");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Rat determinant(const RatMat& m) {
  if (!m.square()) throw InputError("determinant of non-square " + m.shape() + " matrix");
  RatMat a = m;
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

bool in_span(const std::vector<RatVec>& spanning, const RatVec& v) {
  if (spanning.empty()) {
    for (const Rat& q : v)
      if (q != 0) return false;
    return true;
  }
  const RatMat cols = RatMat::from_columns(v.size(), spanning);
  return solve_rational(cols, v).has_value();
}

std::vector<RatVec> column_basis(const RatMat& m) {
  std::vector<RatVec> out;
  for (std::size_t p : rref(m).pivots) out.push_back(m.col(p));
  return out;
}

}  // namespace fmq
