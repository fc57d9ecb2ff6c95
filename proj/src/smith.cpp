#include "fmq/smith.hpp"

#include <string>

namespace fmq {

namespace {

// Row/column operations applied simultaneously to the working matrix and
// to the accumulated transforms.
struct Reducer {
  IntMat a;
  IntMat u;
  IntMat v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < u.cols(); ++k) std::swap(u(i, k), u(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < v.rows(); ++k) std::swap(v(k, i), v(k, j));
  }
  // row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) += f * a(j, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) += f * u(j, k);
  }
  // col_i += f * col_j
  void add_col(std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t k = 0; k < a.rows(); ++k) a(k, i) += f * a(k, j);
    for (std::size_t k = 0; k < v.rows(); ++k) v(k, i) += f * v(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = -a(i, k);
    for (std::size_t k = 0; k < u.cols(); ++k) u(i, k) = -u(i, k);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    bool found = false;
    std::size_t bi = t, bj = t;
    Int best;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        const Int mag = abs(a(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          bi = i;
          bj = j;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      if (!place_pivot(t)) return;
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides_all = true;
      for (std::size_t i = t + 1; i < a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (a(t, t) < 0) negate_row(t);
  }
};

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(D.rows(), D.cols());
  while (r < n && D(r, r) != 0) ++r;
  return r;
}

IntVec SmithDecomposition::invariant_factors() const {
  IntVec out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMat& m) {
  Reducer r{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) r.reduce_at(t);
  return {std::move(r.u), std::move(r.a), std::move(r.v)};
}

std::optional<IntegerSolutionSet> solve_integer_affine(const IntMat& m, const IntVec& b) {
  if (b.size() != m.rows())
    throw InputError("right-hand side of length " + std::to_string(b.size()) + " for " +
                     m.shape() + " system");
  const SmithDecomposition snf = smith_normal_form(m);
  const IntVec c = snf.U.apply(b);
  const std::size_t r = snf.rank();
  IntVec y(m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    if (!mpz_divisible_p(c[i].get_mpz_t(), snf.D(i, i).get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), snf.D(i, i).get_mpz_t());
  }
  for (std::size_t i = r; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  IntegerSolutionSet out;
  out.particular = snf.V.apply(y);
  for (std::size_t j = r; j < m.cols(); ++j) out.kernel.push_back(snf.V.col(j));
  return out;
}

std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b) {
  auto set = solve_integer_affine(m, b);
  if (!set) return std::nullopt;
  return std::move(set->particular);
}

Int determinant(const IntMat& m) {
  if (!m.square()) throw InputError("determinant of non-square " + m.shape() + " matrix");
  // Bareiss fraction-free elimination.
  IntMat a = m;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace fmq
