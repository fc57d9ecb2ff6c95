#pragma once

#include <random>

#include "fmq/catalog.hpp"
#include "fmq/surface.hpp"

namespace fmq::test {

inline ChernCharacter ch(long r, std::initializer_list<long> c, Rat ch2) {
  ChernCharacter e{Int(r), {}, ch2};
  for (long v : c) e.c.emplace_back(v);
  return e;
}

inline const Catalog& cat() { return builtin_catalog(); }

inline IntMat random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                                long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Product of random elementary row operations: determinant +-1.
inline IntMat random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMat m = IntMat::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const Int k(coef(rng));
    for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
  }
  return m;
}

}  // namespace fmq::test
