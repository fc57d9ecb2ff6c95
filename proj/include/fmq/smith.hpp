#pragma once

#include <optional>
#include <vector>

#include "fmq/matrix.hpp"

namespace fmq {

/// U * m * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithDecomposition {
  IntMat U;
  IntMat D;
  IntMat V;

  std::size_t rank() const;
  IntVec invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMat& m);

/// All integer solutions of m x = b: particular + Z-span(kernel).
struct IntegerSolutionSet {
  IntVec particular;
  std::vector<IntVec> kernel;  // basis of the integer kernel lattice
};

std::optional<IntegerSolutionSet> solve_integer_affine(const IntMat& m, const IntVec& b);

/// Some integer x with m x = b, or nullopt when none exists.
std::optional<IntVec> solve_integer(const IntMat& m, const IntVec& b);

Int determinant(const IntMat& m);

}  // namespace fmq
