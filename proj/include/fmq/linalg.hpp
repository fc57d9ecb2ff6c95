#pragma once

#include <optional>
#include <vector>

#include "fmq/matrix.hpp"

namespace fmq {

struct RowEchelon {
  RatMat reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon rref(const RatMat& m);

std::size_t rank(const RatMat& m);

/// Basis of the null space {x : m x = 0}; empty when m is injective.
std::vector<RatVec> kernel_basis(const RatMat& m);

/// Some x with m x = b, or nullopt. Free variables are set to zero, so the
/// answer is deterministic.
std::optional<RatVec> solve_rational(const RatMat& m, const RatVec& b);

/// Throws InputError for singular or non-square input.
RatMat inverse(const RatMat& m);

Rat determinant(const RatMat& m);

/// True iff v lies in the span of the given vectors (all of length v.size()).
bool in_span(const std::vector<RatVec>& spanning, const RatVec& v);

/// A basis of the column space, taken from the pivot columns of m.
std::vector<RatVec> column_basis(const RatMat& m);

}  // namespace fmq
