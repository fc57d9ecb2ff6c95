#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fmq/matrix.hpp"

namespace fmq {

/// A representation of Z_n on Q^dim, given by the image of a generator.
class CyclicRep {
 public:
  /// Throws InputError unless gen is dim x dim with gen^order = 1.
  CyclicRep(int order, RatMat gen);

  int order() const { return order_; }
  std::size_t dim() const { return gen_.rows(); }
  const RatMat& gen() const { return gen_; }

 private:
  int order_;
  RatMat gen_;
};

/// A = sum_{i<n} g^i.
RatMat operator_A(const CyclicRep& rep);
/// B = 1 - g.
RatMat operator_B(const CyclicRep& rep);

struct KerImReport {
  bool holds = false;  // ker A == im B and AB = BA = 0
  bool products_vanish = false;
  std::size_t dim_ker_A = 0;
  std::size_t rank_B = 0;
  std::size_t dim_ker_B = 0;
};

KerImReport verify_ker_im(const CyclicRep& rep);

/// Given s with B s in V (V g-stable, spanned by `span`), returns t = s - k
/// with k in V and B t = 0. Throws InputError naming a violated precondition.
RatVec descend_invariant(const CyclicRep& rep, const std::vector<RatVec>& span, const RatVec& s);

/// Companion matrix of the d-th cyclotomic polynomial; has order exactly d.
RatMat cyclotomic_block(int d);
/// The cyclic permutation e_i -> e_{i+1 mod n}.
RatMat regular_rep(int n);

/// Block-diagonal sum of cyclotomic and permutation blocks whose orders divide
/// `order`, conjugated by a random invertible integer matrix.
CyclicRep random_cyclic_rep(std::mt19937_64& rng, int max_order, std::size_t max_dim);

}  // namespace fmq
