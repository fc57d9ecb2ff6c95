#pragma once

#include "fmq/surface.hpp"

namespace fmq {

/// Induced action of a generator g of Z_n on the extended lattice of a surface
/// with trivial canonical bundle, in Chern coordinates.
class GActionLattice {
 public:
  /// Throws InputError unless gen^n = 1, gen is integral and preserves the
  /// Euler form of the surface.
  GActionLattice(std::string name, NumericalSurface surface, int order, RatMat gen);

  static GActionLattice trivial(const NumericalSurface& surface, int order);

  const std::string& name() const { return name_; }
  const NumericalSurface& surface() const { return surface_; }
  int order() const { return order_; }
  const RatMat& gen() const { return gen_; }
  /// gen^k for k reduced modulo the order.
  RatMat power(long k) const;

 private:
  std::string name_;
  NumericalSurface surface_;
  int order_;
  RatMat gen_;
};

/// True iff m is square of the right size and m^T G_target m = G_source for
/// the Euler Gram matrices ("preserves the Mukai pairing").
bool preserves_pairing(const NumericalSurface& source, const NumericalSurface& target,
                       const RatMat& m);

}  // namespace fmq
