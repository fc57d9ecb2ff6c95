#include "fmq/action.hpp"

#include <string>

namespace fmq {

GActionLattice::GActionLattice(std::string name, NumericalSurface surface, int order, RatMat gen)
    : name_(std::move(name)), surface_(std::move(surface)), order_(order), gen_(std::move(gen)) {
  const std::string where = "action " + name_ + ": ";
  if (order_ < 1) throw InputError(where + "order must be positive");
  if (surface_.canonical_order() != 1)
    throw InputError(where + "acts on " + surface_.name() +
                     ", which does not have trivial canonical bundle");
  if (!gen_.square() || gen_.rows() != surface_.ext_dim())
    throw InputError(where + "generator must be " + std::to_string(surface_.ext_dim()) + "x" +
                     std::to_string(surface_.ext_dim()) + ", got " + gen_.shape());
  if (!is_integral(gen_)) throw InputError(where + "generator is not integral");
  if (!(gen_.pow(static_cast<unsigned>(order_)) == RatMat::identity(gen_.rows())))
    throw InputError(where + "gen^" + std::to_string(order_) + " is not the identity");
  if (!preserves_pairing(surface_, surface_, gen_))
    throw InputError(where + "generator does not preserve the Mukai pairing");
}

GActionLattice GActionLattice::trivial(const NumericalSurface& surface, int order) {
  return GActionLattice("trivial_" + std::to_string(order), surface, order,
                        RatMat::identity(surface.ext_dim()));
}

RatMat GActionLattice::power(long k) const {
  long e = k % order_;
  if (e < 0) e += order_;
  return gen_.pow(static_cast<unsigned>(e));
}

bool preserves_pairing(const NumericalSurface& source, const NumericalSurface& target,
                       const RatMat& m) {
  if (m.rows() != target.ext_dim() || m.cols() != source.ext_dim()) return false;
  return m.transpose() * euler_gram(target) * m == euler_gram(source);
}

}  // namespace fmq
