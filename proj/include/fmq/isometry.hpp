#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmq/action.hpp"
#include "fmq/cover.hpp"

namespace fmq {

/// Cohomological action of a derived equivalence between two surfaces: an
/// integral matrix on extended lattices (Chern coordinates) preserving the
/// Mukai pairing, equivalently the Euler form.
class LatticeIsometry {
 public:
  /// Throws InputError on shape mismatch, non-integral entries, or when the
  /// pairing is not preserved.
  LatticeIsometry(NumericalSurface source, NumericalSurface target, RatMat mat);

  const NumericalSurface& source() const { return source_; }
  const NumericalSurface& target() const { return target_; }
  const RatMat& mat() const { return mat_; }

  ChernCharacter apply(const ChernCharacter& e) const;

 private:
  NumericalSurface source_;
  NumericalSurface target_;
  RatMat mat_;
};

bool check_order_compatibility(const NumericalSurface& x, const NumericalSurface& y);

/// Exponents mu_j (j = 0..n-1) with gX^j . phi = phi . gY^{mu_j}, where mu is
/// an automorphism of Z_n; nullopt when no automorphism works. phi maps the
/// lattice of aY's surface to that of aX's surface.
std::optional<std::vector<int>> check_equivariant(const LatticeIsometry& phi,
                                                  const GActionLattice& aY,
                                                  const GActionLattice& aX);

struct DescentOutcome {
  std::optional<LatticeIsometry> map;
  std::string witness;  // obstruction when map is absent
};

/// Solves p_X* . phi~ = phi . p_Y* over the integers and checks
/// p_X^* . phi = phi~ . p_Y^*. phi_t maps tY.cover() to tX.cover().
DescentOutcome descend_isometry(const LatticeIsometry& phi_t, const CoverTransfer& tY,
                                const CoverTransfer& tX);

struct LiftOptions {
  int search_bound = 2;                // box for free integer parameters
  std::size_t max_candidates = 200000;
  bool parallel = true;
};

/// Integer solutions of both lifting squares: particular + Z-span(directions).
struct LiftFamily {
  IntMat particular;
  std::vector<IntMat> directions;
};

struct LiftResult {
  std::vector<LatticeIsometry> lifts;
  std::optional<LiftFamily> family;  // absent when the squares have no integer solution
  /// True when the family is a single matrix, so `lifts` is the complete answer.
  /// Otherwise `lifts` holds the isometries found in the parameter box.
  bool exhaustive = false;
  std::string note;
};

/// All integral isometries phi~: tY.cover() -> tX.cover() making both squares
/// commute with phi: tY.base() -> tX.base().
LiftResult lift_isometry(const LatticeIsometry& phi, const CoverTransfer& tY,
                         const CoverTransfer& tX, const LiftOptions& options = {});

/// Writes an extended vector as r O + sum c_j e_j + s pt.
std::string format_extended(const RatVec& coords);

}  // namespace fmq
