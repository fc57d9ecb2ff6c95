#pragma once

#include <string>
#include <vector>

#include "fmq/surface.hpp"

namespace fmq {

/// The transfer maps act by the same matrices on Chern and on Mukai
/// coordinates (chi(O) multiplies by n under the cover), so one carrier
/// type serves both roles.
using ExtendedVector = ChernCharacter;

/// Numerical data of a canonical cover p: cover -> base of degree n.
/// pull_num: Num(base) -> Num(cover), push_num: Num(cover) -> Num(base),
/// both acting on column vectors.
class CoverTransfer {
 public:
  /// Checks shapes and that the cover surface has trivial canonical class.
  /// The numerical axioms are checked separately by validate_cover.
  CoverTransfer(std::string name, NumericalSurface base, NumericalSurface cover, int degree,
                IntMat pull_num, IntMat push_num);

  const std::string& name() const { return name_; }
  const NumericalSurface& base() const { return base_; }
  const NumericalSurface& cover() const { return cover_; }
  int degree() const { return degree_; }
  const IntMat& pull_num() const { return pull_num_; }
  const IntMat& push_num() const { return push_num_; }

  /// diag(1, pull_num, n) on extended lattices.
  RatMat pull_ext() const;
  /// diag(n, push_num, 1) on extended lattices.
  RatMat push_ext() const;

 private:
  std::string name_;
  NumericalSurface base_;
  NumericalSurface cover_;
  int degree_;
  IntMat pull_num_;
  IntMat push_num_;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  /// The first failing check, or nullptr.
  const CheckResult* first_failure() const;
};

/// Runs, in order: degree, intersection-scaling, adjointness,
/// degree-identity, chi-multiplicativity.
ValidationReport validate_cover(const CoverTransfer& t);

ExtendedVector pullback_ch(const CoverTransfer& t, const ExtendedVector& e);
ExtendedVector pushforward_ch(const CoverTransfer& t, const ExtendedVector& e);

struct AdjunctionCheck {
  Int lhs;  // chi(p^* f, e) on the cover
  Int rhs;  // chi(f, p_* e) on the base
  bool equal = false;
};

AdjunctionCheck chi_adjunction_check(const CoverTransfer& t, const ChernCharacter& f,
                                     const ChernCharacter& e);

}  // namespace fmq
