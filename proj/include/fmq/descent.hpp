#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fmq/action.hpp"
#include "fmq/cover.hpp"

namespace fmq {

struct LabeledClass {
  std::string label;
  ChernCharacter ch;
};

/// O, (0, e_j, 0) for each basis vector of Num, and the point class: these
/// generate the numerical Grothendieck group of an even lattice.
std::vector<LabeledClass> generator_set(const NumericalSurface& S);

/// Numerical form of the freeness criterion for the induced Z_n action on a
/// moduli space of sheaves of class e on the cover.
struct GcdCertificate {
  std::vector<std::pair<std::string, Int>> values;  // chi(F_i, p_* e)
  Int gcd;                                          // 0 when all values vanish
  bool free = false;                                // gcd == 1
};

GcdCertificate freeness_gcd(const CoverTransfer& t, const ChernCharacter& e);

/// Certificate over an explicit list of base classes; freeness_gcd uses
/// generator_set(t.base()).
GcdCertificate freeness_gcd_over(const CoverTransfer& t, const ChernCharacter& e,
                                 const std::vector<LabeledClass>& classes);

/// sum_{i<m} (g^i)^* e. Throws InputError unless m divides the action order.
ExtendedVector orbit_sum(const GActionLattice& action, const ExtendedVector& e, int m);

struct ObstructionResult {
  bool applicable = false;
  std::string reason;                    // why not applicable, when it is not
  Int divisor;                           // n / m
  bool all_divisible = false;
  std::optional<ChernCharacter> descended;  // A with p^* A = orbit sum
  GcdCertificate certificate;
};

/// If the length-m orbit sum of e is p^* A for an integral class A, every
/// chi(F, p_* e) is divisible by n/m. Without an explicit action the lattice
/// action is taken to be trivial.
ObstructionResult divisibility_obstruction(const CoverTransfer& t, const ChernCharacter& e, int m,
                                           const std::optional<GActionLattice>& action = {});

}  // namespace fmq
