#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fmq/catalog.hpp"

namespace fmq {

struct ReproCheck {
  std::string name;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct ReproReport {
  std::string id;
  std::string title;
  std::vector<ReproCheck> checks;
  bool ok() const;
};

/// ex3.5, ex3.6, ex5.2, ex5.3, mukai-no-descent.
const std::vector<std::string>& reproduction_ids();

/// Throws InputError for an unknown id.
ReproReport reproduce(const Catalog& catalog, std::string_view id);

/// Cohomological action ch(E) -> chi(O, E) ch(O) - ch(E) of the reflection
/// functor with kernel the ideal sheaf of the diagonal, on a surface with
/// trivial canonical bundle.
RatMat reflection_action(const NumericalSurface& S);

}  // namespace fmq
