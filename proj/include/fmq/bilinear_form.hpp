#pragma once

#include "fmq/matrix.hpp"

namespace fmq {

/// Symmetric nondegenerate integer form, the intersection product on Num.
class BilinearForm {
 public:
  BilinearForm() = default;
  /// Throws InputError unless gram is square, symmetric and nondegenerate.
  explicit BilinearForm(IntMat gram);

  std::size_t dim() const { return gram_.rows(); }
  const IntMat& gram() const { return gram_; }

  Int pair(const IntVec& x, const IntVec& y) const;
  Int square(const IntVec& x) const { return pair(x, x); }
  bool even() const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  IntMat gram_;
};

}  // namespace fmq
