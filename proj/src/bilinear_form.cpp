#include "fmq/bilinear_form.hpp"

#include <string>

#include "fmq/smith.hpp"

namespace fmq {

BilinearForm::BilinearForm(IntMat gram) : gram_(std::move(gram)) {
  if (!gram_.square()) throw InputError("intersection matrix must be square, got " + gram_.shape());
  if (!(gram_ == gram_.transpose())) throw InputError("intersection matrix must be symmetric");
  if (gram_.rows() > 0 && determinant(gram_) == 0)
    throw InputError("intersection matrix must be nondegenerate");
}

Int BilinearForm::pair(const IntVec& x, const IntVec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw InputError("divisor class of length " + std::to_string(x.size()) + "/" +
                     std::to_string(y.size()) + " on a rank-" + std::to_string(dim()) + " lattice");
  Int acc = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) acc += x[i] * gram_(i, j) * y[j];
  }
  return acc;
}

bool BilinearForm::even() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

}  // namespace fmq
