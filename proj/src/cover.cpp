#include "fmq/cover.hpp"

#include <string>

namespace fmq {

namespace {

IntVec basis_vector(std::size_t dim, std::size_t i) {
  IntVec v(dim);
  v[i] = 1;
  return v;
}

std::string pair_label(std::size_t i, std::size_t j) {
  return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
}

}  // namespace

CoverTransfer::CoverTransfer(std::string name, NumericalSurface base, NumericalSurface cover,
                             int degree, IntMat pull_num, IntMat push_num)
    : name_(std::move(name)), base_(std::move(base)), cover_(std::move(cover)), degree_(degree),
      pull_num_(std::move(pull_num)), push_num_(std::move(push_num)) {
  if (degree_ < 1) throw InputError("cover " + name_ + ": degree must be positive");
  if (cover_.canonical_order() != 1)
    throw InputError("cover " + name_ + ": covering surface " + cover_.name() +
                     " must have trivial canonical bundle (canonical_order 1)");
  const std::size_t kb = base_.num_rank(), kc = cover_.num_rank();
  if (pull_num_.rows() != kc || pull_num_.cols() != kb)
    throw InputError("cover " + name_ + ": pull matrix must be " + std::to_string(kc) + "x" +
                     std::to_string(kb) + ", got " + pull_num_.shape());
  if (push_num_.rows() != kb || push_num_.cols() != kc)
    throw InputError("cover " + name_ + ": push matrix must be " + std::to_string(kb) + "x" +
                     std::to_string(kc) + ", got " + push_num_.shape());
}

RatMat CoverTransfer::pull_ext() const {
  return block_diagonal<Rat>({RatMat{{1}}, to_rat(pull_num_), RatMat{{Rat(degree_)}}});
}

RatMat CoverTransfer::push_ext() const {
  return block_diagonal<Rat>({RatMat{{Rat(degree_)}}, to_rat(push_num_), RatMat{{1}}});
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

ValidationReport validate_cover(const CoverTransfer& t) {
  const NumericalSurface& base = t.base();
  const NumericalSurface& cover = t.cover();
  const std::size_t kb = base.num_rank(), kc = cover.num_rank();
  const Int n = t.degree();
  ValidationReport report;

  {
    CheckResult c{"degree", t.degree() == base.canonical_order(), ""};
    c.witness = "degree " + std::to_string(t.degree()) + ", canonical_order(" + base.name() +
                ") = " + std::to_string(base.canonical_order());
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"intersection-scaling", true, "(p^*x).(p^*y) = n x.y on all basis pairs"};
    for (std::size_t i = 0; i < kb && c.pass; ++i)
      for (std::size_t j = 0; j < kb; ++j) {
        const Int lhs = cover.num().pair(t.pull_num().col(i), t.pull_num().col(j));
        const Int rhs = n * base.num().gram()(i, j);
        if (lhs != rhs) {
          c.pass = false;
          c.witness = pair_label(i, j) + ": (p^*x).(p^*y) = " + lhs.get_str() + ", n x.y = " +
                      rhs.get_str();
          break;
        }
      }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"adjointness", true, "(p_*u).x = u.(p^*x) on all basis pairs"};
    for (std::size_t i = 0; i < kc && c.pass; ++i)
      for (std::size_t j = 0; j < kb; ++j) {
        const Int lhs = base.num().pair(t.push_num().col(i), basis_vector(kb, j));
        const Int rhs = cover.num().pair(basis_vector(kc, i), t.pull_num().col(j));
        if (lhs != rhs) {
          c.pass = false;
          c.witness = "u = e" + std::to_string(i + 1) + ", x = e" + std::to_string(j + 1) +
                      ": (p_*u).x = " + lhs.get_str() + ", u.(p^*x) = " + rhs.get_str();
          break;
        }
      }
    report.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"degree-identity", true, "p_* p^* = n on Num"};
    const IntMat composite = t.push_num() * t.pull_num();
    const IntMat expected = n * IntMat::identity(kb);
    for (std::size_t j = 0; j < kb; ++j)
      if (composite.col(j) != expected.col(j)) {
        c.pass = false;
        c.witness = "p_* p^* e" + std::to_string(j + 1) + " = " + to_string(composite.col(j)) +
                    ", expected " + to_string(expected.col(j));
        break;
      }
    report.checks.push_back(std::move(c));
  }
  {
    const Int expected = n * base.chi_o();
    CheckResult c{"chi-multiplicativity", cover.chi_o() == expected, ""};
    c.witness = "chi(O_cover) = " + cover.chi_o().get_str() + ", n chi(O_base) = " +
                expected.get_str();
    report.checks.push_back(std::move(c));
  }
  return report;
}

ExtendedVector pullback_ch(const CoverTransfer& t, const ExtendedVector& e) {
  require_on(t.base(), e);
  return {e.r, t.pull_num().apply(e.c), Rat(t.degree()) * e.ch2};
}

ExtendedVector pushforward_ch(const CoverTransfer& t, const ExtendedVector& e) {
  require_on(t.cover(), e);
  return {Int(t.degree()) * e.r, t.push_num().apply(e.c), e.ch2};
}

AdjunctionCheck chi_adjunction_check(const CoverTransfer& t, const ChernCharacter& f,
                                     const ChernCharacter& e) {
  AdjunctionCheck out;
  out.lhs = euler_pairing(t.cover(), pullback_ch(t, f), e);
  out.rhs = euler_pairing(t.base(), f, pushforward_ch(t, e));
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace fmq
