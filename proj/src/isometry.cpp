#include "fmq/isometry.hpp"

#include <numeric>
#include <string>

#include "fmq/linalg.hpp"
#include "fmq/smith.hpp"

namespace fmq {

namespace {

void require_same(const NumericalSurface& expected, const NumericalSurface& got,
                  const std::string& what) {
  if (!(expected == got))
    throw InputError(what + ": expected a map on " + expected.name() + ", got " + got.name());
}

void require_same_degree(const CoverTransfer& tY, const CoverTransfer& tX) {
  if (tY.degree() != tX.degree())
    throw InputError("covers " + tY.name() + " and " + tX.name() + " have degrees " +
                     std::to_string(tY.degree()) + " and " + std::to_string(tX.degree()));
}

std::string term(const Rat& coeff, const std::string& label) {
  if (coeff == 1) return label;
  if (coeff == -1) return "-" + label;
  return coeff.get_str() + label;
}

}  // namespace

std::string format_extended(const RatVec& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    std::string label = i == 0                   ? "O"
                        : i + 1 == coords.size() ? "pt"
                                                 : "e" + std::to_string(i);
    std::string t = term(coords[i], label);
    if (!out.empty()) out += t.front() == '-' ? " - " + t.substr(1) : " + " + t;
    else out = t;
  }
  return out.empty() ? "0" : out;
}

LatticeIsometry::LatticeIsometry(NumericalSurface source, NumericalSurface target, RatMat mat)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat)) {
  if (source_.ext_dim() != target_.ext_dim())
    throw InputError("isometry " + source_.name() + " -> " + target_.name() +
                     ": extended lattices have different dimensions");
  if (mat_.rows() != target_.ext_dim() || mat_.cols() != source_.ext_dim())
    throw InputError("isometry matrix must be " + std::to_string(target_.ext_dim()) + "x" +
                     std::to_string(source_.ext_dim()) + ", got " + mat_.shape());
  if (!is_integral(mat_)) throw InputError("isometry matrix is not integral");
  if (!preserves_pairing(source_, target_, mat_))
    throw InputError("matrix does not preserve the Mukai pairing from " + source_.name() +
                     " to " + target_.name());
}

ChernCharacter LatticeIsometry::apply(const ChernCharacter& e) const {
  require_on(source_, e);
  return from_coords(target_, mat_.apply(to_coords(e)));
}

bool check_order_compatibility(const NumericalSurface& x, const NumericalSurface& y) {
  return x.canonical_order() == y.canonical_order();
}

std::optional<std::vector<int>> check_equivariant(const LatticeIsometry& phi,
                                                  const GActionLattice& aY,
                                                  const GActionLattice& aX) {
  if (aY.order() != aX.order())
    throw InputError("group orders differ: " + std::to_string(aY.order()) + " vs " +
                     std::to_string(aX.order()));
  require_same(aY.surface(), phi.source(), "action " + aY.name());
  require_same(aX.surface(), phi.target(), "action " + aX.name());
  const int n = aX.order();
  const RatMat lhs = aX.gen() * phi.mat();
  // Try k = 1 first so that the identity automorphism wins ties.
  for (int step = 0; step < n; ++step) {
    const int k = (1 + step) % n;
    if (std::gcd(k, n) != 1) continue;
    if (!(lhs == phi.mat() * aY.power(k))) continue;
    std::vector<int> mu(n);
    std::vector<bool> hit(n, false);
    for (int j = 0; j < n; ++j) {
      mu[j] = static_cast<int>((static_cast<long>(j) * k) % n);
      if (!(aX.power(j) * phi.mat() == phi.mat() * aY.power(mu[j])))
        throw InvariantViolation("equivariance on the generator does not propagate to g^" +
                                 std::to_string(j));
      hit[mu[j]] = true;
    }
    for (bool h : hit)
      if (!h) throw InvariantViolation("exponent map is not a bijection of Z_n");
    return mu;
  }
  return std::nullopt;
}

DescentOutcome descend_isometry(const LatticeIsometry& phi_t, const CoverTransfer& tY,
                                const CoverTransfer& tX) {
  require_same_degree(tY, tX);
  require_same(tY.cover(), phi_t.source(), "descend source");
  require_same(tX.cover(), phi_t.target(), "descend target");

  const RatMat push_y = tY.push_ext();
  const RatMat pull_y = tY.pull_ext();
  const RatMat pull_x = tX.pull_ext();
  const RatMat rhs = tX.push_ext() * phi_t.mat();  // must equal phi . p_Y*
  const IntMat push_y_t = to_int(push_y.transpose());
  const IntMat rhs_t = to_int(rhs.transpose());

  DescentOutcome out;
  const std::size_t rows = tX.base().ext_dim();
  RatMat phi(rows, tY.base().ext_dim());
  for (std::size_t i = 0; i < rows; ++i) {
    const auto x = solve_integer(push_y_t, rhs_t.col(i));
    if (!x) {
      // Name a cover basis vector u with p_*u = d w whose required image is
      // not divisible by d.
      for (std::size_t j = 0; j < push_y.cols(); ++j) {
        const RatVec source = push_y.col(j);
        const RatVec image = rhs.col(j);
        Int d = 0;
        for (const Rat& q : source) d = gcd(d, q.get_num());
        if (d <= 1) continue;
        bool divisible = true;
        for (const Rat& q : image)
          divisible = divisible && mpz_divisible_p(q.get_num_mpz_t(), d.get_mpz_t());
        if (!divisible) {
          out.witness = "phi(" + format_extended(source) + ") = " + format_extended(image);
          return out;
        }
      }
      out.witness = "no integral solution of p_X* . phi~ = phi . p_Y* (row " +
                    std::to_string(i + 1) + ")";
      return out;
    }
    for (std::size_t j = 0; j < x->size(); ++j) phi(i, j) = (*x)[j];
  }
  if (!(pull_x * phi == phi_t.mat() * pull_y)) {
    out.witness = "first square holds but p_X^* . phi != phi~ . p_Y^*";
    return out;
  }
  if (!preserves_pairing(tY.base(), tX.base(), phi))
    throw InvariantViolation("descended map does not preserve the Mukai pairing");
  out.map.emplace(tY.base(), tX.base(), std::move(phi));
  return out;
}

namespace {

// Unknowns are the entries of phi~ (a x b, row-major).
IntMat lifting_system(const IntMat& pull_y, const IntMat& pull_x_phi, const IntMat& push_x,
                      const IntMat& phi_push_y, IntVec& rhs, std::size_t a, std::size_t b) {
  const std::size_t eq1 = a * pull_y.cols();
  const std::size_t eq2 = push_x.rows() * b;
  IntMat sys(eq1 + eq2, a * b);
  rhs.assign(eq1 + eq2, 0);
  std::size_t row = 0;
  // phi~ . p_Y^* = p_X^* . phi
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < pull_y.cols(); ++j, ++row) {
      for (std::size_t k = 0; k < b; ++k) sys(row, i * b + k) = pull_y(k, j);
      rhs[row] = pull_x_phi(i, j);
    }
  // p_X* . phi~ = phi . p_Y*
  for (std::size_t i = 0; i < push_x.rows(); ++i)
    for (std::size_t j = 0; j < b; ++j, ++row) {
      for (std::size_t k = 0; k < a; ++k) sys(row, k * b + j) = push_x(i, k);
      rhs[row] = phi_push_y(i, j);
    }
  return sys;
}

IntMat reshape(const IntVec& v, std::size_t a, std::size_t b) { return IntMat(a, b, v); }

}  // namespace

LiftResult lift_isometry(const LatticeIsometry& phi, const CoverTransfer& tY,
                         const CoverTransfer& tX, const LiftOptions& options) {
  require_same_degree(tY, tX);
  require_same(tY.base(), phi.source(), "lift source");
  require_same(tX.base(), phi.target(), "lift target");

  const std::size_t a = tX.cover().ext_dim();
  const std::size_t b = tY.cover().ext_dim();
  const IntMat phi_m = to_int(phi.mat());
  const IntMat pull_y = to_int(tY.pull_ext());
  const IntMat pull_x = to_int(tX.pull_ext());
  const IntMat push_y = to_int(tY.push_ext());
  const IntMat push_x = to_int(tX.push_ext());

  IntVec rhs;
  const IntMat sys = lifting_system(pull_y, pull_x * phi_m, push_x, phi_m * push_y, rhs, a, b);
  LiftResult result;
  const auto solutions = solve_integer_affine(sys, rhs);
  if (!solutions) {
    result.exhaustive = true;
    result.note = "the lifting squares have no integral solution";
    return result;
  }

  LiftFamily family;
  family.particular = reshape(solutions->particular, a, b);
  for (const IntVec& k : solutions->kernel) family.directions.push_back(reshape(k, a, b));

  const std::size_t d = family.directions.size();
  const int bound = options.search_bound;
  std::size_t total = 1;
  bool too_many = false;
  for (std::size_t i = 0; i < d && !too_many; ++i) {
    total *= static_cast<std::size_t>(2 * bound + 1);
    too_many = total > options.max_candidates;
  }
  result.exhaustive = d == 0;
  if (too_many) {
    result.note = std::to_string(d) + "-parameter family of integral solutions; box search skipped";
    result.family = std::move(family);
    return result;
  }
  if (d > 0)
    result.note = std::to_string(d) + "-parameter family of integral solutions; isometries "
                  "listed for parameters in [-" + std::to_string(bound) + ", " +
                  std::to_string(bound) + "]";

  const RatMat gram_src = euler_gram(tY.cover());
  const RatMat gram_dst = euler_gram(tX.cover());
  auto candidate = [&](std::size_t index) {
    IntMat m = family.particular;
    for (std::size_t i = 0; i < d; ++i) {
      const long t = static_cast<long>(index % (2 * bound + 1)) - bound;
      index /= (2 * bound + 1);
      if (t != 0) m = m + Int(t) * family.directions[i];
    }
    return to_rat(m);
  };

  std::vector<char> keep(total, 0);
  std::vector<RatMat> mats(total);
  auto evaluate = [&](std::size_t idx) {
    RatMat m = candidate(idx);
    if (m.transpose() * gram_dst * m == gram_src) {
      keep[idx] = 1;
      mats[idx] = std::move(m);
    }
  };
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(total); ++idx) evaluate(static_cast<std::size_t>(idx));
  } else {
    for (std::size_t idx = 0; idx < total; ++idx) evaluate(idx);
  }
  for (std::size_t idx = 0; idx < total; ++idx)
    if (keep[idx]) result.lifts.emplace_back(tY.cover(), tX.cover(), std::move(mats[idx]));
  result.family = std::move(family);
  return result;
}

}  // namespace fmq
