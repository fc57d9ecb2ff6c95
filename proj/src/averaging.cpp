#include "fmq/averaging.hpp"

#include <numeric>
#include <string>

#include "fmq/errors.hpp"
#include "fmq/linalg.hpp"

namespace fmq {

CyclicRep::CyclicRep(int order, RatMat gen) : order_(order), gen_(std::move(gen)) {
  if (order_ < 1) throw InputError("representation order must be positive");
  if (!gen_.square()) throw InputError("generator must be square, got " + gen_.shape());
  if (!(gen_.pow(static_cast<unsigned>(order_)) == RatMat::identity(gen_.rows())))
    throw InputError("gen^" + std::to_string(order_) + " is not the identity");
}

RatMat operator_A(const CyclicRep& rep) {
  RatMat sum = RatMat::zero(rep.dim(), rep.dim());
  RatMat power = RatMat::identity(rep.dim());
  for (int i = 0; i < rep.order(); ++i) {
    sum = sum + power;
    power = power * rep.gen();
  }
  return sum;
}

RatMat operator_B(const CyclicRep& rep) { return RatMat::identity(rep.dim()) - rep.gen(); }

KerImReport verify_ker_im(const CyclicRep& rep) {
  const RatMat A = operator_A(rep);
  const RatMat B = operator_B(rep);
  KerImReport r;
  r.products_vanish = (A * B).is_zero() && (B * A).is_zero();
  const std::vector<RatVec> ker_a = kernel_basis(A);
  const std::vector<RatVec> im_b = column_basis(B);
  r.dim_ker_A = ker_a.size();
  r.rank_B = im_b.size();
  r.dim_ker_B = kernel_basis(B).size();

  bool im_in_ker = true;
  for (const RatVec& v : im_b) im_in_ker = im_in_ker && [&] {
    for (const Rat& q : A.apply(v))
      if (q != 0) return false;
    return true;
  }();
  bool ker_in_im = true;
  for (const RatVec& v : ker_a) ker_in_im = ker_in_im && in_span(im_b, v);
  r.holds = r.products_vanish && im_in_ker && ker_in_im && r.dim_ker_A == r.rank_B;
  return r;
}

RatVec descend_invariant(const CyclicRep& rep, const std::vector<RatVec>& span, const RatVec& s) {
  const std::size_t d = rep.dim();
  if (s.size() != d) throw InputError("vector s has the wrong dimension");
  for (const RatVec& v : span)
    if (v.size() != d) throw InputError("spanning vector has the wrong dimension");
  for (const RatVec& v : span)
    if (!in_span(span, rep.gen().apply(v)))
      throw InputError("V is not stable under the generator: g " + to_string(v) + " not in V");
  const RatMat B = operator_B(rep);
  const RatVec bs = B.apply(s);
  if (!in_span(span, bs)) throw InputError("B s = " + to_string(bs) + " does not lie in V");
  if (span.empty()) return s;  // then B s = 0 already

  // k = sum lambda_i v_i with B k = B s.
  const RatMat vmat = RatMat::from_columns(d, span);
  const auto lambda = solve_rational(B * vmat, bs);
  if (!lambda) throw InvariantViolation("no k in V with B k = B s although ker A = im B");
  const RatVec k = vmat.apply(*lambda);
  RatVec t(d);
  for (std::size_t i = 0; i < d; ++i) t[i] = s[i] - k[i];
  return t;
}

namespace {

// Integer polynomials as coefficient vectors, constant term first.
using Poly = std::vector<Int>;

Poly divide_exact(Poly num, const Poly& den) {
  Poly q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = num[i + den.size() - 1] / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
  }
  return q;
}

Poly cyclotomic(int d) {
  Poly p(d + 1);
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = divide_exact(p, cyclotomic(e));
  return p;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

RatMat cyclotomic_block(int d) {
  const Poly p = cyclotomic(d);
  const std::size_t k = p.size() - 1;
  RatMat c(k, k);
  for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -p[i];
  return c;
}

RatMat regular_rep(int n) {
  RatMat p(n, n);
  for (int i = 0; i < n; ++i) p((i + 1) % n, i) = 1;
  return p;
}

CyclicRep random_cyclic_rep(std::mt19937_64& rng, int max_order, std::size_t max_dim) {
  std::uniform_int_distribution<int> order_dist(1, max_order);
  const int n = order_dist(rng);
  const std::vector<int> divs = divisors(n);
  std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
  const std::size_t target = dim_dist(rng);

  std::vector<RatMat> blocks;
  std::size_t dim = 0;
  std::uniform_int_distribution<std::size_t> pick(0, divs.size() - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int attempts = 0; dim < target && attempts < 64; ++attempts) {
    const int d = divs[pick(rng)];
    RatMat block = kind(rng) == 0 ? regular_rep(d) : cyclotomic_block(d);
    // A power of the block coprime to d keeps its order while varying the character.
    std::uniform_int_distribution<int> exp_dist(1, d);
    int e = exp_dist(rng);
    while (std::gcd(e, d) != 1) e = exp_dist(rng);
    block = block.pow(static_cast<unsigned>(e));
    if (dim + block.rows() > max_dim) continue;
    dim += block.rows();
    blocks.push_back(std::move(block));
  }
  if (blocks.empty()) blocks.push_back(RatMat::identity(1));
  const RatMat diag = block_diagonal(blocks);
  const std::size_t m = diag.rows();

  // Conjugate by a product of elementary matrices (unimodular, so exactly invertible).
  RatMat P = RatMat::identity(m);
  RatMat P_inv = RatMat::identity(m);
  if (m > 1) {
    std::uniform_int_distribution<std::size_t> idx(0, m - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (std::size_t step = 0; step < 2 * m; ++step) {
      const std::size_t i = idx(rng), j = idx(rng);
      const int c = coeff(rng);
      if (i == j || c == 0) continue;
      RatMat e = RatMat::identity(m), e_inv = RatMat::identity(m);
      e(i, j) = c;
      e_inv(i, j) = -c;
      P = P * e;
      P_inv = e_inv * P_inv;
    }
  }
  return CyclicRep(n, P * diag * P_inv);
}

}  // namespace fmq
