#include "fmq/descent.hpp"

#include <string>

#include "fmq/linalg.hpp"

namespace fmq {

std::vector<LabeledClass> generator_set(const NumericalSurface& S) {
  const std::size_t k = S.num_rank();
  std::vector<LabeledClass> out;
  out.push_back({"O", ChernCharacter::structure_sheaf(k)});
  for (std::size_t j = 0; j < k; ++j) {
    ChernCharacter d = ChernCharacter::zero(k);
    d.c[j] = 1;
    out.push_back({"e" + std::to_string(j + 1), std::move(d)});
  }
  out.push_back({"pt", ChernCharacter::point(k)});
  return out;
}

GcdCertificate freeness_gcd_over(const CoverTransfer& t, const ChernCharacter& e,
                                 const std::vector<LabeledClass>& classes) {
  const ExtendedVector pushed = pushforward_ch(t, e);
  GcdCertificate cert;
  cert.gcd = 0;
  for (const auto& [label, f] : classes) {
    Int v = euler_pairing(t.base(), f, pushed);
    cert.gcd = gcd(cert.gcd, v);
    cert.values.emplace_back(label, std::move(v));
  }
  cert.free = cert.gcd == 1;
  return cert;
}

GcdCertificate freeness_gcd(const CoverTransfer& t, const ChernCharacter& e) {
  return freeness_gcd_over(t, e, generator_set(t.base()));
}

ExtendedVector orbit_sum(const GActionLattice& action, const ExtendedVector& e, int m) {
  if (m < 1 || action.order() % m != 0)
    throw InputError("orbit length " + std::to_string(m) + " does not divide the action order " +
                     std::to_string(action.order()));
  const NumericalSurface& S = action.surface();
  require_on(S, e);
  RatVec acc(S.ext_dim());
  RatVec term = to_coords(e);
  for (int i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += term[j];
    term = action.gen().apply(term);
  }
  return from_coords(S, acc);
}

ObstructionResult divisibility_obstruction(const CoverTransfer& t, const ChernCharacter& e, int m,
                                           const std::optional<GActionLattice>& action) {
  const int n = t.degree();
  if (m < 1 || n % m != 0)
    throw InputError("m = " + std::to_string(m) + " does not divide the degree " +
                     std::to_string(n));
  const GActionLattice g = action ? *action : GActionLattice::trivial(t.cover(), n);
  if (!(g.surface() == t.cover()))
    throw InputError("action " + g.name() + " does not act on " + t.cover().name());

  ObstructionResult out;
  out.divisor = n / m;
  out.certificate = freeness_gcd(t, e);

  const ExtendedVector sum = orbit_sum(g, e, m);
  const auto a = solve_rational(t.pull_ext(), to_coords(sum));
  if (!a) {
    out.reason = "orbit sum " + to_string(sum) + " is not in the image of p^*";
    return out;
  }
  bool integral_hn = true;
  for (std::size_t i = 0; i + 1 < a->size(); ++i) integral_hn = integral_hn && is_integer((*a)[i]);
  if (!integral_hn) {
    out.reason = "orbit sum " + to_string(sum) + " = p^*" + to_string(*a) +
                 " with non-integral rank or divisor part";
    return out;
  }
  ChernCharacter descended = from_coords(t.base(), *a);
  if (!is_integral_class(t.base(), descended)) {
    out.reason = "orbit sum " + to_string(sum) + " = p^*" + to_string(descended) +
                 ", which is not an integral class on " + t.base().name();
    return out;
  }
  out.applicable = true;
  out.descended = std::move(descended);
  out.all_divisible = true;
  for (const auto& [label, v] : out.certificate.values)
    if (!mpz_divisible_p(v.get_mpz_t(), out.divisor.get_mpz_t())) out.all_divisible = false;
  return out;
}

}  // namespace fmq
