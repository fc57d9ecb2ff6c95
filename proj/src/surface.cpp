#include "fmq/surface.hpp"

#include <string>

namespace fmq {

NumericalSurface::NumericalSurface(std::string name, BilinearForm num, Int chi_o,
                                   int canonical_order)
    : name_(std::move(name)), num_(std::move(num)), chi_o_(std::move(chi_o)),
      canonical_order_(canonical_order) {
  if (canonical_order_ < 1)
    throw InputError("surface " + name_ + ": canonical_order must be positive");
  if (!num_.even())
    throw InputError("surface " + name_ +
                     ": intersection form must be even when the canonical class is "
                     "numerically trivial");
}

ChernCharacter ChernCharacter::structure_sheaf(std::size_t num_rank) {
  return {1, IntVec(num_rank), 0};
}

ChernCharacter ChernCharacter::point(std::size_t num_rank) { return {0, IntVec(num_rank), 1}; }

ChernCharacter ChernCharacter::zero(std::size_t num_rank) { return {0, IntVec(num_rank), 0}; }

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) {
  if (a.c.size() != b.c.size()) throw InputError("adding classes on different lattices");
  ChernCharacter out{a.r + b.r, a.c, a.ch2 + b.ch2};
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  return out;
}

ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) {
  return a + (Int(-1) * b);
}

ChernCharacter operator*(const Int& k, const ChernCharacter& a) {
  ChernCharacter out{k * a.r, a.c, Rat(k) * a.ch2};
  for (Int& x : out.c) x *= k;
  return out;
}

std::string to_string(const ChernCharacter& e) {
  return "(" + e.r.get_str() + "," + to_string(e.c) + "," + e.ch2.get_str() + ")";
}

std::string to_string(const MukaiVector& v) {
  return "(" + v.r.get_str() + "," + to_string(v.c) + "," + v.s.get_str() + ")";
}

void require_on(const NumericalSurface& S, const ChernCharacter& e) {
  if (e.c.size() != S.num_rank())
    throw InputError("class " + to_string(e) + " does not live on " + S.name() + " (Num rank " +
                     std::to_string(S.num_rank()) + ")");
}

bool is_integral_class(const NumericalSurface& S, const ChernCharacter& e) {
  if (e.c.size() != S.num_rank()) return false;
  const Rat twice = 2 * e.ch2 + Rat(S.num().square(e.c));
  return is_integer(twice) && mpz_even_p(twice.get_num_mpz_t());
}

void require_integral_class(const NumericalSurface& S, const ChernCharacter& e) {
  require_on(S, e);
  if (!is_integral_class(S, e))
    throw InputError("class " + to_string(e) + " on " + S.name() +
                     " violates the parity condition 2 ch2 + c.c even");
}

Int euler_pairing(const NumericalSurface& S, const ChernCharacter& e, const ChernCharacter& f) {
  require_on(S, e);
  require_on(S, f);
  const Rat chi = Rat(e.r * f.r * S.chi_o()) + Rat(e.r) * f.ch2 + Rat(f.r) * e.ch2 -
                  Rat(S.num().pair(e.c, f.c));
  if (!is_integer(chi))
    throw InvariantViolation("chi(" + to_string(e) + ", " + to_string(f) + ") = " +
                             chi.get_str() + " is not an integer on " + S.name());
  return chi.get_num();
}

MukaiVector mukai_vector(const NumericalSurface& S, const ChernCharacter& e) {
  require_on(S, e);
  return {e.r, e.c, e.ch2 + make_rat(Int(e.r * S.chi_o()), 2)};
}

ChernCharacter chern_character(const NumericalSurface& S, const MukaiVector& v) {
  if (v.c.size() != S.num_rank()) throw InputError("Mukai vector does not live on " + S.name());
  return {v.r, v.c, v.s - make_rat(Int(v.r * S.chi_o()), 2)};
}

Rat mukai_pairing(const NumericalSurface& S, const MukaiVector& v, const MukaiVector& w) {
  if (v.c.size() != S.num_rank() || w.c.size() != S.num_rank())
    throw InputError("Mukai vector does not live on " + S.name());
  return Rat(S.num().pair(v.c, w.c)) - Rat(v.r) * w.s - Rat(w.r) * v.s;
}

Int moduli_dim_expectation(const NumericalSurface& S, const ChernCharacter& e) {
  return 2 - euler_pairing(S, e, e);
}

RatVec to_coords(const ChernCharacter& e) {
  RatVec v;
  v.reserve(e.c.size() + 2);
  v.emplace_back(e.r);
  for (const Int& x : e.c) v.emplace_back(x);
  v.push_back(e.ch2);
  return v;
}

ChernCharacter from_coords(const NumericalSurface& S, const RatVec& v) {
  if (v.size() != S.ext_dim())
    throw InputError("extended vector of length " + std::to_string(v.size()) + " on " + S.name());
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!is_integer(v[i])) throw InputError("non-integral H0/Num component " + to_string(v));
  ChernCharacter e{v.front().get_num(), IntVec(S.num_rank()), v.back()};
  for (std::size_t i = 0; i < S.num_rank(); ++i) e.c[i] = v[i + 1].get_num();
  return e;
}

RatMat euler_gram(const NumericalSurface& S) {
  const std::size_t k = S.num_rank();
  RatMat g(k + 2, k + 2);
  g(0, 0) = S.chi_o();
  g(0, k + 1) = 1;
  g(k + 1, 0) = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i + 1, j + 1) = -S.num().gram()(i, j);
  return g;
}

}  // namespace fmq
