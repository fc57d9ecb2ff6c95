#pragma once

#include <string>

#include "fmq/bilinear_form.hpp"
#include "fmq/matrix.hpp"

namespace fmq {

/// Numerical model of a smooth projective surface whose canonical class is
/// numerically trivial: the divisor lattice Num modulo torsion, chi(O_X) and
/// the order n of omega_X.
///
/// The canonical class is not stored; such surfaces have K = 0 in Num, so
/// Riemann-Roch loses its c1.K term. By Wu's formula D^2 = D.K mod 2, the
/// lattice is then even, and construction rejects odd forms.
class NumericalSurface {
 public:
  NumericalSurface(std::string name, BilinearForm num, Int chi_o, int canonical_order);

  const std::string& name() const { return name_; }
  const BilinearForm& num() const { return num_; }
  const Int& chi_o() const { return chi_o_; }
  int canonical_order() const { return canonical_order_; }

  std::size_t num_rank() const { return num_.dim(); }
  /// Dimension of H0 + Num + H4.
  std::size_t ext_dim() const { return num_.dim() + 2; }

  friend bool operator==(const NumericalSurface&, const NumericalSurface&) = default;

 private:
  std::string name_;
  BilinearForm num_;
  Int chi_o_;
  int canonical_order_ = 1;
};

/// (ch0, ch1, ch2). ch2 is rational; integral classes satisfy 2 ch2 + c.c even.
struct ChernCharacter {
  Int r;
  IntVec c;
  Rat ch2;

  static ChernCharacter structure_sheaf(std::size_t num_rank);
  static ChernCharacter point(std::size_t num_rank);
  static ChernCharacter zero(std::size_t num_rank);

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;
  friend ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b);
  friend ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b);
  friend ChernCharacter operator*(const Int& k, const ChernCharacter& a);
};

/// Mukai vector v = ch * sqrt(td) = (r, c, ch2 + r chi(O)/2).
struct MukaiVector {
  Int r;
  IntVec c;
  Rat s;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
};

std::string to_string(const ChernCharacter& e);
std::string to_string(const MukaiVector& v);

/// Throws InputError when e has the wrong Num dimension for S.
void require_on(const NumericalSurface& S, const ChernCharacter& e);
/// Dimension check plus the parity condition 2 ch2 + c.c in 2Z.
bool is_integral_class(const NumericalSurface& S, const ChernCharacter& e);
void require_integral_class(const NumericalSurface& S, const ChernCharacter& e);

/// chi(E, F) = r_e r_f chi(O) + r_e ch2_f + r_f ch2_e - c_e.c_f.
/// Throws InvariantViolation if the value is not an integer.
Int euler_pairing(const NumericalSurface& S, const ChernCharacter& e, const ChernCharacter& f);

MukaiVector mukai_vector(const NumericalSurface& S, const ChernCharacter& e);
ChernCharacter chern_character(const NumericalSurface& S, const MukaiVector& v);

/// <v, w> = c_v.c_w - r_v s_w - r_w s_v, so <v(e), v(f)> = -chi(e, f).
Rat mukai_pairing(const NumericalSurface& S, const MukaiVector& v, const MukaiVector& w);

/// 2 - chi(E, E): the dimension of a moduli space of simple sheaves with this
/// Chern character.
Int moduli_dim_expectation(const NumericalSurface& S, const ChernCharacter& e);

/// Coordinates (r, c_1..c_k, ch2) on the extended lattice.
RatVec to_coords(const ChernCharacter& e);
/// Inverse of to_coords; throws InputError if r or c is not integral.
ChernCharacter from_coords(const NumericalSurface& S, const RatVec& v);

/// Gram matrix of the Euler form in Chern coordinates:
///   [[chi(O), 0, 1], [0, -Q, 0], [1, 0, 0]].
RatMat euler_gram(const NumericalSurface& S);

}  // namespace fmq
