#include <doctest.h>

#include <algorithm>

#include "fmq/descent.hpp"
#include "fmq/errors.hpp"
#include "fmq/isometry.hpp"
#include "support.hpp"

using namespace fmq;

namespace {

const CoverTransfer& bi(int n) { return test::cat().cover("bielliptic_cover_" + std::to_string(n)); }

RatMat ext_diag(std::initializer_list<long> d) {
  std::vector<Rat> v;
  for (long x : d) v.emplace_back(x);
  return RatMat::diagonal(v);
}

RatMat swap_ext() { return RatMat{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}; }

// Degree-2 cover of a rank-1 lattice <2> by <2> + <2>, with h pulling back to e1 + e2.
struct SplitCover {
  NumericalSurface base{"split_base", BilinearForm(IntMat{{2}}), 0, 2};
  NumericalSurface cover{"split_cover", BilinearForm(IntMat{{2, 0}, {0, 2}}), 0, 1};
  CoverTransfer t{"split", base, cover, 2, IntMat{{1}, {1}}, IntMat{{1, 1}}};
  GActionLattice swap{"split_swap", cover, 2, swap_ext()};
};

}  // namespace

TEST_CASE("order compatibility table") {
  auto surface = [](int n) { return NumericalSurface("s", BilinearForm(IntMat{{0, 1}, {1, 0}}), 0, n); };
  CHECK(check_order_compatibility(surface(2), surface(2)));
  CHECK_FALSE(check_order_compatibility(surface(2), surface(3)));
  CHECK(check_order_compatibility(surface(6), surface(6)));
}

TEST_CASE("lattice isometries are validated") {
  const NumericalSurface& Y = test::cat().surface("product_elliptic");
  CHECK_NOTHROW(LatticeIsometry(Y, Y, swap_ext()));
  CHECK_THROWS_AS(LatticeIsometry(Y, Y, ext_diag({1, 1, -1, 1})), InputError);
  CHECK_THROWS_AS(LatticeIsometry(Y, Y, RatMat::identity(3)), InputError);
  RatMat half = RatMat::identity(4);
  half(0, 3) = make_rat(1, 2);
  CHECK_THROWS_AS(LatticeIsometry(Y, Y, half), InputError);
  const LatticeIsometry flip(Y, Y, ext_diag({1, -1, -1, 1}));
  CHECK(flip.apply(test::ch(2, {1, 3}, 4)) == test::ch(2, {-1, -3}, 4));
}

TEST_CASE("equivariance examples") {
  const NumericalSurface& Y = test::cat().surface("product_elliptic");
  const GActionLattice& trivial = test::cat().action("trivial");
  const GActionLattice& swap = test::cat().action("swap");
  const LatticeIsometry id(Y, Y, RatMat::identity(4));

  const auto mu_trivial = check_equivariant(LatticeIsometry(Y, Y, ext_diag({1, -1, -1, 1})), trivial, trivial);
  REQUIRE(mu_trivial.has_value());
  CHECK(*mu_trivial == std::vector<int>{0, 1});

  const auto mu_swap = check_equivariant(id, swap, swap);
  REQUIRE(mu_swap.has_value());
  CHECK(*mu_swap == std::vector<int>{0, 1});

  CHECK_FALSE(check_equivariant(id, trivial, swap).has_value());
  CHECK_FALSE(check_equivariant(id, swap, trivial).has_value());

  const auto t6 = GActionLattice::trivial(Y, 6);
  const auto mu6 = check_equivariant(id, t6, t6);
  REQUIRE(mu6.has_value());
  CHECK(*mu6 == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(check_equivariant(id, t6, swap), InputError);
}

TEST_CASE("equivariance picks up a nontrivial automorphism") {
  // The extended lattice of product_elliptic is 2x2 integer matrices with the
  // form 2 det. g conjugates by an order-3 element P; phi conjugates by an
  // involution Q with Q P Q = P^-1, so g phi = phi g^2.
  const NumericalSurface& Y = test::cat().surface("product_elliptic");
  const RatMat g{{0, 0, 1, 1}, {0, 0, -1, 0}, {-1, -1, 1, 1}, {1, 0, -1, 0}};
  const RatMat q{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  const GActionLattice a("conj3", Y, 3, g);
  const auto mu = check_equivariant(LatticeIsometry(Y, Y, q), a, a);
  REQUIRE(mu.has_value());
  CHECK(*mu == std::vector<int>{0, 2, 1});
  const auto plain = check_equivariant(LatticeIsometry(Y, Y, RatMat::identity(4)), a, a);
  REQUIRE(plain.has_value());
  CHECK(*plain == std::vector<int>{0, 1, 2});
}

TEST_CASE("descent examples") {
  const NumericalSurface& Y = bi(2).cover();
  const DescentOutcome id = descend_isometry(LatticeIsometry(Y, Y, RatMat::identity(4)), bi(2), bi(2));
  REQUIRE(id.map.has_value());
  CHECK(id.map->mat() == RatMat::identity(4));

  const DescentOutcome flip = descend_isometry(LatticeIsometry(Y, Y, ext_diag({1, -1, -1, 1})), bi(2), bi(2));
  REQUIRE(flip.map.has_value());
  CHECK(flip.map->mat() == ext_diag({1, -1, -1, 1}));
  CHECK(flip.map->source() == bi(2).base());

  const DescentOutcome swap = descend_isometry(LatticeIsometry(Y, Y, swap_ext()), bi(2), bi(2));
  CHECK_FALSE(swap.map.has_value());
  CHECK(swap.witness == "phi(2e1) = e2");

  CHECK_THROWS_AS(descend_isometry(LatticeIsometry(Y, Y, RatMat::identity(4)), bi(2), bi(3)), InputError);
}

TEST_CASE("descent of the swap fails for every bielliptic degree") {
  for (int n : {3, 4, 6}) {
    const NumericalSurface& Y = bi(n).cover();
    const DescentOutcome d = descend_isometry(LatticeIsometry(Y, Y, swap_ext()), bi(n), bi(n));
    CHECK_FALSE(d.map.has_value());
    CHECK(d.witness == "phi(" + std::to_string(n) + "e1) = e2");
  }
}

TEST_CASE("lift examples") {
  const NumericalSurface& X = bi(2).base();
  const LiftResult id = lift_isometry(LatticeIsometry(X, X, RatMat::identity(4)), bi(2), bi(2));
  CHECK(id.exhaustive);
  REQUIRE(id.lifts.size() == 1);
  CHECK(id.lifts[0].mat() == RatMat::identity(4));

  const LiftResult flip = lift_isometry(LatticeIsometry(X, X, ext_diag({1, -1, -1, 1})), bi(2), bi(2));
  REQUIRE(flip.lifts.size() == 1);
  CHECK(flip.lifts[0].mat() == ext_diag({1, -1, -1, 1}));

  // Catalog G-action on the cover lattice is trivial: the orbit of a lift is a single element.
  const GActionLattice trivial = GActionLattice::trivial(bi(2).cover(), 2);
  for (const LatticeIsometry& l : id.lifts) CHECK(trivial.gen() * l.mat() == l.mat());
}

TEST_CASE("split cover: the identity lifts to the identity and the swap") {
  const SplitCover s;
  REQUIRE(validate_cover(s.t).ok());
  const LatticeIsometry id(s.base, s.base, RatMat::identity(3));
  for (bool parallel : {false, true}) {
    LiftOptions options;
    options.parallel = parallel;
    const LiftResult r = lift_isometry(id, s.t, s.t, options);
    REQUIRE(r.family.has_value());
    CHECK_FALSE(r.family->directions.empty());
    REQUIRE(r.lifts.size() == 2);
    std::vector<RatMat> mats{r.lifts[0].mat(), r.lifts[1].mat()};
    CHECK(std::count(mats.begin(), mats.end(), RatMat::identity(4)) == 1);
    CHECK(std::count(mats.begin(), mats.end(), swap_ext()) == 1);
    // Distinct lifts differ by the deck transformation.
    CHECK(s.swap.gen() * mats[0] == mats[1]);
    for (const LatticeIsometry& l : r.lifts) {
      const DescentOutcome back = descend_isometry(l, s.t, s.t);
      REQUIRE(back.map.has_value());
      CHECK(back.map->mat() == id.mat());
    }
  }
  // Here the swap descends, unlike on the bielliptic model.
  const DescentOutcome d = descend_isometry(LatticeIsometry(s.cover, s.cover, swap_ext()), s.t, s.t);
  REQUIRE(d.map.has_value());
  CHECK(d.map->mat() == RatMat::identity(3));
}

TEST_CASE("round trip: lifts descend back for sign changes on every bielliptic base") {
  for (int n : {2, 3, 4, 6}) {
    const NumericalSurface& X = bi(n).base();
    for (const RatMat& m : {RatMat::identity(4), ext_diag({1, -1, -1, 1})}) {
      const LiftResult r = lift_isometry(LatticeIsometry(X, X, m), bi(n), bi(n));
      REQUIRE_FALSE(r.lifts.empty());
      for (const LatticeIsometry& l : r.lifts) {
        const DescentOutcome back = descend_isometry(l, bi(n), bi(n));
        REQUIRE(back.map.has_value());
        CHECK(back.map->mat() == m);
      }
    }
  }
}

TEST_CASE("extended vectors format with basis labels") {
  CHECK(format_extended({Rat(0), Rat(2), Rat(0), Rat(0)}) == "2e1");
  CHECK(format_extended({Rat(1), Rat(0), Rat(-1), make_rat(1, 2)}) == "O - e2 + 1/2pt");
  CHECK(format_extended({Rat(0), Rat(0), Rat(0)}) == "0");
}
