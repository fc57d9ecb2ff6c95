// Acceptance harness: one PASS/FAIL line per criterion. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fmq/batch.hpp"
#include "fmq/catalog.hpp"
#include "fmq/descent.hpp"
#include "fmq/isometry.hpp"

using namespace fmq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

const Catalog& cat() { return builtin_catalog(); }

const int kOrders[] = {2, 3, 4, 6};

const char* const kCovers[] = {"bielliptic_cover_2", "bielliptic_cover_3", "bielliptic_cover_4",
                               "bielliptic_cover_6", "enriques_cover"};

ChernCharacter basis_class(const NumericalSurface& S, std::size_t i) {
  RatVec v(S.ext_dim());
  v[i] = 1;
  return from_coords(S, v);
}

Outcome criterion1() {
  const NumericalSurface& S = cat().surface("abelian_ppav");
  const ChernCharacter e = cat().vector("v_4_2l_1_ppav").ch;
  const Int chi = euler_pairing(S, e, e);
  const Int dim = moduli_dim_expectation(S, e);
  return {chi == 0 && dim == 2 && S.num().square({Int(1)}) == 2,
          "chi(e,e) = " + chi.get_str() + ", moduli dim = " + dim.get_str()};
}

Outcome criterion2() {
  Outcome o;
  const ChernCharacter e = cat().vector("v_4_2l_1").ch;
  for (int n : kOrders) {
    const CoverTransfer& t = cat().cover("bielliptic_cover_" + std::to_string(n));
    const GcdCertificate c = freeness_gcd(t, e);
    const Int rank = pushforward_ch(t, e).r;
    o.pass = o.pass && c.gcd == 1 && c.free && rank == 4 * n;
    o.detail += "n=" + std::to_string(n) + ": gcd " + c.gcd.get_str() + ", rank " + rank.get_str() + "; ";
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  const ChernCharacter e = cat().vector("poincare").ch;
  for (int n : kOrders) {
    const GcdCertificate c = freeness_gcd(cat().cover("bielliptic_cover_" + std::to_string(n)), e);
    std::string values = "{";
    std::vector<Int> got;
    for (const auto& [label, v] : c.values) {
      values += (got.empty() ? "" : ",") + v.get_str();
      got.push_back(v);
    }
    values += "}";
    const bool expected = got == std::vector<Int>{Int(0), Int(0), Int(0), Int(n)};
    o.pass = o.pass && expected && c.gcd != 1 && mpz_divisible_ui_p(c.gcd.get_mpz_t(), n);
    o.detail += "n=" + std::to_string(n) + ": " + values + " gcd " + c.gcd.get_str() + "; ";
  }
  return o;
}

Outcome criterion4() {
  const CoverTransfer& t = cat().cover("enriques_cover");
  const NumericalSurface& X = t.base();
  const std::size_t k = X.num_rank();
  // 0 -> Phi(O_x) -> O + omega -> O_x -> 0, with omega numerically trivial.
  const ChernCharacter O = ChernCharacter::structure_sheaf(k);
  const ChernCharacter phi = O + O - ChernCharacter::point(k);
  const Int chi = euler_pairing(X, O, phi);
  const Int chi_cover = t.cover().chi_o();
  const bool pass = phi.r == 2 && chi == 2 * X.chi_o() - 1 && chi == 1 && chi_cover == 2 &&
                    chi_cover == t.degree() * X.chi_o();
  return {pass, "class " + to_string(phi) + ", chi(O, .) = " + chi.get_str() + ", chi(O_K3) = " +
                    chi_cover.get_str() + " = " + std::to_string(t.degree()) + " * " + X.chi_o().get_str()};
}

Outcome criterion5() {
  Outcome o;
  std::size_t checked = 0;
  for (const char* id : kCovers) {
    const CoverTransfer& t = cat().cover(id);
    for (std::size_t i = 0; i < t.base().ext_dim(); ++i)
      for (std::size_t j = 0; j < t.cover().ext_dim(); ++j) {
        const AdjunctionCheck a = chi_adjunction_check(t, basis_class(t.base(), i), basis_class(t.cover(), j));
        ++checked;
        if (!a.equal) {
          o.pass = false;
          o.detail += std::string(id) + " pair (" + std::to_string(i) + "," + std::to_string(j) + ") differs; ";
        }
      }
  }
  o.detail += std::to_string(checked) + " basis pairs over 5 covers";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const char* id : kCovers) {
    const ValidationReport r = validate_cover(cat().cover(id));
    std::size_t passed = 0;
    for (const CheckResult& c : r.checks) passed += c.pass;
    o.pass = o.pass && r.checks.size() == 5 && passed == 5;
    o.detail += std::string(id) + " " + std::to_string(passed) + "/5; ";
  }
  return o;
}

Outcome criterion7() {
  AveragingTrialConfig config;
  config.trials = 200;
  config.seed = 20260101;
  config.max_order = 12;
  config.max_dim = 20;
  const auto trials = run_averaging_trials(config);
  std::size_t failures = 0;
  int max_order = 0;
  std::size_t max_dim = 0;
  for (const AveragingTrial& t : trials) {
    failures += !(t.report.holds && t.report.products_vanish);
    max_order = std::max(max_order, t.order);
    max_dim = std::max(max_dim, t.dim);
  }
  return {trials.size() >= 200 && failures == 0 && max_order <= 12 && max_dim <= 20,
          std::to_string(trials.size()) + " trials, " + std::to_string(failures) + " failures, max order " +
              std::to_string(max_order) + ", max dim " + std::to_string(max_dim)};
}

// Generators of the isometry group used for random words on a base lattice.
std::vector<RatMat> isometry_generators(const NumericalSurface& S) {
  const std::size_t k = S.num_rank();
  const std::size_t n = S.ext_dim();
  std::vector<RatMat> gens;
  // Tensoring by +-e_j: (r, c, ch2) -> (r, c + rL, ch2 + c.L + r L^2 / 2).
  for (std::size_t j = 0; j < k; ++j)
    for (int sign : {1, -1}) {
      RatMat t = RatMat::identity(n);
      IntVec L(k);
      L[j] = sign;
      const IntVec QL = S.num().gram().apply(L);
      for (std::size_t i = 0; i < k; ++i) {
        t(1 + i, 0) = L[i];
        t(n - 1, 1 + i) = QL[i];
      }
      t(n - 1, 0) = make_rat(S.num().square(L), 2);
      gens.push_back(t);
    }
  RatMat neg_num = RatMat::identity(n);
  for (std::size_t i = 0; i < k; ++i) neg_num(1 + i, 1 + i) = -1;
  gens.push_back(neg_num);
  gens.push_back(Rat(-1) * RatMat::identity(n));
  // On a hyperbolic plane the extended lattice is 2x2 matrices under 2 det;
  // left multiplication by elementary matrices mixes rank and ch2.
  if (S.num().gram() == IntMat{{0, 1}, {1, 0}}) {
    // A = [[r, c1], [c2, ch2]] -> [[1, s], [0, 1]] A.
    for (int s : {1, -1}) gens.push_back(RatMat{{1, 0, s, 0}, {0, 1, 0, s}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    gens.push_back(RatMat{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  }
  return gens;
}

std::vector<RatMat> random_isometries(const NumericalSurface& S, std::mt19937_64& rng, std::size_t count) {
  const auto gens = isometry_generators(S);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> length(1, 6);
  std::vector<RatMat> out;
  while (out.size() < count) {
    RatMat m = RatMat::identity(S.ext_dim());
    for (int i = length(rng); i > 0; --i) m = gens[pick(rng)] * m;
    if (!preserves_pairing(S, S, m) || !is_integral(m))
      throw InvariantViolation("generator word is not an integral isometry");
    out.push_back(m);
  }
  return out;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(808);
  std::size_t tested = 0, with_lift = 0, lifts_total = 0;
  for (const char* y : kCovers)
    for (const char* x : kCovers) {
      const CoverTransfer& tY = cat().cover(y);
      const CoverTransfer& tX = cat().cover(x);
      if (tY.degree() != tX.degree() || !(tY.base() == tX.base())) continue;
      const GActionLattice action = GActionLattice::trivial(tX.cover(), tX.degree());
      for (const RatMat& m : random_isometries(tY.base(), rng, 24)) {
        ++tested;
        const LatticeIsometry phi(tY.base(), tX.base(), m);
        const LiftResult r = lift_isometry(phi, tY, tX);
        with_lift += !r.lifts.empty();
        lifts_total += r.lifts.size();
        for (const LatticeIsometry& l : r.lifts) {
          const DescentOutcome back = descend_isometry(l, tY, tX);
          if (!back.map || !(back.map->mat() == m)) {
            o.pass = false;
            o.detail += std::string(y) + ": lift does not descend back; ";
          }
        }
        for (std::size_t i = 1; i < r.lifts.size(); ++i) {
          bool related = false;
          for (int k = 0; k < action.order() && !related; ++k)
            related = action.power(k) * r.lifts[0].mat() == r.lifts[i].mat();
          if (!related) {
            o.pass = false;
            o.detail += std::string(y) + ": two lifts not related by the group; ";
          }
        }
      }
    }
  o.pass = o.pass && tested >= 5 * 20;
  o.detail += std::to_string(tested) + " isometries over 5 cover pairs, " + std::to_string(with_lift) +
              " liftable, " + std::to_string(lifts_total) + " lifts checked";
  return o;
}

Outcome criterion9() {
  const CoverTransfer& t = cat().cover("bielliptic_cover_2");
  const NumericalSurface& Y = t.cover();
  const RatMat swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  const DescentOutcome d = descend_isometry(LatticeIsometry(Y, Y, swap), t, t);
  return {!d.map && d.witness == "phi(2e1) = e2", "witness: " + d.witness + " (e1 = a, e2 = b)"};
}

Outcome criterion10() {
  Outcome o;
  const int orders[] = {1, 2, 3, 4, 6};
  std::size_t cells = 0;
  for (int a : orders)
    for (int b : orders) {
      const NumericalSurface x("x", BilinearForm(IntMat{{0, 1}, {1, 0}}), 0, a);
      const NumericalSurface y("y", BilinearForm(IntMat{{0, 1}, {1, 0}}), 0, b);
      ++cells;
      if (check_order_compatibility(x, y) != (a == b)) {
        o.pass = false;
        o.detail += "(" + std::to_string(a) + "," + std::to_string(b) + ") wrong; ";
      }
    }
  o.detail += std::to_string(cells) + " cells, accepted exactly on the diagonal";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"abelian (4,2l,1): chi(e,e) = 0 and moduli dim 2", criterion1},
      {"bielliptic (4,2l,1): gcd 1 and pushforward rank 4n", criterion2},
      {"bielliptic (1,0,0): certificate {0,0,0,n}, n | gcd != 1", criterion3},
      {"enriques Phi(O_x): rank 2, chi(O, .) = 1, chi(O_K3) = 2 chi(O)", criterion4},
      {"adjunction on all basis pairs of every cover", criterion5},
      {"every cover passes the five transfer axioms", criterion6},
      {"averaging: ker A = im B and AB = BA = 0 on 200 random reps", criterion7},
      {"transport round trip on random base isometries", criterion8},
      {"swap of f1, f2 does not descend over bielliptic_cover_2", criterion9},
      {"order compatibility over {1,2,3,4,6}^2", criterion10},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first
              << " [tolerance: exact] " << o.detail << '\n';
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), seconds);
  return failed == 0 ? 0 : 1;
}
