#include <doctest.h>

#include "fmq/catalog.hpp"
#include "fmq/errors.hpp"
#include "support.hpp"

using namespace fmq;

namespace {

std::string error_of(std::string_view text, const LoadOptions& options = {}) {
  try {
    load_definitions(text, options);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

constexpr const char* kBadDegree = R"(
surface base3 {
  rank 2
  intersection [0,1;1,0]
  chi_o 0
  canonical_order 3
}
surface top {
  rank 2
  intersection [0,1;1,0]
  chi_o 0
  canonical_order 1
}
cover wrong {
  base base3
  cover top
  degree 2
  pull [1,0;0,2]
  push [2,0;0,1]
}
)";

}  // namespace

TEST_CASE("builtin catalog counts") {
  const Catalog& c = builtin_catalog();
  CHECK(c.count(EntryKind::surface) == 8);
  CHECK(c.count(EntryKind::cover) == 5);
  CHECK(c.count(EntryKind::vector) == 6);
  CHECK(c.count(EntryKind::action) == 2);
  CHECK(c.entries().size() == 21);
  CHECK(load_definitions(builtin_catalog_text()).size() == 21);
}

TEST_CASE("builtin catalog values") {
  const Catalog& c = builtin_catalog();
  CHECK(c.surface("abelian_ppav").chi_o() == 0);
  CHECK(c.surface("product_elliptic").chi_o() == 0);
  CHECK(c.surface("k3_toy").chi_o() == 2);
  CHECK(c.surface("enriques_toy").chi_o() == 1);
  CHECK(c.surface("enriques_toy").canonical_order() == 2);
  for (int n : {2, 3, 4, 6}) {
    const NumericalSurface& s = c.surface("bielliptic_" + std::to_string(n));
    CHECK(s.chi_o() == 0);
    CHECK(s.canonical_order() == n);
    CHECK(s.num_rank() == 2);
  }
  CHECK(c.vector("v_4_2l_1").ch == test::ch(4, {2, 2}, 1));
  CHECK(c.vector("ideal_point").ch == test::ch(1, {0}, -1));
  CHECK(c.vector("ideal_point").surface == "k3_toy");
  CHECK(c.action("swap").order() == 2);
  for (const CatalogEntry& e : c.entries()) {
    if (e.kind != EntryKind::cover) continue;
    const CoverTransfer& t = std::get<CoverTransfer>(e.payload);
    CHECK(validate_cover(t).ok());
    CHECK(t.cover().chi_o() == t.degree() * t.base().chi_o());
  }
}

TEST_CASE("lookups report unknown ids and wrong kinds") {
  const Catalog& c = builtin_catalog();
  CHECK(c.contains("swap"));
  CHECK(c.find("nope") == nullptr);
  CHECK_THROWS_WITH_AS(c.surface("nope"), "unknown surface 'nope'", InputError);
  CHECK_THROWS_AS(c.cover("abelian_ppav"), InputError);
}

TEST_CASE("empty and comment-only input") {
  CHECK(load_definitions("").empty());
  CHECK(load_definitions("# nothing here\n\n   # still nothing\n").empty());
}

TEST_CASE("degree mismatch names the degree axiom") {
  const std::string err = error_of(kBadDegree);
  CHECK(err.find("cover wrong") != std::string::npos);
  CHECK(err.find("degree axiom") != std::string::npos);
  CHECK(err.find("line 14, column 1") != std::string::npos);
  CHECK(load_definitions(kBadDegree, LoadOptions{true}).size() == 3);
}

TEST_CASE("parse errors carry line and column") {
  CHECK(error_of("surface s {\n  rank 1\n  intersection [2]\n  chi_o 0\n  canonical_order 1\n  colour 3\n}\n") ==
        "line 6, column 3: unknown field 'colour' in surface block");
  CHECK(error_of("surface s {\n  rank 1\n  intersection [2]\n  chi_o 0\n}\n") ==
        "line 1, column 1: surface s: missing field 'canonical_order'");
  CHECK(error_of("widget w {\n}\n") == "line 1, column 1: unknown block kind 'widget'");
  CHECK(error_of("surface s {\n  rank 1\n  intersection [2\n") .find("line 4") != std::string::npos);
  CHECK(error_of("surface s {\n  rank 1 @\n}\n") == "line 2, column 10: unexpected character '@'");
  CHECK(error_of("vector v {\n  on ghost\n  r 1\n  ch2 0\n}\n") == "line 2, column 6: unknown surface 'ghost'");
  CHECK(error_of("surface s {\n  rank 2\n  intersection [2]\n  chi_o 0\n  canonical_order 1\n}\n") ==
        "line 1, column 1: surface s: intersection matrix is 1x1 but rank is 2");
  CHECK(error_of("surface s {\n  rank 1\n  intersection [1]\n  chi_o 0\n  canonical_order 1\n}\n")
            .find("even") != std::string::npos);
}

TEST_CASE("duplicate ids are rejected and loads are transactional") {
  Catalog c;
  c.load("surface a {\n rank 1\n intersection [2]\n chi_o 0\n canonical_order 1\n}\n");
  CHECK_THROWS_AS(c.load("surface b {\n rank 1\n intersection [2]\n chi_o 0\n canonical_order 1\n}\n"
                         "surface a {\n rank 1\n intersection [4]\n chi_o 0\n canonical_order 1\n}\n"),
                  ParseError);
  CHECK_FALSE(c.contains("b"));
  CHECK(c.count(EntryKind::surface) == 1);

  // Later loads may reference earlier ids.
  const auto added = c.load("vector pt_a {\n on a\n r 0\n c 0\n ch2 1\n}\n");
  REQUIRE(added.size() == 1);
  CHECK(c.vector("pt_a").surface == "a");
}

TEST_CASE("vectors must be integral classes") {
  const std::string err = error_of(
      "surface a {\n rank 1\n intersection [2]\n chi_o 0\n canonical_order 1\n}\n"
      "vector half {\n on a\n r 1\n c 0\n ch2 1/2\n}\n");
  CHECK(err.find("vector half") != std::string::npos);
}

TEST_CASE("actions are checked") {
  const std::string base = "surface a {\n rank 1\n intersection [2]\n chi_o 0\n canonical_order 1\n}\n";
  CHECK(load_definitions(base + "action neg {\n on a\n order 2\n gen [1,0,0;0,-1,0;0,0,1]\n}\n").size() == 2);
  CHECK_FALSE(error_of(base + "action bad {\n on a\n order 2\n gen [1,0,0;0,2,0;0,0,1]\n}\n").empty());
}

TEST_CASE("matrix literals") {
  CHECK(parse_matrix("[1,0;0,2]") == RatMat{{1, 0}, {0, 2}});
  CHECK(parse_matrix("[ 1/2 , -3 ]") == RatMat{{make_rat(1, 2), Rat(-3)}});
  CHECK(parse_matrix("[1,2;\n 3,4]") == RatMat{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(parse_matrix("[1,2;3]"), InputError);
  CHECK_THROWS_AS(parse_matrix("1,2"), InputError);
  CHECK_THROWS_AS(parse_matrix("[1,2] x"), InputError);
}
