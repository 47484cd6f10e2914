#include "doctest.h"

#include <algorithm>
#include <set>

#include "dp3/scroll.hpp"
#include "testutil.hpp"

using namespace dp3;

namespace {

std::vector<std::string> section_strings(const WeightMatrix& mat, const DivClass& cls) {
  std::vector<std::string> out;
  for (const auto& m : sections(mat, cls)) out.push_back(monomial_str(m, mat.names));
  return out;
}

std::multiset<DivClass> column_multiset(const WeightMatrix& m) {
  return {m.cols.begin(), m.cols.end()};
}

}  // namespace

TEST_CASE("standard scroll weight matrices") {
  WeightMatrix f = weight_matrix(StandardScroll{1, {0, 1, 2, 2}});
  CHECK(f.lambda_row() == std::vector<Int>{1, 1, 0, -1, -2, -2});
  CHECK(f.mu_row() == std::vector<Int>{0, 0, 1, 1, 1, 1});
  CHECK(f.names == std::vector<std::string>{"u", "v", "x", "y", "z", "t"});

  WeightMatrix g = weight_matrix(StandardScroll{2, {1, 1, 0}});
  CHECK(g.lambda_row() == std::vector<Int>{1, 1, 1, -1, -1, 0});
  CHECK(g.mu_row() == std::vector<Int>{0, 0, 0, 1, 1, 1});

  // A P^0 bundle has too few coordinates to be a quotient of this kind.
  CHECK_THROWS(weight_matrix(StandardScroll{1, {0}}));
  CHECK_THROWS(weight_matrix(StandardScroll{1, {0, -1, 2, 2}}));
  CHECK_THROWS(weight_matrix(StandardScroll{3, {0, 1, 2, 2}}));
}

TEST_CASE("weight matrix validation") {
  CHECK_THROWS(WeightMatrix::from_rows({1, 1, 1, 1}, {0, 0, 0, 0}));   // rank 1
  CHECK_THROWS(WeightMatrix::from_rows({1, 1, 0, 0}, {0, 0, 1, 0}));   // zero column
  CHECK_THROWS(WeightMatrix::from_rows({1, -1, 0, 0}, {0, 0, 1, 1}));  // opposite rays
  CHECK_NOTHROW(WeightMatrix::from_rows({1, 1, 0, -1}, {0, 0, 1, 1}));
}

TEST_CASE("sections of M on F(0,1,2,2)") {
  WeightMatrix f = weight_matrix(StandardScroll{1, {0, 1, 2, 2}});
  CHECK(section_strings(f, DivClass{1, 0}) ==
        std::vector<std::string>{"x", "u*y", "v*y", "u^2*z", "u*v*z", "v^2*z", "u^2*t", "u*v*t",
                                 "v^2*t"});
}

TEST_CASE("sections of the zero class and of big classes") {
  WeightMatrix f = weight_matrix(StandardScroll{1, {0, 1, 2, 2}});
  auto triv = sections(f, DivClass{0, 0});
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].total_degree() == 0);
  CHECK(monomial_str(triv[0], f.names) == "1");

  // Class 3M-2L: grouped by fibre monomial the coefficient dimensions are
  // 3x1 + 3x2 + 5x3 + 3x4 + 4x5.
  CHECK(section_count(f, DivClass{3, -2}) == 56);
  // A class outside the column cone has no sections at all.
  CHECK(section_count(f, DivClass{-1, 0}) == 0);
  CHECK(section_count(f, DivClass{0, -3}) == 0);
}

TEST_CASE("chamber walk of F(0,1,2,2)") {
  auto dec = chamber_decomposition(weight_matrix(StandardScroll{1, {0, 1, 2, 2}}));
  REQUIRE(dec.rays.size() == 4);
  CHECK(dec.rays[0] == DivClass{0, 1});    // L
  CHECK(dec.rays[1] == DivClass{1, 0});    // M
  CHECK(dec.rays[2] == DivClass{1, -1});   // M-L
  CHECK(dec.rays[3] == DivClass{1, -2});   // M-2L
  REQUIRE(dec.chambers.size() == 3);
  CHECK(dec.chambers[0].lo == DivClass{0, 1});
  CHECK(dec.chambers[0].hi == DivClass{1, 0});
  CHECK(dec.chambers[2].lo == DivClass{1, -1});
  CHECK(dec.chambers[2].hi == DivClass{1, -2});
  CHECK(dec.mobile_edge == DivClass{1, -2});
  CHECK(dec.terminal_ray == DivClass{1, -2});
  CHECK(dec.interior_walls() == std::vector<DivClass>{DivClass{1, 0}, DivClass{1, -1}});
  // Semistable blocks of the first chamber.
  CHECK(dec.chambers[0].left_block == std::vector<int>{0, 1});
  CHECK(dec.chambers[0].right_block == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("chamber walk of F(1,1,0) over P2 and of a product") {
  auto dec = chamber_decomposition(weight_matrix(StandardScroll{2, {1, 1, 0}}));
  REQUIRE(dec.chambers.size() == 2);
  CHECK(dec.chambers[0].lo == DivClass{0, 1});
  CHECK(dec.chambers[0].hi == DivClass{1, 0});
  CHECK(dec.chambers[1].hi == DivClass{1, -1});
  CHECK(dec.terminal_ray == DivClass{1, -1});

  auto prod = chamber_decomposition(weight_matrix(StandardScroll{1, {0, 0, 0, 0}}));
  CHECK(prod.single_chamber());
  CHECK(prod.interior_walls().empty());
  CHECK(prod.mobile_edge == DivClass{1, 0});
}

TEST_CASE("row operations") {
  WeightMatrix m = WeightMatrix::from_rows({0, 0, 1, 1, 1, 1}, {1, 1, 0, -1, -2, -2});
  WeightMatrix out = apply(BasisChange{-1, -1, 2, 1}, m);
  CHECK(out.lambda_row() == std::vector<Int>{-1, -1, -1, 0, 1, 1});
  CHECK(out.mu_row() == std::vector<Int>{1, 1, 2, 1, 0, 0});

  CHECK(apply(BasisChange{}, m) == m);
  CHECK_THROWS(apply(BasisChange{1, 0, 0, 2}, m));

  // Reparametrising the torus of F(1,1,0)/P2 by (lambda^-1, 1), (mu, mu)
  // turns it into F(0,1,1,1)/P1 and sends 2M+L to 3M'-L'.
  WeightMatrix f110 = weight_matrix(StandardScroll{2, {1, 1, 0}});
  BasisChange t{-1, 0, 1, 1};
  CHECK(apply(t, DivClass{2, 1}) == DivClass{3, -1});
  WeightMatrix moved = apply(t, f110);
  WeightMatrix f0111 = weight_matrix(StandardScroll{1, {0, 1, 1, 1}});
  CHECK(column_multiset(moved) == column_multiset(f0111));
  // The identification of section spaces across the wall crossing.
  CHECK(section_count(f110, DivClass{2, 1}) == 45);
  CHECK(section_count(f0111, DivClass{3, -1}) == 45);
}

TEST_CASE("extending a scroll by unprojection classes") {
  WeightMatrix f = weight_matrix(StandardScroll{1, {0, 1, 1, 2}});
  WeightMatrix f5 = extend(f, DivClass{3, -3}, "xi");
  WeightMatrix f6 = extend(f5, DivClass{5, -6}, "eta");
  CHECK(f6.display_rows() ==
        std::vector<std::vector<Int>>{{0, 0, 1, 1, 1, 3, 5, 1}, {1, 1, 0, -1, -1, -3, -6, -2}});
  CHECK(f6.names == std::vector<std::string>{"u", "v", "x", "y", "z", "xi", "eta", "t"});

  WeightMatrix f5b = extend(f, DivClass{3, -4}, "eta");
  CHECK(f5b.display_rows() ==
        std::vector<std::vector<Int>>{{0, 0, 1, 1, 1, 3, 1}, {1, 1, 0, -1, -1, -4, -2}});

  // Duplicating an existing ray is fine.
  WeightMatrix dup = extend(f, DivClass{1, 0}, "x2");
  CHECK(dup.ncols() == f.ncols() + 1);

  // Extending on the base side or past a half-plane is not.
  CHECK_THROWS(extend(f, DivClass{-1, 0}, "bad"));
  CHECK_THROWS(extend(f, DivClass{0, -1}, "bad"));
}

TEST_CASE("property: section counts match the closed form") {
  int nontrivial = 0;
  for (int iter = 0; iter < 60; ++iter) {
    StandardScroll s = testutil::random_scroll();
    WeightMatrix mat = weight_matrix(s);
    DivClass cls{testutil::rand_int(0, 4), testutil::rand_int(-8, 8)};
    Int expect = testutil::closed_form_section_count(s, cls);
    CHECK(section_count(mat, cls) == expect);
    if (expect > 0) ++nontrivial;
  }
  CHECK(nontrivial >= 25);
}

TEST_CASE("property: basis changes preserve section monomials") {
  for (int iter = 0; iter < 40; ++iter) {
    StandardScroll s = testutil::random_scroll();
    WeightMatrix mat = weight_matrix(s);
    BasisChange t = testutil::random_unimodular();
    DivClass cls{testutil::rand_int(0, 3), testutil::rand_int(-6, 6)};
    auto before = sections(mat, cls);
    auto after = sections(apply(t, mat), apply(t, cls));
    CHECK(before.size() == after.size());
    CHECK(std::equal(before.begin(), before.end(), after.begin(),
                     [](const Monomial& a, const Monomial& b) { return a.e == b.e; }));
  }
}

TEST_CASE("property: the chamber walk is a strict total order") {
  for (int iter = 0; iter < 40; ++iter) {
    StandardScroll s = testutil::random_scroll();
    WeightMatrix mat = weight_matrix(s);
    if (testutil::rand_int(0, 1)) {
      // Toss in an extension with a slope between M and the terminal ray.
      Int am = testutil::rand_int(1, 3);
      Int al = -testutil::rand_int(0, 4 * am);
      try {
        mat = extend(mat, DivClass{am, al}, "ext");
      } catch (const std::invalid_argument&) {
      }
    }
    auto dec = chamber_decomposition(mat);
    for (size_t i = 0; i + 1 < dec.rays.size(); ++i)
      CHECK(walk_compare(dec.rays[i], dec.rays[i + 1]) < 0);
    for (size_t i = 0; i + 1 < dec.chambers.size(); ++i)
      CHECK(dec.chambers[i].hi == dec.chambers[i + 1].lo);
  }
}

TEST_CASE("property: one chamber per strict twist jump plus the leading one") {
  for (int iter = 0; iter < 40; ++iter) {
    StandardScroll s = testutil::random_scroll();  // twists already sorted
    auto dec = chamber_decomposition(weight_matrix(s));
    size_t jumps = 0;
    for (size_t i = 1; i + 1 < s.twists.size(); ++i)
      if (s.twists[i - 1] < s.twists[i]) ++jumps;
    CHECK(dec.chambers.size() == jumps + 1);
  }
}
