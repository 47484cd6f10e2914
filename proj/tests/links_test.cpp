#include "doctest.h"

#include "dp3/geography.hpp"
#include "dp3/links.hpp"

using namespace dp3;

namespace {

const NonrigidRow& row(const std::string& id) {
  for (const auto& r : nonrigid_table())
    if (r.id == id) return r;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("trace of the |3M-2L| family on F(0,1,2,2)") {
  LinkTrace tr = trace_link(FamilyParams{-2, 1, 2, 2});
  CHECK(tr.anticanonical == DivClass{1, -1});
  REQUIRE(tr.steps.size() == 2);
  CHECK(tr.steps[0].wall == DivClass{1, 0});
  CHECK(tr.steps[0].kind == WallKind::antiflip);
  CHECK(tr.steps[0].k_pairing == -1);
  CHECK(tr.steps[0].before_block == std::vector<std::string>{"u", "v"});
  CHECK(tr.steps[0].after_block == std::vector<std::string>{"y", "z", "t"});
  CHECK(tr.steps[1].wall == DivClass{1, -1});
  CHECK(tr.steps[1].kind == WallKind::flop);
  CHECK(tr.terminal.ray == DivClass{1, -2});
  CHECK(tr.terminal.far_block == std::vector<std::string>{"z", "t"});
  CHECK(tr.terminal.heuristic.find("fibration over P^1") != std::string::npos);
  REQUIRE(tr.curated.size() == 1);
  CHECK(tr.curated[0].find("Francia antiflip") != std::string::npos);
}

TEST_CASE("trace of |3M-L| on F(0,1,1,1): a flop into a conic bundle") {
  LinkTrace tr = trace_link(FamilyParams{-1, 1, 1, 1});
  REQUIRE(tr.steps.size() == 1);
  CHECK(tr.steps[0].wall == DivClass{1, 0});
  CHECK(tr.steps[0].kind == WallKind::flop);
  CHECK(tr.steps[0].k_pairing == 0);
  CHECK(tr.terminal.ray == DivClass{1, -1});
  CHECK(tr.terminal.far_block.size() == 3);
  CHECK(tr.terminal.heuristic.find("fibration over P^2") != std::string::npos);
}

TEST_CASE("trace of |3M-3L| on F(0,1,3,3)") {
  LinkTrace tr = trace_link(FamilyParams{-3, 1, 3, 3});
  REQUIRE(!tr.steps.empty());
  CHECK(tr.steps[0].wall == DivClass{1, 0});
  CHECK(tr.steps[0].kind == WallKind::antiflip);
  CHECK(tr.steps[0].k_pairing == -2);
  CHECK(tr.terminal.ray == DivClass{1, -3});
  CHECK(tr.terminal.far_block.size() == 2);
}

TEST_CASE("traces are deterministic and reject inadmissible families") {
  auto a = trace_link(FamilyParams{-2, 1, 2, 2});
  auto b = trace_link(FamilyParams{-2, 1, 2, 2});
  CHECK(a.steps.size() == b.steps.size());
  CHECK(a.terminal.section_counts == b.terminal.section_counts);
  CHECK_THROWS(trace_link(FamilyParams{-4, 1, 2, 2}));
}

TEST_CASE("mobile edges") {
  CHECK(mobile_edge(weight_matrix(StandardScroll{1, {0, 1, 2, 2}})) == DivClass{1, -2});
  CHECK(mobile_edge(weight_matrix(StandardScroll{1, {0, 0, 0, 0}})) == DivClass{1, 0});
  CHECK(mobile_edge(row_scroll(row("8a"))) == DivClass{5, -6});
  CHECK(mobile_edge(row_scroll(row("8b"))) == DivClass{3, -4});
  CHECK(mobile_edge(row_scroll(row("1"))) == DivClass{3, -1});
}

TEST_CASE("curated rows carry the stated families and edge multiples") {
  const auto& rows = nonrigid_table();
  REQUIRE(rows.size() == 11);
  const auto& r4 = row("4");
  CHECK(r4.fam == FamilyParams{-2, 1, 1, 2});
  CHECK(r4.mu == 1);
  CHECK(r4.link_moves.find("(2,1)") != std::string::npos);
  CHECK(r4.other_model.find("P4(1^4,2)") != std::string::npos);

  const auto& r5 = row("5");
  REQUIRE(r5.other_model_scroll.has_value());
  CHECK(r5.other_model_scroll->display_rows() ==
        std::vector<std::vector<Int>>{{0, 0, 1, 2, 1, 1}, {1, 1, 0, -1, -1, -1}});
  CHECK(r5.other_model_class == "4M-L");

  const auto& r7 = row("7");
  REQUIRE(r7.other_model_scroll.has_value());
  CHECK(r7.other_model_scroll->display_rows() ==
        std::vector<std::vector<Int>>{{0, 0, 2, 3, 1, 1}, {1, 1, -1, -2, -1, -1}});
  CHECK(r7.other_model_class == "6M-3L");

  CHECK(row("8b").other_model_uncertain);
  CHECK(row("9").other_model_uncertain);
  CHECK(row("10").other_model_uncertain);
  CHECK(row("8a").singular_member_equation == "xy = zt");
  CHECK(row("10").singular_member_equation == "xy = z^3 + t^6");
}

TEST_CASE("edge-multiple verification passes on every row") {
  for (const auto& r : nonrigid_table()) {
    auto mu = verify_mu(r);
    CHECK(mu.ok);
    auto fw = verify_first_wall(r);
    CHECK(fw.ok);
    if (r.opening == "flop") CHECK(fw.k_gamma == 0);
    else CHECK(fw.k_gamma < 0);
  }
  CHECK(verify_mu(row("5")).expected == DivClass{1, -2});
  CHECK(verify_mu(row("8b")).expected == DivClass{3, -4});
  CHECK(verify_mu(row("1")).expected == DivClass{3, -1});
}

TEST_CASE("the condition-star proxy on the curated rows") {
  // General-member rows sit strictly inside the L, D_z cone except the
  // first, which is the documented boundary override; the special-member
  // rows all sit on the boundary.
  for (const auto& r : nonrigid_table()) {
    SigmaPosition pos = sigma_position(r.fam);
    if (r.id == "1") CHECK(pos == SigmaPosition::boundary);
    else if (r.special_only) CHECK(pos == SigmaPosition::boundary);
    else CHECK(pos == SigmaPosition::interior);
  }
}

TEST_CASE("curated interpretations attach by family and extensions") {
  const auto& r8a = row("8a");
  LinkTrace with8a = trace_link(r8a.fam, r8a.extensions, r8a.extension_names);
  REQUIRE(with8a.curated.size() == 1);
  CHECK(with8a.curated[0].find("7-flop") != std::string::npos);
  CHECK(with8a.terminal.ray == DivClass{5, -6});
  CHECK(with8a.terminal.far_block == std::vector<std::string>{"eta"});
  CHECK(with8a.terminal.heuristic.find("divisorial") != std::string::npos);

  const auto& r8b = row("8b");
  LinkTrace with8b = trace_link(r8b.fam, r8b.extensions, r8b.extension_names);
  REQUIRE(with8b.curated.size() == 1);
  CHECK(with8b.curated[0].find("3-flop") != std::string::npos);

  // The bare family without extensions matches neither special row.
  LinkTrace bare = trace_link(FamilyParams{-1, 1, 1, 2});
  CHECK(bare.curated.empty());
}
