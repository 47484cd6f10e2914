#include "doctest.h"

#include <algorithm>

#include "dp3/detcat.hpp"

using namespace dp3;

namespace {

std::vector<std::vector<Int>> partitions_into_odd_parts(Int d) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  auto rec = [&](auto&& self, Int left, Int max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (Int p = std::min(left, max_part); p >= 1; --p) {
      if (p % 2 == 0) continue;
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

}  // namespace

TEST_CASE("section tables from Riemann-Roch and duality") {
  CoverSpec deg7{7, 0, {{1, 0}, {2, 1}}};
  CHECK(h0_table(deg7, 5) == std::vector<Int>{0, 0, 1, 7, 14, 21});

  CoverSpec deg7_even{7, 0, {{2, 0}}};
  CHECK(h0_table(deg7_even, 4) == std::vector<Int>{0, 0, 0, 7, 14});

  CoverSpec quartic_odd{4, 1, {{1, 1}}};
  CHECK(h0_table(quartic_odd, 3) == std::vector<Int>{0, 1, 4, 8});
  CoverSpec quartic_even{4, 1, {}};
  CHECK(h0_table(quartic_even, 3) == std::vector<Int>{0, 0, 4, 8});
}

TEST_CASE("inconsistent overrides are rejected") {
  // Forcing h0 at a twist that duality already determines.
  CHECK_THROWS(h0_table(CoverSpec{7, 0, {{2, 1}, {3, 9}}}, 5));
  // Decreasing section counts.
  CHECK_THROWS(h0_table(CoverSpec{7, 0, {{1, 2}, {2, 1}}}, 5));
  CHECK_THROWS(h0_table(CoverSpec{7, 1, {}}, 3));  // e*d odd
  CHECK_THROWS(h0_table(CoverSpec{7, 0, {{2, -1}}}, 3));
}

TEST_CASE("duality symmetry of the section table") {
  for (const CoverSpec& spec :
       {CoverSpec{7, 0, {{2, 1}}}, CoverSpec{7, 0, {{1, 1}, {2, 3}}}, CoverSpec{4, 1, {{1, 1}}},
        CoverSpec{9, 0, {{2, 0}, {3, 2}}}, CoverSpec{6, 1, {{1, 0}, {2, 2}}}}) {
    Int top = spec.degree + 3;
    auto h = h0_table(spec, top);
    for (Int n = 0; n <= top; ++n) {
      Int dual = spec.dual_index(n);
      Int h_dual = dual < 0 ? 0 : (dual <= top ? h[dual] : -1);
      if (h_dual < 0) continue;
      CHECK(h[n] - h_dual == spec.chi(n));
    }
  }
}

TEST_CASE("the four formats in degree seven") {
  DetFormat even = derive_format(CoverSpec{7, 0, {}});
  CHECK(even.diag == std::vector<Int>(7, 1));
  CHECK(even.entry_degree(0, 6) == 1);

  DetFormat odd = derive_format(CoverSpec{7, 0, {{2, 1}}});
  CHECK(odd.diag == std::vector<Int>{3, 1, 1, 1, 1});
  CHECK(odd.generator_degrees() == std::vector<Int>{2, 3, 3, 3, 3});
  CHECK(odd.relation_degrees() == std::vector<Int>{5, 4, 4, 4, 4});

  DetFormat special_even = derive_format(CoverSpec{7, 0, {{2, 2}}});
  CHECK(special_even.diag == std::vector<Int>{3, 3, 1});
  CHECK(special_even.entry_matrix() ==
        std::vector<std::vector<Int>>{{3, 3, 2}, {3, 3, 2}, {2, 2, 1}});

  DetFormat special_odd = derive_format(CoverSpec{7, 0, {{1, 1}, {2, 3}}});
  CHECK(special_odd.diag == std::vector<Int>{5, 1, 1});
  CHECK(special_odd.entry_matrix() ==
        std::vector<std::vector<Int>>{{5, 3, 3}, {3, 1, 1}, {3, 1, 1}});
}

TEST_CASE("quartic theta characteristics") {
  DetFormat odd = derive_format(CoverSpec{4, 1, {{1, 1}}});
  CHECK(odd.diag == std::vector<Int>{3, 1});
  CHECK(odd.entry_matrix() == std::vector<std::vector<Int>>{{3, 2}, {2, 1}});
  DetFormat even = derive_format(CoverSpec{4, 1, {}});
  CHECK(even.diag == std::vector<Int>(4, 1));
}

TEST_CASE("formats straight from partitions") {
  DetFormat f = format_from_partition(7, 0, {3, 3, 1});
  CHECK(f.entry_matrix() == std::vector<std::vector<Int>>{{3, 3, 2}, {3, 3, 2}, {2, 2, 1}});
  DetFormat g = format_from_partition(7, 0, {5, 1, 1});
  CHECK(g.entry_matrix() == std::vector<std::vector<Int>>{{5, 3, 3}, {3, 1, 1}, {3, 1, 1}});
  // The conic as a 2x2 determinantal needs the twisted square: parts of
  // parity d+e force e = 1 here.
  DetFormat conic = format_from_partition(2, 1, {1, 1});
  CHECK(conic.entry_matrix() == std::vector<std::vector<Int>>{{1, 1}, {1, 1}});
  CHECK_THROWS(format_from_partition(2, 0, {1, 1}));   // parity mismatch
  CHECK_THROWS(format_from_partition(7, 0, {3, 3}));   // wrong sum
  CHECK_THROWS(format_from_partition(7, 0, {4, 2, 1}));  // mixed parity
}

TEST_CASE("hilbert series of formats") {
  DetFormat odd = derive_format(CoverSpec{7, 0, {{2, 1}}});
  CHECK(hilbert_series(odd, 6) == std::vector<Int>{0, 0, 1, 7, 14, 21, 28});
  DetFormat quartic = derive_format(CoverSpec{4, 1, {{1, 1}}});
  CHECK(hilbert_series(quartic, 5) == std::vector<Int>{0, 1, 4, 8, 12, 16});
  DetFormat empty;
  CHECK(hilbert_series(empty, 4) == std::vector<Int>{0, 0, 0, 0, 0});
}

TEST_CASE("moduli counts") {
  auto m = moduli_count(format_from_partition(7, 0, {3, 3, 1}));
  CHECK(m.params == 45);
  CHECK(m.gauge == 11);
  CHECK(m.family_dim == 34);
  CHECK(m.all_curves_dim == 35);

  auto linear = moduli_count(format_from_partition(7, 0, std::vector<Int>(7, 1)));
  CHECK(linear.params == 84);
  CHECK(linear.gauge == 49);
  CHECK(linear.family_dim == 35);

  auto generic_odd = moduli_count(derive_format(CoverSpec{7, 0, {{2, 1}}}));
  CHECK(generic_odd.family_dim == 35);

  // The 5+1+1 case: the dimension count of the formula. Note the gauge
  // group here is 17-dimensional, giving 50 - 17 = 33.
  auto special_odd = moduli_count(format_from_partition(7, 0, {5, 1, 1}));
  CHECK(special_odd.params == 50);
  CHECK(special_odd.gauge == 17);
  CHECK(special_odd.family_dim == 33);
}

TEST_CASE("determinant degree balance") {
  for (Int d : {4, 5, 6, 7, 8, 9}) {
    for (int e : {0, 1}) {
      if (e * d % 2) continue;
      for (const auto& part : partitions_into_odd_parts(d)) {
        if ((d + e - part[0]) % 2 != 0) continue;
        DetFormat f = format_from_partition(d, e, part);
        auto r = f.generator_degrees(), l = f.relation_degrees();
        Int det_degree = 0;
        for (size_t i = 0; i < f.size(); ++i) det_degree += l[i] - r[i];
        CHECK(det_degree == d);
      }
    }
  }
}

TEST_CASE("property: formats round trip through their series") {
  for (Int d : {7, 9}) {
    auto parts = partitions_into_odd_parts(d);
    CHECK(parts.size() == (d == 7 ? 5 : 8));
    for (const auto& part : parts) {
      DetFormat f = format_from_partition(d, 0, part);
      auto series = hilbert_series(f, d + 3);
      DetFormat back = derive_format_from_series(d, 0, series);
      std::vector<Int> got = back.diag, want = part;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("section tables that fit no symmetric format are rejected") {
  CHECK_THROWS(derive_format(CoverSpec{7, 0, {{2, 4}}}));
  CHECK_THROWS(derive_format(CoverSpec{7, 0, {{1, 1}, {2, 2}}}));
}
