#pragma once

// Shared oracles and generators for the test suites. The oracles here are
// deliberately independent of the library code paths they check.

#include <random>
#include <vector>

#include "dp3/chow.hpp"
#include "dp3/scroll.hpp"

namespace testutil {

using dp3::Int;

// Closed-form section count on a standard scroll: enumerate fibre
// multidegrees w with |w| = e and count base forms of degree
// l + sum w_i a_i for each.
inline Int closed_form_section_count(const dp3::StandardScroll& scroll,
                                     const dp3::DivClass& cls) {
  Int total = 0;
  const int nf = static_cast<int>(scroll.twists.size());
  std::vector<Int> w(nf, 0);
  auto rec = [&](auto&& self, int i, Int left) -> void {
    if (i == nf - 1) {
      w[i] = left;
      Int base_deg = cls.l;
      for (int j = 0; j < nf; ++j) base_deg += w[j] * scroll.twists[j];
      total += dp3::form_space_dim(base_deg, scroll.base_dim + 1);
      return;
    }
    for (Int k = 0; k <= left; ++k) {
      w[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (cls.m < 0) return 0;
  if (nf == 0) return 0;
  rec(rec, 0, cls.m);
  return total;
}

// Brute-force polynomial reduction in Z[L, M] modulo L^2 and
// M (M-aL)(M-bL)(M-cL), normalized by M^3 L = 1. Independent of ScrollRing:
// expands into coefficient arrays by hand.
struct BruteRing {
  Int a, b, c;

  // Polynomial as coefficients poly[m][l], degrees at most 8.
  using Poly = std::vector<std::vector<Int>>;

  static Poly zero() { return Poly(9, std::vector<Int>(9, 0)); }

  static Poly mono(int m, int l, Int coeff) {
    Poly p = zero();
    p[m][l] = coeff;
    return p;
  }

  static Poly mul(const Poly& p, const Poly& q) {
    Poly r = zero();
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) {
        if (p[i][j] == 0) continue;
        for (int k = 0; i + k < 9; ++k)
          for (int l = 0; j + l < 9; ++l)
            if (q[k][l] != 0) r[i + k][j + l] += p[i][j] * q[k][l];
      }
    return r;
  }

  static Poly add(Poly p, const Poly& q) {
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) p[i][j] += q[i][j];
    return p;
  }

  static Poly scale(Poly p, Int k) {
    for (auto& row : p)
      for (auto& x : row) x *= k;
    return p;
  }

  // Reduce to the basis M^m L^l with m <= 3, l <= 1 by L^2 = 0 and
  // M^4 = sM^3L - qM^2L^2 + pML^3 with s = a+b+c, q = ab+ac+bc, p = abc.
  Poly reduce(Poly p) const {
    Int s = a + b + c, q = a * b + a * c + b * c, r = a * b * c;
    bool changed = true;
    while (changed) {
      changed = false;
      Poly next = zero();
      for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) {
          if (p[i][j] == 0) continue;
          if (j >= 2) continue;  // L^2 = 0
          if (i >= 4) {
            changed = true;
            next[i - 1][j + 1] += p[i][j] * s;
            if (j + 2 < 9) next[i - 2][j + 2] -= p[i][j] * q;
            if (j + 3 < 9) next[i - 3][j + 3] += p[i][j] * r;
          } else {
            next[i][j] += p[i][j];
          }
        }
      p = next;
    }
    return p;
  }

  Int top_degree(const Poly& p) const { return reduce(p)[3][1]; }
};

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline Int rand_int(Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  return d(rng());
}

inline dp3::StandardScroll random_scroll() {
  dp3::StandardScroll s;
  s.base_dim = static_cast<int>(rand_int(1, 2));
  int nf = static_cast<int>(rand_int(s.base_dim == 1 ? 3 : 2, 5));
  for (int i = 0; i < nf; ++i) s.twists.push_back(rand_int(0, 4));
  std::sort(s.twists.begin(), s.twists.end());
  return s;
}

inline dp3::BasisChange random_unimodular() {
  // Product of elementary shears and swaps stays unimodular.
  dp3::BasisChange t{1, 0, 0, 1};
  for (int k = 0; k < 4; ++k) {
    Int s = rand_int(-2, 2);
    dp3::BasisChange e = rand_int(0, 1) ? dp3::BasisChange{1, s, 0, 1}
                                        : dp3::BasisChange{1, 0, s, 1};
    t = dp3::BasisChange{e.a * t.a + e.b * t.c, e.a * t.b + e.b * t.d,
                         e.c * t.a + e.d * t.c, e.c * t.b + e.d * t.d};
    if (rand_int(0, 3) == 0) t = dp3::BasisChange{t.c, t.d, t.a, t.b};  // row swap
  }
  return t;
}

}  // namespace testutil
