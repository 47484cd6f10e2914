#pragma once

#include <string>

#include "dp3/intlin.hpp"

namespace dp3 {

/// A cubic del Pezzo fibration family: hypersurfaces of class 3M + nL on the
/// four-fold scroll with fibre twists (0, a, b, c) over P^1. d = a + b + c.
struct FamilyParams {
  Int n = 0;
  Int a = 0, b = 0, c = 0;

  Int d() const { return a + b + c; }
  std::string str() const;

  friend bool operator==(const FamilyParams& x, const FamilyParams& y) {
    return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c;
  }
  friend bool operator<(const FamilyParams& x, const FamilyParams& y);
};

struct Admissibility {
  bool ok = false;
  std::string reason;  // violated clause when not ok
};

/// Whether a general member of the family is a del Pezzo fibration of degree
/// three. Requires 0 <= a <= b <= c. The clauses, in the order tested:
///   n >= -3a              (the surface z = t = 0 is not in the base locus)
///   not (n = -3a, a = b, n < 0)   (no fixed surface t = linear form = 0)
///   n >= -c  when n < 0   (general member smooth generically along the
///                          negative section)
///   (n, d) != (0, 0)      (excludes the constant family of cubic surfaces)
Admissibility admissible(const FamilyParams& fam);

enum class SigmaPosition { interior, boundary, outside };

/// 2 - a - c - n: the coefficient when -K is written against the subcone of
/// the mobile cone spanned by L and the divisor z = 0.
Int sigma_margin(const FamilyParams& fam);

/// Position of -K relative to that subcone: margin > 0 interior, = 0 boundary,
/// < 0 outside.
SigmaPosition sigma_position(const FamilyParams& fam);

const char* to_string(SigmaPosition p);

}  // namespace dp3
