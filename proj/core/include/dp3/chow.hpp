#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dp3/family.hpp"
#include "dp3/scroll.hpp"

namespace dp3 {

/// Integer polynomial in the divisor symbols M and L.
struct ChowExpr {
  // (M exponent, L exponent) -> coefficient; zero coefficients are dropped.
  std::map<std::pair<Int, Int>, Int> terms;

  static ChowExpr constant(Int c);
  static ChowExpr M();
  static ChowExpr L();
  static ChowExpr of(const DivClass& cls);  // m*M + l*L as a linear polynomial

  bool is_zero() const { return terms.empty(); }
  /// Total degree when homogeneous.
  std::optional<Int> homogeneous_degree() const;
  Int coefficient(Int m_exp, Int l_exp) const;

  ChowExpr& operator+=(const ChowExpr& o);
  ChowExpr& operator-=(const ChowExpr& o);
  friend ChowExpr operator+(ChowExpr a, const ChowExpr& b) { return a += b; }
  friend ChowExpr operator-(ChowExpr a, const ChowExpr& b) { return a -= b; }
  friend ChowExpr operator*(const ChowExpr& a, const ChowExpr& b);
  friend ChowExpr operator*(Int k, const ChowExpr& a);
  ChowExpr pow(Int k) const;

  /// Parse "3M^2L - (M-L)^2*(3M+2L)" style input: integer coefficients,
  /// tokens M and L, + - * ^ ( ), juxtaposition means multiplication.
  static ChowExpr parse(const std::string& text);
  std::string str() const;
};

/// The Chow ring of a standard scroll over P^k with fibre twists a_0..a_n:
/// Z[L, M] modulo L^{k+1} and prod_i (M - a_i L), with the point class
/// M^n L^k normalized to 1.
class ScrollRing {
 public:
  explicit ScrollRing(StandardScroll scroll);

  const StandardScroll& scroll() const { return scroll_; }
  int dim() const { return scroll_.dim(); }

  /// Normal form with M-exponent at most the fibre dimension and L-exponent
  /// at most the base dimension.
  ChowExpr normal_form(ChowExpr expr) const;

  /// Intersection number of a homogeneous top-degree expression.
  Int degree_of_top(const ChowExpr& expr) const;

  struct Reduced {
    std::optional<Int> number;  // set for homogeneous top-degree input
    ChowExpr normal;
  };
  /// Errors when the expression has a term of degree above dim().
  Reduced reduce(const ChowExpr& expr) const;

 private:
  StandardScroll scroll_;
  std::vector<Int> sym_;  // elementary symmetric functions of the twists
};

/// 1-cycle on a four-fold scroll over P^1 written against the basis
/// (Gamma, M^2 L), where Gamma = M^3 - d M^2 L is the negative section.
struct CycleClass {
  Int gamma = 0;
  Int m2l = 0;
  std::string str() const;
  friend bool operator==(const CycleClass& a, const CycleClass& b) {
    return a.gamma == b.gamma && a.m2l == b.m2l;
  }
};

/// Convert a degree-3 class to the (Gamma, M^2 L) basis. Only defined on
/// four-fold scrolls over P^1.
CycleClass cycle_in_gamma_basis(const ScrollRing& ring, const ChowExpr& expr);

StandardScroll ambient_scroll(const FamilyParams& fam);  // F(0,a,b,c) over P^1

/// -K of the hypersurface: M + (2-d-n) L.
DivClass anticanonical(const FamilyParams& fam);

/// -K of the ambient quotient: the sum of all column classes.
DivClass ambient_anticanonical(const WeightMatrix& mat);

/// -K . Gamma = 2 - d - n.
Int anticanonical_dot_gamma(const FamilyParams& fam);

struct CanonicalSquare {
  CycleClass cycle;   // 3 Gamma + (12 - 3d - 5n) M^2 L
  bool interior;      // both coefficients positive, i.e. 3d + 5n < 12
  bool iff_known;     // the equivalence with interiority is proved for n < 0 only
};
CanonicalSquare canonical_square(const FamilyParams& fam);

/// Gamma as a polynomial: (M - aL)(M - bL)(M - cL).
ChowExpr gamma_expr(const FamilyParams& fam);

// Ring-reduction routes for the same quantities, used as cross-checks
// against the closed forms above.
Int anticanonical_dot_gamma_via_ring(const FamilyParams& fam);
Int x_dot_gamma_via_ring(const FamilyParams& fam);
CycleClass canonical_square_via_ring(const FamilyParams& fam);

}  // namespace dp3
