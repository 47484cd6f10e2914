#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp3/intlin.hpp"

namespace dp3 {

/// Divisor class m*M + l*L on a rank-2 torus quotient. Classes are identified
/// with characters of the torus: M and L are the two coordinate characters,
/// and the coordinate with weight vector (alpha, beta) = (lambda-weight,
/// mu-weight) is a section of beta*M + alpha*L.
struct DivClass {
  Int m = 0;
  Int l = 0;

  /// Character vector (lambda-component, mu-component) = (l, m).
  Vec2 vec() const { return {l, m}; }
  static DivClass from_vec(const Vec2& v) { return {v.y, v.x}; }

  DivClass ray() const { return from_vec(primitive(vec())); }
  bool is_zero() const { return m == 0 && l == 0; }

  friend bool operator==(const DivClass& a, const DivClass& b) { return a.m == b.m && a.l == b.l; }
  friend bool operator!=(const DivClass& a, const DivClass& b) { return !(a == b); }
  friend bool operator<(const DivClass& a, const DivClass& b) {
    return a.m != b.m ? a.m < b.m : a.l < b.l;
  }
  friend DivClass operator+(const DivClass& a, const DivClass& b) { return {a.m + b.m, a.l + b.l}; }
  friend DivClass operator-(const DivClass& a, const DivClass& b) { return {a.m - b.m, a.l - b.l}; }
  friend DivClass operator*(Int k, const DivClass& a) { return {k * a.m, k * a.l}; }

  /// "2M-3L", "M", "-L", "0", ...
  std::string str() const;
};

/// Exponent vector of a monomial in the ambient coordinates.
struct Monomial {
  std::vector<Int> e;
  Int total_degree() const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names);

/// A rank-2 torus action on affine space, one column per coordinate. The
/// column of a coordinate is recorded as the divisor class it is a section of.
/// Valid matrices have at least 4 nonzero columns, rank 2, and all column
/// rays inside a strictly convex cone (an open half-plane), which makes every
/// weight-space finite dimensional.
struct WeightMatrix {
  std::vector<DivClass> cols;
  std::vector<std::string> names;

  /// Build from the two weight rows: lambda_row[i] and mu_row[i] are the
  /// weights of the i-th coordinate under the two torus factors.
  static WeightMatrix from_rows(const std::vector<Int>& lambda_row,
                                const std::vector<Int>& mu_row,
                                std::vector<std::string> names = {});

  int ncols() const { return static_cast<int>(cols.size()); }
  std::vector<Int> lambda_row() const;
  std::vector<Int> mu_row() const;
  /// Printing layout: mu row above lambda row, as generalized weight
  /// matrices are usually displayed.
  std::vector<std::vector<Int>> display_rows() const;

  void validate() const;

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.cols == b.cols;
  }
};

/// A projective-space bundle over P^k presented by its twist sequence.
/// The induced weight matrix has k+1 base columns of class L and one fibre
/// column of class M - a_i L per twist. Twists keep the order given.
struct StandardScroll {
  int base_dim = 1;  // 1 or 2
  std::vector<Int> twists;

  Int twist_sum() const;
  int dim() const { return base_dim + static_cast<int>(twists.size()) - 1; }
  std::string str() const;
};

WeightMatrix weight_matrix(const StandardScroll& scroll);

/// Unimodular change of basis of the acting torus; acts on weight matrices
/// by row operations and on divisor classes by the same matrix.
struct BasisChange {
  Int a = 1, b = 0, c = 0, d = 1;  // rows of the 2x2 matrix
  Int det() const { return a * d - b * c; }
};

WeightMatrix apply(const BasisChange& t, const WeightMatrix& mat);
DivClass apply(const BasisChange& t, const DivClass& cls);

/// Append a coordinate of the given class. The new ray must lie in the cone
/// of the existing columns or extend it past the last ray without the total
/// spread reaching a half-plane. The column is inserted in slope order,
/// after any existing column on the same ray.
WeightMatrix extend(const WeightMatrix& mat, const DivClass& cls, const std::string& name);

/// All monomials of the given class: exponent vectors e >= 0 with
/// sum_i e_i * col_i = cls. Returned in a canonical order: by total degree,
/// then lexicographically on the exponent vector read from the last
/// coordinate backwards.
std::vector<Monomial> sections(const WeightMatrix& mat, const DivClass& cls);

Int section_count(const WeightMatrix& mat, const DivClass& cls);

/// One GIT chamber [lo, hi] of the linearisation cone: lo and hi are
/// consecutive distinct column rays. left_block / right_block are the column
/// indices whose rays lie on or before lo / on or after hi; for a character
/// inside the chamber the semistable locus is (left block not all zero) x
/// (right block not all zero).
struct Chamber {
  DivClass lo, hi;
  std::vector<int> left_block, right_block;
};

/// The chamber walk of a weight matrix. Columns are sorted by slope starting
/// from the clockwise-most extreme ray; the walk runs from the first ray to
/// the ray of the second-to-last column (the far edge of the cone of useful
/// linearisations). The ray of the last column is kept separately: when it
/// differs from the edge, the region beyond the edge carries no geometric
/// quotient and the walk ends with the edge contraction.
struct ChamberDecomposition {
  std::vector<int> walk;        // column indices in walk order
  std::vector<DivClass> rays;   // distinct primitive rays in walk order
  std::vector<Chamber> chambers;
  DivClass mobile_edge;         // ray of the second-to-last column
  DivClass terminal_ray;        // ray of the last column
  bool single_chamber() const { return chambers.size() == 1; }
  /// Rays strictly between the first ray and the mobile edge.
  std::vector<DivClass> interior_walls() const;
};

ChamberDecomposition chamber_decomposition(const WeightMatrix& mat);

/// The far edge of the cone of useful linearisations: the ray of the
/// second-to-last column in slope order.
DivClass mobile_edge(const WeightMatrix& mat);

/// Walk-order comparison of rays:  < 0 if a comes strictly before b,
/// 0 if equal rays, > 0 if strictly after.
Int walk_compare(const DivClass& a, const DivClass& b);

}  // namespace dp3
