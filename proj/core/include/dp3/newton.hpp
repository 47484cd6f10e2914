#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dp3/family.hpp"

namespace dp3 {

/// A cubic monomial in the fibre coordinates x, y, z, t.
struct FibreMonomial {
  std::array<Int, 4> e{0, 0, 0, 0};

  Int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  std::string str() const;  // "xy^2", "t^3", ...
  /// Parse "xy^2", "x^2t", "t3" (exponent with or without '^').
  static std::optional<FibreMonomial> parse(const std::string& text);

  friend bool operator==(const FibreMonomial& a, const FibreMonomial& b) { return a.e == b.e; }
  friend bool operator<(const FibreMonomial& a, const FibreMonomial& b) { return a.e < b.e; }
};

/// All cubic fibre monomials in the canonical printing order for a table:
/// x-exponent ascending, then (y, z, t) exponents descending.
std::vector<FibreMonomial> cubic_monomials_print_order();

struct NewtonRow {
  FibreMonomial mono;
  Int degree = 0;  // degree of the coefficient in the base coordinates u, v
};

/// The fibre monomials of a member of |3M + nL| on F(0,a,b,c) with the
/// degrees of their base coefficients: x^i y^j z^k t^l carries coefficient
/// degree n + a j + b k + c l, and only nonnegative degrees are listed.
/// Rows are grouped by coefficient degree ascending, then in the canonical
/// monomial order.
struct NewtonTable {
  FamilyParams fam;
  std::vector<NewtonRow> rows;

  std::optional<Int> degree_of(const FibreMonomial& m) const;
  std::map<Int, std::vector<FibreMonomial>> grouped() const;
  bool empty() const { return rows.empty(); }
};

/// Requires 0 <= a <= b <= c; admissibility is not required (the table is the
/// tool that decides the base-locus certificates in the first place).
NewtonTable newton_table(const FamilyParams& fam);

/// Required power of u dividing the coefficient of a fibre monomial; a power
/// above the coefficient degree forces the coefficient to vanish.
using DivisibilityProfile = std::map<FibreMonomial, Int>;

/// Minimal coefficient degree over the monomials still present under the
/// profile: 0 exactly when an unconstrained degree-0 coefficient exists.
/// Errors when nothing is left.
Int valuation(const NewtonTable& table, const DivisibilityProfile& profile = {});

/// Base-locus certificates read off the table, together with the closed-form
/// inequalities they must reproduce.
struct BaseLocusReport {
  bool all_divisible_by_z_or_t = false;  // <=> the surface z=t=0 in the base locus
  bool x3_present = false;               // <=> the negative section not contained in X
  bool x2_term_present = false;          // x^2y, x^2z or x^2t  <=> smooth generically along it
  bool ineq_b_not_in_base = false;       // n >= -3a
  bool ineq_smooth_on_gamma = false;     // n >= -c
  bool consistent = false;               // certificates match the inequalities
  std::string str() const;
};

BaseLocusReport base_locus_report(const FamilyParams& fam);

/// Substitute x_i -> u^{w_i} x_i and cancel u^s: twists move to
/// (a_i + w_i) - min_j(a_j + w_j) and n to n + 3 min_j(a_j + w_j) - s.
/// Every coefficient degree shifts by (w . exponents) - s; a present monomial
/// whose degree would go negative rejects the substitution unless the profile
/// already forces its coefficient to vanish.
struct SubstitutionResult {
  FamilyParams result;                    // twists sorted ascending
  std::array<Int, 4> raw_twists{};        // before sorting, in x,y,z,t order
  Int lift = 0;                           // min_j(a_j + w_j)
  struct Shift {
    FibreMonomial mono;
    Int old_degree = 0;
    Int new_degree = 0;
    Int min_u_order = 0;  // profile floor + w . exponents - s, clamped at 0
    bool killed_by_profile = false;
  };
  std::vector<Shift> shifts;
  /// Largest cancel power for which the constrained family stays divisible:
  /// min over present monomials of (profile floor + w . exponents).
  Int max_cancellable = 0;
};

SubstitutionResult weighted_substitution(const FamilyParams& fam, const std::array<Int, 4>& w,
                                         Int cancel_power, const DivisibilityProfile& profile = {});

}  // namespace dp3
