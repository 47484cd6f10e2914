#include "dp3/newton.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dp3 {

namespace {

constexpr char kVars[4] = {'x', 'y', 'z', 't'};

Int coefficient_degree(const FamilyParams& fam, const FibreMonomial& m) {
  return fam.n + fam.a * m.e[1] + fam.b * m.e[2] + fam.c * m.e[3];
}

}  // namespace

std::string FibreMonomial::str() const {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (e[i] == 0) continue;
    out += kVars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::optional<FibreMonomial> FibreMonomial::parse(const std::string& text) {
  FibreMonomial m;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    int var = -1;
    for (int v = 0; v < 4; ++v)
      if (c == kVars[v]) var = v;
    if (var < 0) return std::nullopt;
    ++i;
    Int exp = 1;
    if (i < text.size() && (text[i] == '^' || std::isdigit(static_cast<unsigned char>(text[i])))) {
      if (text[i] == '^') ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
      exp = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        exp = 10 * exp + (text[i++] - '0');
    }
    m.e[var] += exp;
  }
  if (m.degree() != 3) return std::nullopt;
  return m;
}

std::vector<FibreMonomial> cubic_monomials_print_order() {
  std::vector<FibreMonomial> all;
  for (Int i = 0; i <= 3; ++i)
    for (Int j = 0; i + j <= 3; ++j)
      for (Int k = 0; i + j + k <= 3; ++k) all.push_back(FibreMonomial{{i, j, k, 3 - i - j - k}});
  std::sort(all.begin(), all.end(), [](const FibreMonomial& a, const FibreMonomial& b) {
    if (a.e[0] != b.e[0]) return a.e[0] < b.e[0];
    if (a.e[1] != b.e[1]) return a.e[1] > b.e[1];
    if (a.e[2] != b.e[2]) return a.e[2] > b.e[2];
    return a.e[3] > b.e[3];
  });
  return all;
}

std::optional<Int> NewtonTable::degree_of(const FibreMonomial& m) const {
  for (const auto& r : rows)
    if (r.mono == m) return r.degree;
  return std::nullopt;
}

std::map<Int, std::vector<FibreMonomial>> NewtonTable::grouped() const {
  std::map<Int, std::vector<FibreMonomial>> g;
  for (const auto& r : rows) g[r.degree].push_back(r.mono);
  return g;
}

NewtonTable newton_table(const FamilyParams& fam) {
  if (!(0 <= fam.a && fam.a <= fam.b && fam.b <= fam.c))
    throw std::invalid_argument("family twists must satisfy 0 <= a <= b <= c");
  NewtonTable t;
  t.fam = fam;
  std::vector<NewtonRow> rows;
  for (const auto& m : cubic_monomials_print_order()) {
    Int d = coefficient_degree(fam, m);
    if (d >= 0) rows.push_back({m, d});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const NewtonRow& a, const NewtonRow& b) { return a.degree < b.degree; });
  t.rows = std::move(rows);
  return t;
}

Int valuation(const NewtonTable& table, const DivisibilityProfile& profile) {
  std::optional<Int> best;
  for (const auto& r : table.rows) {
    auto it = profile.find(r.mono);
    Int floor = it == profile.end() ? 0 : it->second;
    if (floor > r.degree) continue;  // coefficient forced to vanish
    if (!best || r.degree < *best) best = r.degree;
  }
  if (!best) throw std::invalid_argument("no monomials present: valuation undefined");
  return *best;
}

std::string BaseLocusReport::str() const {
  std::string out;
  out += std::string("surface z=t=0 in base locus: ") + (all_divisible_by_z_or_t ? "yes" : "no");
  out += std::string("; x^3 present (section not in X): ") + (x3_present ? "yes" : "no");
  out += std::string("; some of x^2y, x^2z, x^2t present: ") + (x2_term_present ? "yes" : "no");
  out += std::string("; matches inequalities: ") + (consistent ? "yes" : "NO");
  return out;
}

BaseLocusReport base_locus_report(const FamilyParams& fam) {
  NewtonTable t = newton_table(fam);
  BaseLocusReport r;
  r.all_divisible_by_z_or_t = true;
  for (const auto& row : t.rows) {
    if (row.mono.e[2] == 0 && row.mono.e[3] == 0) r.all_divisible_by_z_or_t = false;
    if (row.mono == FibreMonomial{{3, 0, 0, 0}}) r.x3_present = true;
    if (row.mono.e[0] == 2) r.x2_term_present = true;
  }
  r.ineq_b_not_in_base = fam.n >= -3 * fam.a;
  r.ineq_smooth_on_gamma = fam.n >= -fam.c;
  r.consistent = (r.all_divisible_by_z_or_t == !r.ineq_b_not_in_base) &&
                 (r.x2_term_present == r.ineq_smooth_on_gamma) &&
                 (r.x3_present == (fam.n >= 0));
  return r;
}

SubstitutionResult weighted_substitution(const FamilyParams& fam, const std::array<Int, 4>& w,
                                         Int cancel_power, const DivisibilityProfile& profile) {
  for (Int wi : w)
    if (wi < 0) throw std::invalid_argument("substitution weights must be nonnegative");

  const std::array<Int, 4> twists{0, fam.a, fam.b, fam.c};
  Int lift = twists[0] + w[0];
  for (int i = 1; i < 4; ++i) lift = std::min(lift, twists[i] + w[i]);

  SubstitutionResult out;
  out.lift = lift;
  for (int i = 0; i < 4; ++i) out.raw_twists[i] = twists[i] + w[i] - lift;
  std::array<Int, 4> sorted = out.raw_twists;
  std::sort(sorted.begin(), sorted.end());
  if (sorted[0] != 0) throw std::runtime_error("lifted twists must contain a zero");
  out.result = FamilyParams{fam.n + 3 * lift - cancel_power, sorted[1], sorted[2], sorted[3]};

  NewtonTable t = newton_table(fam);
  std::optional<Int> max_cancel;
  for (const auto& row : t.rows) {
    Int wdot = 0;
    for (int i = 0; i < 4; ++i) wdot += w[i] * row.mono.e[i];
    auto it = profile.find(row.mono);
    Int floor = it == profile.end() ? 0 : it->second;
    bool killed = floor > row.degree;

    SubstitutionResult::Shift sh;
    sh.mono = row.mono;
    sh.old_degree = row.degree;
    sh.new_degree = row.degree + wdot - cancel_power;
    sh.min_u_order = std::max<Int>(0, floor + wdot - cancel_power);
    sh.killed_by_profile = killed;
    out.shifts.push_back(sh);

    if (killed) continue;
    if (sh.new_degree < 0)
      throw std::invalid_argument("substitution rejected: coefficient degree of " +
                                  row.mono.str() + " would become negative");
    Int cancellable = floor + wdot;
    if (!max_cancel || cancellable < *max_cancel) max_cancel = cancellable;
  }
  out.max_cancellable = max_cancel.value_or(0);
  return out;
}

}  // namespace dp3
