#pragma once

#include <map>
#include <string>
#include <vector>

#include "dp3/intlin.hpp"

namespace dp3 {

/// A 2-to-1 cover of a plane curve of degree d, encoded by the square of its
/// line bundle: e = 0 for the trivial square, e = 1 for O(-1) (then  the
/// twist lambda(k) with 2k = d - 3 + e is a theta characteristic). Section
/// counts h0(lambda(n)) in the range where Riemann-Roch leaves both h0 and
/// h1 free are supplied as overrides, all others follow.
struct CoverSpec {
  Int degree = 0;
  int e = 0;
  std::map<Int, Int> h0_overrides;

  Int genus() const { return (degree - 1) * (degree - 2) / 2; }
  Int chi(Int n) const { return degree * n - e * degree / 2 + 1 - genus(); }
  Int dual_index(Int n) const { return degree - 3 + e - n; }
  void validate() const;
};

/// h0(lambda(n)) for n = 0..n_max. Errors on overrides that break duality,
/// nonnegativity or monotonicity.
std::vector<Int> h0_table(const CoverSpec& spec, Int n_max);

/// A symmetric determinantal format: diagonal entry degrees d_i partitioning
/// the curve degree, entries of degree (d_i + d_j)/2, generator degrees
/// r_i = (d + e - d_i)/2 and relation degrees l_i = (d + e + d_i)/2.
struct DetFormat {
  Int degree = 0;
  int e = 0;
  std::vector<Int> diag;

  size_t size() const { return diag.size(); }
  Int entry_degree(size_t i, size_t j) const { return (diag.at(i) + diag.at(j)) / 2; }
  std::vector<Int> generator_degrees() const;
  std::vector<Int> relation_degrees() const;
  std::vector<std::vector<Int>> entry_matrix() const;
  void validate() const;
  std::string partition_str() const;  // "7 = 3+3+1"
};

/// Build the format of a given diagonal partition; parts must be positive,
/// of one parity matching d + e, and sum to d.
DetFormat format_from_partition(Int degree, int e, std::vector<Int> partition);

/// Minimal-generator analysis of the section table, assuming multiplication
/// maps of maximal rank: at each degree the deficit against the free module
/// on the generators found so far creates generators, the surplus relations.
/// Errors when no symmetric format matches.
DetFormat derive_format(const CoverSpec& spec);

/// Same analysis on a raw h0 sequence (index = twist), for round trips.
DetFormat derive_format_from_series(Int degree, int e, const std::vector<Int>& h0);

/// Coefficients of (sum t^{r_i} - sum t^{l_i}) / (1-t)^3 for n = 0..n_max.
std::vector<Int> hilbert_series(const DetFormat& fmt, Int n_max);

struct ModuliCount {
  Int params = 0;          // entries of the symmetric matrix
  Int gauge = 0;           // choices of generators: sum dim S_{r_i - r_j}
  Int family_dim = 0;      // params - gauge
  Int all_curves_dim = 0;  // dim S_d - 1
};

ModuliCount moduli_count(const DetFormat& fmt);

}  // namespace dp3
