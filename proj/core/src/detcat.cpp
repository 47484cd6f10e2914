#include "dp3/detcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp3 {

namespace {

Int dim_s(Int k) { return form_space_dim(k, 3); }

}  // namespace

void CoverSpec::validate() const {
  if (degree < 1) throw std::invalid_argument("curve degree must be positive");
  if (e != 0 && e != 1) throw std::invalid_argument("e must be 0 or 1");
  if (e * degree % 2 != 0) throw std::invalid_argument("e*d must be even");
  for (const auto& [n, v] : h0_overrides) {
    if (n < 1) throw std::invalid_argument("overrides only make sense for positive twists");
    if (v < 0) throw std::invalid_argument("section counts are nonnegative");
  }
}

std::vector<Int> h0_table(const CoverSpec& spec, Int n_max) {
  spec.validate();
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  Int top = std::max(n_max, spec.degree + 2);
  std::vector<Int> h(top + 1, 0);
  // The cover is connected, so lambda itself has no sections and twists by
  // nonpositive degrees vanish. Above the dual range Riemann-Roch decides;
  // in the self-dual or coupled range the override decides.
  auto h0_at = [&](Int n) -> Int { return n < 0 ? 0 : h[n]; };
  for (Int n = 1; n <= top; ++n) {
    Int dual = spec.dual_index(n);
    Int value;
    auto ov = spec.h0_overrides.find(n);
    if (dual < n) {
      value = spec.chi(n) + h0_at(dual);
      if (ov != spec.h0_overrides.end() && ov->second != value)
        throw std::invalid_argument("override at n=" + std::to_string(n) +
                                    " contradicts duality: forced value " + std::to_string(value));
    } else {
      value = ov != spec.h0_overrides.end() ? ov->second : 0;
      if (dual == n && spec.chi(n) != 0)
        throw std::invalid_argument("self-dual twist with nonzero Euler characteristic");
    }
    if (value < 0)
      throw std::invalid_argument("negative section count at n=" + std::to_string(n));
    if (value < h[n - 1])
      throw std::invalid_argument("section counts must be nondecreasing (violated at n=" +
                                  std::to_string(n) + ")");
    h[n] = value;
  }
  h.resize(n_max + 1);
  return h;
}

std::vector<Int> DetFormat::generator_degrees() const {
  std::vector<Int> r;
  for (Int di : diag) r.push_back((degree + e - di) / 2);
  return r;
}

std::vector<Int> DetFormat::relation_degrees() const {
  std::vector<Int> l;
  for (Int di : diag) l.push_back((degree + e + di) / 2);
  return l;
}

std::vector<std::vector<Int>> DetFormat::entry_matrix() const {
  std::vector<std::vector<Int>> m(size(), std::vector<Int>(size(), 0));
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = 0; j < size(); ++j) m[i][j] = entry_degree(i, j);
  return m;
}

void DetFormat::validate() const {
  Int sum = 0;
  for (Int di : diag) {
    if (di < 1) throw std::invalid_argument("diagonal degrees must be positive");
    if ((degree + e - di) % 2 != 0)
      throw std::invalid_argument("diagonal degree " + std::to_string(di) +
                                  " has the wrong parity for d+e");
    sum += di;
  }
  if (sum != degree)
    throw std::invalid_argument("diagonal degrees must partition the curve degree");
}

std::string DetFormat::partition_str() const {
  std::string out = std::to_string(degree) + " = ";
  for (size_t i = 0; i < diag.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(diag[i]);
  }
  return out;
}

DetFormat format_from_partition(Int degree, int e, std::vector<Int> partition) {
  DetFormat fmt;
  fmt.degree = degree;
  fmt.e = e;
  fmt.diag = std::move(partition);
  if (!fmt.diag.empty() || degree != 0) fmt.validate();
  return fmt;
}

DetFormat derive_format_from_series(Int degree, int e, const std::vector<Int>& h0) {
  std::vector<Int> gens, rels;
  auto predicted = [&](Int n) {
    Int p = 0;
    for (Int r : gens) p += dim_s(n - r);
    for (Int l : rels) p -= dim_s(n - l);
    return p;
  };
  Int horizon = degree + 2;
  if (static_cast<Int>(h0.size()) <= horizon)
    throw std::invalid_argument("section table too short for the generator analysis");
  for (Int n = 0; n <= horizon; ++n) {
    Int gap = h0[n] - predicted(n);
    if (gap > 0) {
      if (2 * n >= degree + e)
        throw std::invalid_argument("no symmetric format: generator of degree " +
                                    std::to_string(n) + " forces a nonpositive diagonal entry");
      gens.insert(gens.end(), gap, n);
    } else if (gap < 0) {
      rels.insert(rels.end(), -gap, n);
    }
  }

  // Symmetry of the resolution: relations pair with generators as
  // l = d + e - r, and the diagonal degrees partition d.
  std::vector<Int> expect;
  for (Int r : gens) expect.push_back(degree + e - r);
  std::sort(expect.begin(), expect.end());
  std::vector<Int> got = rels;
  std::sort(got.begin(), got.end());
  if (expect != got)
    throw std::invalid_argument("no symmetric format matches the section table");

  DetFormat fmt;
  fmt.degree = degree;
  fmt.e = e;
  for (Int r : gens) fmt.diag.push_back(degree + e - 2 * r);
  fmt.validate();
  return fmt;
}

DetFormat derive_format(const CoverSpec& spec) {
  return derive_format_from_series(spec.degree, spec.e, h0_table(spec, spec.degree + 3));
}

std::vector<Int> hilbert_series(const DetFormat& fmt, Int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<Int> r = fmt.generator_degrees(), l = fmt.relation_degrees();
  std::vector<Int> out(n_max + 1, 0);
  for (Int n = 0; n <= n_max; ++n) {
    for (Int ri : r) out[n] += dim_s(n - ri);
    for (Int li : l) out[n] -= dim_s(n - li);
  }
  return out;
}

ModuliCount moduli_count(const DetFormat& fmt) {
  ModuliCount out;
  std::vector<Int> r = fmt.generator_degrees();
  for (size_t i = 0; i < fmt.size(); ++i)
    for (size_t j = i; j < fmt.size(); ++j) out.params += dim_s(fmt.entry_degree(i, j));
  for (size_t i = 0; i < fmt.size(); ++i)
    for (size_t j = 0; j < fmt.size(); ++j) out.gauge += dim_s(r[i] - r[j]);
  out.family_dim = out.params - out.gauge;
  out.all_curves_dim = dim_s(fmt.degree) - 1;
  return out;
}

}  // namespace dp3
