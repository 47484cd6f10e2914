#include "dp3/scroll.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dp3 {

namespace {

void append_term(std::string& out, Int coeff, const char* sym) {
  if (coeff == 0) return;
  if (out.empty()) {
    if (coeff == -1) out += "-";
    else if (coeff != 1) out += std::to_string(coeff);
  } else {
    out += coeff > 0 ? "+" : "-";
    Int a = coeff > 0 ? coeff : -coeff;
    if (a != 1) out += std::to_string(a);
  }
  out += sym;
}

// Extreme rays of a strictly convex cone: a pair (i, j) with cross(c_i, c_j) > 0
// and every column between them. Empty if the columns do not fit in an open
// half-plane.
std::optional<std::pair<int, int>> extreme_pair(const std::vector<DivClass>& cols) {
  int n = static_cast<int>(cols.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cross(cols[i].vec(), cols[j].vec()) <= 0) continue;
      bool ok = true;
      for (int k = 0; k < n && ok; ++k) {
        ok = cross(cols[i].vec(), cols[k].vec()) >= 0 &&
             cross(cols[k].vec(), cols[j].vec()) >= 0;
      }
      if (ok) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

}  // namespace

std::string DivClass::str() const {
  if (m == 0 && l == 0) return "0";
  std::string out;
  append_term(out, m, "M");
  append_term(out, l, "L");
  return out;
}

Int Monomial::total_degree() const {
  Int s = 0;
  for (Int x : e) s += x;
  return s;
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
  }
  return out.empty() ? "1" : out;
}

WeightMatrix WeightMatrix::from_rows(const std::vector<Int>& lambda_row,
                                     const std::vector<Int>& mu_row,
                                     std::vector<std::string> names) {
  if (lambda_row.size() != mu_row.size())
    throw std::invalid_argument("weight matrix rows differ in length");
  WeightMatrix mat;
  for (size_t i = 0; i < lambda_row.size(); ++i)
    mat.cols.push_back(DivClass{mu_row[i], lambda_row[i]});
  mat.names = names.empty() ? default_names(mat.ncols()) : std::move(names);
  mat.validate();
  return mat;
}

std::vector<Int> WeightMatrix::lambda_row() const {
  std::vector<Int> r;
  for (const auto& c : cols) r.push_back(c.l);
  return r;
}

std::vector<Int> WeightMatrix::mu_row() const {
  std::vector<Int> r;
  for (const auto& c : cols) r.push_back(c.m);
  return r;
}

std::vector<std::vector<Int>> WeightMatrix::display_rows() const {
  return {mu_row(), lambda_row()};
}

void WeightMatrix::validate() const {
  if (cols.size() < 4) throw std::invalid_argument("weight matrix needs at least 4 columns");
  if (names.size() != cols.size())
    throw std::invalid_argument("weight matrix has mismatched coordinate names");
  bool rank2 = false;
  for (const auto& c : cols) {
    if (c.vec().is_zero()) throw std::invalid_argument("weight matrix has a zero column");
    if (cross(cols[0].vec(), c.vec()) != 0) rank2 = true;
  }
  if (!rank2) throw std::invalid_argument("weight matrix rows are linearly dependent");
  if (!extreme_pair(cols))
    throw std::invalid_argument("column rays do not span a strictly convex cone");
}

Int StandardScroll::twist_sum() const {
  Int s = 0;
  for (Int a : twists) s += a;
  return s;
}

std::string StandardScroll::str() const {
  std::string out = "F(";
  for (size_t i = 0; i < twists.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(twists[i]);
  }
  out += ")/P" + std::to_string(base_dim);
  return out;
}

WeightMatrix weight_matrix(const StandardScroll& scroll) {
  if (scroll.base_dim != 1 && scroll.base_dim != 2)
    throw std::invalid_argument("scroll base must be P1 or P2");
  for (Int a : scroll.twists)
    if (a < 0) throw std::invalid_argument("scroll twists must be nonnegative");
  WeightMatrix mat;
  static const char* base_names[] = {"u", "v", "w"};
  for (int i = 0; i <= scroll.base_dim; ++i) {
    mat.cols.push_back(DivClass{0, 1});  // L
    mat.names.push_back(base_names[i]);
  }
  static const char* fibre_names[] = {"x", "y", "z", "t"};
  for (size_t i = 0; i < scroll.twists.size(); ++i) {
    mat.cols.push_back(DivClass{1, -scroll.twists[i]});  // M - a_i L
    mat.names.push_back(i < 4 ? fibre_names[i] : "x" + std::to_string(i));
  }
  mat.validate();
  return mat;
}

WeightMatrix apply(const BasisChange& t, const WeightMatrix& mat) {
  Int det = t.det();
  if (det != 1 && det != -1)
    throw std::invalid_argument("basis change must be unimodular");
  WeightMatrix out = mat;
  for (auto& c : out.cols) c = apply(t, c);
  return out;
}

DivClass apply(const BasisChange& t, const DivClass& cls) {
  Int det = t.det();
  if (det != 1 && det != -1)
    throw std::invalid_argument("basis change must be unimodular");
  Vec2 v = cls.vec();
  return DivClass::from_vec({t.a * v.x + t.b * v.y, t.c * v.x + t.d * v.y});
}

WeightMatrix extend(const WeightMatrix& mat, const DivClass& cls, const std::string& name) {
  mat.validate();
  Vec2 v = cls.vec();
  if (v.is_zero()) throw std::invalid_argument("cannot extend by the zero class");
  auto ext = extreme_pair(mat.cols);
  const Vec2 first = mat.cols[ext->first].vec();
  if (cross(v, first) > 0)
    throw std::invalid_argument("extension ray lies before the base edge of the cone");

  WeightMatrix out = mat;
  out.cols.push_back(cls);
  out.names.push_back(name);
  if (!extreme_pair(out.cols))
    throw std::invalid_argument("extension ray breaks convexity of the column cone");

  // Insert in slope order, after existing columns on the same ray.
  int pos = 0;
  for (int i = 0; i < mat.ncols(); ++i) {
    Int cr = cross(mat.cols[i].vec(), v);
    if (cr > 0 || (cr == 0 && dot(mat.cols[i].vec(), v) > 0)) pos = i + 1;
  }
  out.cols.pop_back();
  out.names.pop_back();
  out.cols.insert(out.cols.begin() + pos, cls);
  out.names.insert(out.names.begin() + pos, name);
  return out;
}

std::vector<Monomial> sections(const WeightMatrix& mat, const DivClass& cls) {
  mat.validate();
  auto ext = extreme_pair(mat.cols);
  if (!ext) throw std::runtime_error("section enumeration would not terminate");
  // A functional positive on every column bounds total exponent size.
  const Vec2 p = mat.cols[ext->first].vec();
  const Vec2 q = mat.cols[ext->second].vec();
  const Vec2 phi{-p.y + q.y, p.x - q.x};  // perp_ccw(p) + perp_cw(q)

  const int n = mat.ncols();
  std::vector<Int> weight(n);
  for (int i = 0; i < n; ++i) {
    weight[i] = dot(phi, mat.cols[i].vec());
    if (weight[i] <= 0) throw std::runtime_error("positive functional failed on a column");
  }

  std::vector<Monomial> out;
  std::vector<Int> e(n, 0);
  // Depth-first over exponents; the functional value of the remaining target
  // decreases strictly with every exponent unit.
  auto rec = [&](auto&& self, int i, Vec2 rem) -> void {
    if (i == n) {
      if (rem.is_zero()) out.push_back(Monomial{e});
      return;
    }
    Int capacity = dot(phi, rem);
    for (Int k = 0; k * weight[i] <= capacity; ++k) {
      e[i] = k;
      self(self, i + 1, {rem.x - k * mat.cols[i].vec().x, rem.y - k * mat.cols[i].vec().y});
    }
    e[i] = 0;
  };
  rec(rec, 0, cls.vec());

  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    Int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    for (size_t i = a.e.size(); i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  });
  return out;
}

Int section_count(const WeightMatrix& mat, const DivClass& cls) {
  return static_cast<Int>(sections(mat, cls).size());
}

Int walk_compare(const DivClass& a, const DivClass& b) {
  Int cr = cross(a.vec(), b.vec());
  if (cr != 0) return -cr;  // a before b when cross(a,b) > 0
  return 0;
}

ChamberDecomposition chamber_decomposition(const WeightMatrix& mat) {
  mat.validate();
  ChamberDecomposition dec;
  const int n = mat.ncols();
  dec.walk.resize(n);
  for (int i = 0; i < n; ++i) dec.walk[i] = i;
  std::stable_sort(dec.walk.begin(), dec.walk.end(), [&](int i, int j) {
    return cross(mat.cols[i].vec(), mat.cols[j].vec()) > 0;
  });

  for (int idx : dec.walk) {
    DivClass r = mat.cols[idx].ray();
    if (dec.rays.empty() || !(dec.rays.back() == r)) dec.rays.push_back(r);
  }
  if (dec.rays.size() < 2) throw std::invalid_argument("degenerate: fewer than 2 distinct rays");

  dec.mobile_edge = mat.cols[dec.walk[n - 2]].ray();
  dec.terminal_ray = mat.cols[dec.walk[n - 1]].ray();

  size_t edge_idx = 0;
  while (!(dec.rays[edge_idx] == dec.mobile_edge)) ++edge_idx;
  for (size_t j = 0; j + 1 <= edge_idx; ++j) {
    Chamber ch;
    ch.lo = dec.rays[j];
    ch.hi = dec.rays[j + 1];
    for (int i = 0; i < n; ++i) {
      if (walk_compare(mat.cols[i].ray(), ch.lo) <= 0) ch.left_block.push_back(i);
      else if (walk_compare(mat.cols[i].ray(), ch.hi) >= 0) ch.right_block.push_back(i);
      else throw std::runtime_error("column ray strictly inside a chamber");
    }
    dec.chambers.push_back(std::move(ch));
  }
  return dec;
}

std::vector<DivClass> ChamberDecomposition::interior_walls() const {
  std::vector<DivClass> walls;
  for (size_t j = 1; j < chambers.size(); ++j) walls.push_back(chambers[j].lo);
  return walls;
}

DivClass mobile_edge(const WeightMatrix& mat) {
  return chamber_decomposition(mat).mobile_edge;
}

}  // namespace dp3
