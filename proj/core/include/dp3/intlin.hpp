#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dp3 {

using Int = std::int64_t;

/// Primitive integer vector in the rank-2 character lattice.
struct Vec2 {
  Int x = 0;
  Int y = 0;

  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Int k, const Vec2& v) { return {k * v.x, k * v.y}; }
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Int dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

inline Int gcd(Int a, Int b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

/// v divided by the gcd of its entries, orientation preserved. Zero stays zero.
inline Vec2 primitive(const Vec2& v) {
  Int g = gcd(v.x, v.y);
  if (g == 0) return v;
  return {v.x / g, v.y / g};
}

inline bool parallel_same_ray(const Vec2& a, const Vec2& b) {
  return cross(a, b) == 0 && dot(a, b) > 0;
}

/// Dimension of the space of degree-d forms in nvars variables; 0 for d < 0.
inline Int form_space_dim(Int d, int nvars) {
  if (d < 0) return 0;
  Int r = 1;
  for (int i = 1; i < nvars; ++i) r = r * (d + i) / i;
  return r;
}

/// Floor division that is exact-rational friendly for rendering coordinates.
inline Int round_div(Int num, Int den) {
  if (den < 0) { num = -num; den = -den; }
  if (den == 0) throw std::invalid_argument("round_div: zero denominator");
  Int q = num >= 0 ? (2 * num + den) / (2 * den) : -((-2 * num + den) / (2 * den));
  return q;
}

}  // namespace dp3
