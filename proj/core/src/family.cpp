#include "dp3/family.hpp"

#include <stdexcept>
#include <tuple>

namespace dp3 {

std::string FamilyParams::str() const {
  return "(" + std::to_string(n) + "; " + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

bool operator<(const FamilyParams& x, const FamilyParams& y) {
  return std::tie(x.n, x.a, x.b, x.c) < std::tie(y.n, y.a, y.b, y.c);
}

Admissibility admissible(const FamilyParams& fam) {
  if (!(0 <= fam.a && fam.a <= fam.b && fam.b <= fam.c))
    throw std::invalid_argument("family twists must satisfy 0 <= a <= b <= c");
  if (fam.n < -3 * fam.a)
    return {false, "n >= -3a fails: the surface z=t=0 lies in the base locus"};
  if (fam.n < 0 && fam.a == fam.b && fam.n == -3 * fam.a)
    return {false, "excluded: a=b with n=-3a, every member contains a surface t=linear=0"};
  if (fam.n < 0 && fam.n < -fam.c)
    return {false, "n >= -c fails: general member singular along the negative section"};
  if (fam.n == 0 && fam.d() == 0)
    return {false, "trivial constant family of cubic surfaces"};
  return {true, ""};
}

Int sigma_margin(const FamilyParams& fam) { return 2 - fam.a - fam.c - fam.n; }

SigmaPosition sigma_position(const FamilyParams& fam) {
  Int s = sigma_margin(fam);
  if (s > 0) return SigmaPosition::interior;
  if (s == 0) return SigmaPosition::boundary;
  return SigmaPosition::outside;
}

const char* to_string(SigmaPosition p) {
  switch (p) {
    case SigmaPosition::interior: return "interior";
    case SigmaPosition::boundary: return "boundary";
    case SigmaPosition::outside: return "outside";
  }
  return "?";
}

}  // namespace dp3
