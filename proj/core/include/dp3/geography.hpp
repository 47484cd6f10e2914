#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp3/family.hpp"

namespace dp3 {

enum class Marker { dot, circle, bullet };
const char* to_string(Marker m);

/// Provenance of a curated nonrigid family: either a row of the curated
/// table ("table2:<id>") or one of the classical links.
struct CuratedFamily {
  std::string label;   // "122", "[113]", "000", ...
  std::string source;  // "table2:5", "classical:P3", ...
  bool special_only = false;
};

std::optional<CuratedFamily> curated_nonrigid(const FamilyParams& fam);

struct FamilyEntry {
  FamilyParams fam;
  SigmaPosition sigma = SigmaPosition::outside;
  std::string label;            // empty when unlabeled
  std::string nonrigid_source;  // empty when not curated
};

/// One lattice point (n, d) of the geography with all its families.
/// Markers: bullet when a family is curated nonrigid; else circle when a
/// family has -K exactly on the edge of the L, D_z subcone (boundary sigma
/// position with twist b >= 1, so that D_z really is an edge divisor);
/// else a plain dot.
struct GeographyPoint {
  Int n = 0, d = 0;
  Marker marker = Marker::dot;
  bool k2_strict = false;  // 3d + 5n < 12
  std::vector<FamilyEntry> families;
};

struct GeographyWindow {
  Int n_min = -6, n_max = 2, d_max = 14;
};

/// All admissible families in the window, grouped by (n, d); points ordered
/// by n descending then d ascending, families by (a, b, c).
std::vector<GeographyPoint> enumerate_geography(const GeographyWindow& window = {});

/// Tab-separated, one row per family:
/// n d a b c marker label sigma_position k2_strict nonrigid_source.
std::string render_tsv(const std::vector<GeographyPoint>& points);

/// Static SVG chart: n horizontal, d vertical, the line 3d + 5n = 12, one
/// marker per point, labels per family. Integer coordinates only.
std::string render_svg(const std::vector<GeographyPoint>& points, const GeographyWindow& window);

}  // namespace dp3
