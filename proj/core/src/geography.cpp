#include "dp3/geography.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dp3/links.hpp"

namespace dp3 {

const char* to_string(Marker m) {
  switch (m) {
    case Marker::dot: return "dot";
    case Marker::circle: return "circle";
    case Marker::bullet: return "bullet";
  }
  return "?";
}

namespace {

std::string family_label(Int a, Int b, Int c) {
  if (a <= 9 && b <= 9 && c <= 9)
    return std::to_string(a) + std::to_string(b) + std::to_string(c);
  return std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
}

struct CuratedMap {
  std::map<FamilyParams, CuratedFamily> entries;
};

const CuratedMap& curated_map() {
  static const CuratedMap m = [] {
    CuratedMap cm;
    // Classical links not carried by the curated table.
    cm.entries[{1, 0, 0, 0}] = {"000", "classical:P3", false};
    cm.entries[{0, 0, 0, 1}] = {"001", "classical:Y3_P4", false};
    for (const NonrigidRow& row : nonrigid_table()) {
      auto it = cm.entries.find(row.fam);
      if (it == cm.entries.end()) {
        cm.entries[row.fam] = {row.label, "table2:" + row.id, row.special_only};
      } else {
        it->second.source += ",table2:" + row.id;
        it->second.special_only = it->second.special_only && row.special_only;
      }
    }
    return cm;
  }();
  return m;
}

}  // namespace

std::optional<CuratedFamily> curated_nonrigid(const FamilyParams& fam) {
  const auto& m = curated_map().entries;
  auto it = m.find(fam);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

std::vector<GeographyPoint> enumerate_geography(const GeographyWindow& window) {
  if (window.d_max < 0 || window.n_min > window.n_max)
    throw std::invalid_argument("empty geography window");
  std::vector<GeographyPoint> points;
  for (Int n = window.n_max; n >= window.n_min; --n) {
    for (Int d = 0; d <= window.d_max; ++d) {
      GeographyPoint pt;
      pt.n = n;
      pt.d = d;
      pt.k2_strict = 3 * d + 5 * n < 12;
      bool any_boundary_edge = false;
      bool any_curated = false;
      for (Int a = 0; 3 * a <= d; ++a) {
        for (Int b = a; a + 2 * b <= d; ++b) {
          Int c = d - a - b;
          FamilyParams fam{n, a, b, c};
          if (!admissible(fam).ok) continue;
          if (n + d < 2 * a) throw std::logic_error("admissible family with n + d < 2a");
          FamilyEntry fe;
          fe.fam = fam;
          fe.sigma = sigma_position(fam);
          if (auto cur = curated_nonrigid(fam)) {
            fe.label = cur->label;
            fe.nonrigid_source = cur->source;
            any_curated = true;
          } else if (fe.sigma == SigmaPosition::boundary && b >= 1) {
            // -K lies on the D_z edge of the mobile subcone; with b = 0 the
            // divisor z = 0 moves in |M| and is not an edge, so no bad link.
            fe.label = "(" + family_label(a, b, c) + ")";
            any_boundary_edge = true;
          }
          pt.families.push_back(std::move(fe));
        }
      }
      if (pt.families.empty()) continue;
      pt.marker = any_curated        ? Marker::bullet
                  : any_boundary_edge ? Marker::circle
                                      : Marker::dot;
      points.push_back(std::move(pt));
    }
  }
  return points;
}

std::string render_tsv(const std::vector<GeographyPoint>& points) {
  std::ostringstream out;
  out << "n\td\ta\tb\tc\tmarker\tlabel\tsigma_position\tk2_strict\tnonrigid_source\n";
  for (const auto& pt : points) {
    for (const auto& fe : pt.families) {
      out << pt.n << '\t' << pt.d << '\t' << fe.fam.a << '\t' << fe.fam.b << '\t' << fe.fam.c
          << '\t' << to_string(pt.marker) << '\t' << (fe.label.empty() ? "-" : fe.label) << '\t'
          << to_string(fe.sigma) << '\t' << (pt.k2_strict ? "true" : "false") << '\t'
          << (fe.nonrigid_source.empty() ? "none" : fe.nonrigid_source) << '\n';
    }
  }
  return out.str();
}

namespace {

constexpr Int kSX = 60;      // pixels per n step
constexpr Int kSY = 30;      // pixels per d step
constexpr Int kMarginL = 70;
constexpr Int kMarginR = 40;
constexpr Int kMarginT = 40;
constexpr Int kMarginB = 170;  // room for the legend

struct SvgFrame {
  Int n_min, n_max, d_max, width, height;
  Int x(Int n) const { return kMarginL + (n - n_min) * kSX; }
  Int y(Int d) const { return kMarginT + (d_max - d) * kSY; }
  // Scaled coordinates for rational points num/den along each axis.
  Int x_r(Int num, Int den) const { return kMarginL + round_div((num - n_min * den) * kSX, den); }
  Int y_r(Int num, Int den) const { return kMarginT + round_div((d_max * den - num) * kSY, den); }
};

void svg_text(std::ostringstream& out, Int x, Int y, const std::string& s,
              const char* anchor = "start", int size = 12) {
  out << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
      << "\" font-family=\"monospace\" text-anchor=\"" << anchor << "\">" << s << "</text>\n";
}

}  // namespace

std::string render_svg(const std::vector<GeographyPoint>& points, const GeographyWindow& window) {
  SvgFrame f{window.n_min, window.n_max, window.d_max, 0, 0};
  f.width = kMarginL + kMarginR + (window.n_max - window.n_min) * kSX;
  f.height = kMarginT + kMarginB + window.d_max * kSY;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << f.width
      << "\" height=\"" << f.height << "\" viewBox=\"0 0 " << f.width << " " << f.height
      << "\">\n";
  out << "<rect width=\"" << f.width << "\" height=\"" << f.height << "\" fill=\"white\"/>\n";

  // Axes with ticks; the vertical axis sits at n = 0 when that is inside
  // the window, else at its nearest edge.
  Int axis_n = std::clamp<Int>(0, window.n_min, window.n_max);
  Int x0 = f.x(window.n_min) - 25, x1 = f.x(window.n_max) + 25;
  Int y0 = f.y(0) + 25, y1 = f.y(window.d_max) - 25;
  out << "<line x1=\"" << x0 << "\" y1=\"" << f.y(0) << "\" x2=\"" << x1 << "\" y2=\"" << f.y(0)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << f.x(axis_n) << "\" y1=\"" << y0 << "\" x2=\"" << f.x(axis_n)
      << "\" y2=\"" << y1 << "\" stroke=\"black\"/>\n";
  for (Int n = window.n_min; n <= window.n_max; ++n)
    svg_text(out, f.x(n), f.y(0) + 18, std::to_string(n), "middle", 11);
  for (Int d = 2; d <= window.d_max; d += 2)
    svg_text(out, f.x(axis_n) - 8, f.y(d) + 4, std::to_string(d), "end", 11);
  svg_text(out, x1 + 5, f.y(0) + 4, "n");
  svg_text(out, f.x(axis_n) - 5, y1 - 8, "d");

  // The line 3d + 5n = 12 clipped to the window.
  {
    // Walk candidate intersections with the window box; coordinates are
    // rational with denominators 3 (d at fixed n) and 5 (n at fixed d).
    struct P { Int xn, xd, yn, yd; };
    std::vector<P> pts;
    auto add = [&](Int xn, Int xd, Int yn, Int yd) {
      Int xlo = window.n_min * xd, xhi = window.n_max * xd;
      Int ylo = 0, yhi = window.d_max * yd;
      if (xn < xlo || xn > xhi || yn < ylo || yn > yhi) return;
      for (auto& q : pts)
        if (q.xn * xd == xn * q.xd && q.yn * yd == yn * q.yd) return;
      pts.push_back({xn, xd, yn, yd});
    };
    add(window.n_min, 1, 12 - 5 * window.n_min, 3);        // left edge
    add(window.n_max, 1, 12 - 5 * window.n_max, 3);        // right edge
    add(12, 5, 0, 1);                                      // bottom edge
    add(12 - 3 * window.d_max, 5, window.d_max, 1);        // top edge
    if (pts.size() >= 2) {
      out << "<line x1=\"" << f.x_r(pts[0].xn, pts[0].xd) << "\" y1=\""
          << f.y_r(pts[0].yn, pts[0].yd) << "\" x2=\"" << f.x_r(pts[1].xn, pts[1].xd)
          << "\" y2=\"" << f.y_r(pts[1].yn, pts[1].yd)
          << "\" stroke=\"black\" stroke-dasharray=\"6,3\"/>\n";
      svg_text(out, f.x_r(pts[1].xn, pts[1].xd) + 6, f.y_r(pts[1].yn, pts[1].yd), "3d+5n=12",
               "start", 11);
    }
  }

  for (const auto& pt : points) {
    Int cx = f.x(pt.n), cy = f.y(pt.d);
    switch (pt.marker) {
      case Marker::dot:
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\"black\"/>\n";
        break;
      case Marker::bullet:
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\" fill=\"black\"/>\n";
        break;
      case Marker::circle:
        out << "<circle cx=\"" << cx << "\" cy=\"" << cy
            << "\" r=\"5\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        break;
    }
    Int row = 0;
    for (const auto& fe : pt.families) {
      if (fe.label.empty()) continue;
      svg_text(out, cx + 7, cy - 5 - 12 * row, fe.label, "start", 11);
      ++row;
    }
  }

  // Legend.
  Int ly = f.y(0) + 45;
  out << "<circle cx=\"" << kMarginL << "\" cy=\"" << ly << "\" r=\"2\" fill=\"black\"/>\n";
  svg_text(out, kMarginL + 12, ly + 4, "family of dP3 fibrations exists");
  out << "<circle cx=\"" << kMarginL << "\" cy=\"" << ly + 22 << "\" r=\"5\" fill=\"black\"/>\n";
  svg_text(out, kMarginL + 12, ly + 26, "known nonrigid family (abc general, [abc] special)");
  out << "<circle cx=\"" << kMarginL << "\" cy=\"" << ly + 44
      << "\" r=\"5\" fill=\"none\" stroke=\"black\"/>\n";
  svg_text(out, kMarginL + 12, ly + 48, "2-ray game ends K-trivially for (abc)");
  svg_text(out, kMarginL, ly + 70, "dashed line: 3d+5n=12");
  out << "</svg>\n";
  return out.str();
}

}  // namespace dp3
