#include "dp3/links.hpp"

#include <algorithm>
#include <stdexcept>

namespace dp3 {

const char* to_string(WallKind k) {
  switch (k) {
    case WallKind::antiflip: return "antiflip";
    case WallKind::flop: return "flop";
    case WallKind::flip: return "flip";
  }
  return "?";
}

LinkTrace trace_link(const FamilyParams& fam, const std::vector<DivClass>& extensions,
                     std::vector<std::string> extension_names) {
  Admissibility adm = admissible(fam);
  if (!adm.ok) throw std::invalid_argument("inadmissible family " + fam.str() + ": " + adm.reason);

  static const char* kExtNames[] = {"xi", "eta"};
  WeightMatrix mat = weight_matrix(ambient_scroll(fam));
  for (size_t i = 0; i < extensions.size(); ++i) {
    std::string name = i < extension_names.size() ? extension_names[i]
                       : i < 2                    ? kExtNames[i]
                                                  : "w" + std::to_string(i + 1);
    mat = extend(mat, extensions[i], name);
  }

  LinkTrace tr;
  tr.fam = fam;
  tr.ambient = mat;
  tr.anticanonical = anticanonical(fam);

  ChamberDecomposition dec = chamber_decomposition(mat);
  const Vec2 mk = tr.anticanonical.vec();

  bool first = true;
  for (const DivClass& wall : dec.interior_walls()) {
    LinkStep step;
    step.wall = wall;
    Int pos = cross(wall.vec(), mk);  // > 0: -K strictly past the wall
    step.kind = pos > 0 ? WallKind::antiflip : pos < 0 ? WallKind::flip : WallKind::flop;
    step.k_pairing = first ? anticanonical_dot_gamma(fam) : (pos > 0) - (pos < 0);
    for (int i = 0; i < mat.ncols(); ++i) {
      Int cr = cross(mat.cols[i].vec(), wall.vec());
      step.wall_weights.push_back(cr);
      if (cr > 0) step.before_block.push_back(mat.names[i]);
      else if (cr < 0) step.after_block.push_back(mat.names[i]);
      else step.on_wall.push_back(mat.names[i]);
    }
    tr.steps.push_back(std::move(step));
    first = false;
  }

  tr.terminal.ray = dec.mobile_edge;
  for (int i = 0; i < mat.ncols(); ++i)
    if (mat.cols[i].ray() == dec.mobile_edge) tr.terminal.far_block.push_back(mat.names[i]);
  for (Int k = 1; k <= 3; ++k)
    tr.terminal.section_counts.push_back(section_count(mat, k * dec.mobile_edge));
  tr.terminal.heuristic =
      tr.terminal.far_block.size() >= 2
          ? "fibration over P^" + std::to_string(tr.terminal.far_block.size() - 1) +
                " (ambient heuristic)"
          : "divisorial contraction (ambient heuristic)";

  for (const NonrigidRow& row : nonrigid_table()) {
    if (!(row.fam == fam)) continue;
    std::vector<DivClass> re = row.extensions, ge = extensions;
    std::sort(re.begin(), re.end());
    std::sort(ge.begin(), ge.end());
    if (re != ge) continue;
    tr.curated.push_back("no. " + row.id + ": " + row.link_moves + "; other model: " +
                         row.other_model + (row.other_model_uncertain ? " (uncertain)" : ""));
  }
  return tr;
}

namespace {

WeightMatrix display_matrix(std::vector<Int> mu_row, std::vector<Int> lambda_row) {
  return WeightMatrix::from_rows(lambda_row, mu_row, {"u", "v", "x", "y", "z", "t"});
}

std::vector<NonrigidRow> build_table() {
  std::vector<NonrigidRow> rows;

  NonrigidRow r1;
  r1.id = "1";
  r1.fam = {1, 0, 0, 1};
  r1.mu = 3;
  r1.extensions = {DivClass{3, -1}};
  r1.extension_names = {"xi"};
  r1.extensions_reconstructed = true;
  r1.label = "001";
  r1.opening = "flop";
  r1.link_moves = "9-flop, then (2,0) contraction to a 1/2(1,1,1) point";
  r1.other_model = "Y'_{3,3} in P5(1^5,2), general in its family";
  rows.push_back(r1);

  NonrigidRow r2;
  r2.id = "2";
  r2.fam = {0, 0, 1, 1};
  r2.mu = 1;
  r2.label = "011";
  r2.opening = "flop";
  r2.link_moves = "3-flop";
  r2.other_model = "dP3 fibration with the same numerology as X";
  rows.push_back(r2);

  NonrigidRow r3;
  r3.id = "3";
  r3.fam = {-1, 1, 1, 1};
  r3.mu = 1;
  r3.label = "111";
  r3.opening = "flop";
  r3.link_moves = "flop";
  r3.other_model = "conic bundle over P2 with discriminant curve of degree 7";
  rows.push_back(r3);

  NonrigidRow r4;
  r4.id = "4";
  r4.fam = {-2, 1, 1, 2};
  r4.mu = 1;
  r4.label = "112";
  r4.opening = "flop";
  r4.link_moves = "flop, then (2,1) contraction to a linear P1 in Y'";
  r4.other_model = "Y'_4 in P4(1^4,2)";
  rows.push_back(r4);

  NonrigidRow r5;
  r5.id = "5";
  r5.fam = {-2, 1, 2, 2};
  r5.mu = 1;
  r5.label = "122";
  r5.opening = "antiflip";
  r5.link_moves = "Francia antiflip, then flop";
  r5.other_model = "dP2 fibration with a 1/2(1,1,1) point on one fibre";
  r5.other_model_scroll = display_matrix({0, 0, 1, 2, 1, 1}, {1, 1, 0, -1, -1, -1});
  r5.other_model_class = "4M-L";
  rows.push_back(r5);

  NonrigidRow r6;
  r6.id = "6";
  r6.fam = {-3, 1, 2, 3};
  r6.mu = 1;
  r6.label = "123";
  r6.opening = "antiflip";
  r6.link_moves = "Francia antiflip, then (2,0) contraction to P in Y'";
  r6.other_model = "Y'_6 in P4(1^3,2,3), P a cD4 point";
  rows.push_back(r6);

  NonrigidRow r7;
  r7.id = "7";
  r7.fam = {-3, 1, 3, 3};
  r7.mu = 1;
  r7.label = "133";
  r7.opening = "antiflip";
  r7.link_moves = "toric antiflip (1,1,-1,-3)";
  r7.other_model = "dP1 fibration with a 1/3(1,1,2) point on one fibre";
  r7.other_model_scroll = display_matrix({0, 0, 2, 3, 1, 1}, {1, 1, -1, -2, -1, -1});
  r7.other_model_class = "6M-3L";
  rows.push_back(r7);

  NonrigidRow r8a;
  r8a.id = "8a";
  r8a.fam = {-1, 1, 1, 2};
  r8a.mu = 5;
  r8a.extensions = {DivClass{3, -3}, DivClass{5, -6}};
  r8a.extension_names = {"xi", "eta"};
  r8a.special_only = true;
  r8a.label = "[112]";
  r8a.opening = "antiflip";
  r8a.link_moves = "antiflip (1,1,-1,-1,-3), 7-flop, (2,0) contraction";
  r8a.other_model = "Y' in P(1^4,2,3,4), general, P = 1/4(1,1,3)";
  r8a.singular_member_equation = "xy = zt";
  rows.push_back(r8a);

  NonrigidRow r8b;
  r8b.id = "8b";
  r8b.fam = {-1, 1, 1, 2};
  r8b.mu = 3;
  r8b.extensions = {DivClass{3, -4}};
  r8b.extension_names = {"eta"};
  r8b.special_only = true;
  r8b.label = "[112]";
  r8b.opening = "antiflip";
  r8b.link_moves = "antiflip (1,1,-1,-1,-4), 3-flop, (2,0) contraction";
  r8b.other_model = "Y' in P5(1^4,2^2)";
  r8b.other_model_uncertain = true;
  r8b.singular_member_equation = "xy = z^3 + t^3";
  rows.push_back(r8b);

  NonrigidRow r9;
  r9.id = "9";
  r9.fam = {-2, 1, 1, 3};
  r9.mu = 3;
  r9.extensions = {DivClass{3, -4}};
  r9.extension_names = {"eta"};
  r9.extensions_reconstructed = true;
  r9.special_only = true;
  r9.label = "[113]";
  r9.opening = "antiflip";
  r9.link_moves = "antiflip (1,1,-1,-1,-4), 3-flop, (2,0) contraction";
  r9.other_model = "Y' in P5(1^2,2^2,3,5)";
  r9.other_model_uncertain = true;
  r9.singular_member_equation = "xy = z^3 + t^3";
  rows.push_back(r9);

  NonrigidRow r10;
  r10.id = "10";
  r10.fam = {-2, 1, 2, 3};
  r10.mu = 3;
  r10.extensions = {DivClass{3, -7}};
  r10.extension_names = {"eta"};
  r10.extensions_reconstructed = true;
  r10.special_only = true;
  r10.label = "[123]";
  r10.opening = "antiflip";
  r10.link_moves = "antiflip (1,1,-1,-2,-7), (2,0) contraction";
  r10.other_model = "Y' in P5(1^2,2^3,3)";
  r10.other_model_uncertain = true;
  r10.singular_member_equation = "xy = z^3 + t^6";
  rows.push_back(r10);

  for (const auto& row : rows)
    if (!admissible(row.fam).ok) throw std::logic_error("curated row " + row.id + " inadmissible");
  return rows;
}

}  // namespace

const std::vector<NonrigidRow>& nonrigid_table() {
  static const std::vector<NonrigidRow> table = build_table();
  return table;
}

WeightMatrix row_scroll(const NonrigidRow& row) {
  WeightMatrix mat = weight_matrix(ambient_scroll(row.fam));
  for (size_t i = 0; i < row.extensions.size(); ++i)
    mat = extend(mat, row.extensions[i],
                 i < row.extension_names.size() ? row.extension_names[i]
                                                : "w" + std::to_string(i + 1));
  return mat;
}

MuCheck verify_mu(const NonrigidRow& row) {
  MuCheck out;
  out.expected = row.mu * anticanonical(row.fam) - DivClass{0, 1};
  out.edge = mobile_edge(row_scroll(row));
  out.ok = out.expected.ray() == out.edge.ray();
  return out;
}

FirstWallCheck verify_first_wall(const NonrigidRow& row) {
  FirstWallCheck out;
  out.k_gamma = anticanonical_dot_gamma(row.fam);
  out.opening = row.opening;
  out.ok = row.opening == "flop" ? out.k_gamma == 0 : out.k_gamma < 0;
  return out;
}

}  // namespace dp3
