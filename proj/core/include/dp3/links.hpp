#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dp3/chow.hpp"
#include "dp3/family.hpp"
#include "dp3/scroll.hpp"

namespace dp3 {

enum class WallKind { antiflip, flop, flip };
const char* to_string(WallKind k);

/// One interior wall of the ambient 2-ray game. The kind is the ambient
/// heuristic read off the position of -K: on the wall ray a flop, strictly
/// past it in walk order an antiflip, strictly before it a flip. On the first
/// wall k_pairing is -K . Gamma; afterwards it is the position sign.
struct LinkStep {
  DivClass wall;
  WallKind kind = WallKind::flop;
  Int k_pairing = 0;
  std::vector<std::string> before_block;  // coordinates strictly before the wall
  std::vector<std::string> on_wall;
  std::vector<std::string> after_block;
  std::vector<Int> wall_weights;  // cross(column, wall) for every column
};

/// The contraction at the far edge of the mobile cone. far_block lists the
/// coordinates on the edge ray: two or more suggest a fibration over the
/// corresponding projective space, a single one a divisorial contraction.
/// Both readings are ambient heuristics only.
struct TerminalReport {
  DivClass ray;
  std::vector<std::string> far_block;
  std::vector<Int> section_counts;  // sections of k * ray for k = 1, 2, 3
  std::string heuristic;
};

struct LinkTrace {
  FamilyParams fam;
  WeightMatrix ambient;  // the (possibly extended) scroll
  DivClass anticanonical;
  std::vector<LinkStep> steps;
  TerminalReport terminal;
  std::vector<std::string> curated;  // X-level interpretation when known
};

/// Walk the ambient chamber decomposition of F(0,a,b,c), optionally extended
/// by unprojection-variable classes, and classify each wall against -K.
/// Extension coordinates are named xi, eta, w3, ... unless names are given.
LinkTrace trace_link(const FamilyParams& fam, const std::vector<DivClass>& extensions = {},
                     std::vector<std::string> extension_names = {});

/// A curated family known to be nonrigid, with its link data.
struct NonrigidRow {
  std::string id;  // "1".."7", "8a", "8b", "9", "10"
  FamilyParams fam;
  Int mu = 1;  // -mu K - L spans the far edge of the mobile cone
  std::vector<DivClass> extensions;
  std::vector<std::string> extension_names;
  bool extensions_reconstructed = false;  // classes inferred from mu, not quoted
  bool special_only = false;              // only special members admit the link
  std::string label;                      // geography label, e.g. "122" or "[113]"
  std::string opening;                    // "flop" or "antiflip"
  std::string link_moves;
  std::string other_model;
  bool other_model_uncertain = false;
  std::string singular_member_equation;  // for the special-member rows
  std::optional<WeightMatrix> other_model_scroll;
  std::string other_model_class;
};

const std::vector<NonrigidRow>& nonrigid_table();

WeightMatrix row_scroll(const NonrigidRow& row);  // ambient with extensions applied

struct MuCheck {
  bool ok = false;
  DivClass expected;  // -mu K - L
  DivClass edge;      // mobile edge of the (extended) scroll
};
MuCheck verify_mu(const NonrigidRow& row);

struct FirstWallCheck {
  bool ok = false;
  Int k_gamma = 0;      // -K . Gamma
  std::string opening;  // expected opening move
};
/// Opening move against the sign of -K . Gamma: flop rows need 0, antiflip
/// rows need a negative value.
FirstWallCheck verify_first_wall(const NonrigidRow& row);

}  // namespace dp3
