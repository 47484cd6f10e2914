#include "dp3/json_io.hpp"

#include <stdexcept>

namespace dp3 {

Json to_json(const DivClass& c) {
  return Json{{"m", c.m}, {"l", c.l}, {"text", c.str()}};
}

Json to_json(const WeightMatrix& m) {
  Json j;
  j["rows"] = m.display_rows();
  j["names"] = m.names;
  return j;
}

Json to_json(const FamilyParams& f) {
  return Json{{"n", f.n}, {"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.d()}};
}

Json to_json(const NewtonTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"monomial", r.mono.str()},
                        {"exponents", r.mono.e},
                        {"coefficient_degree", r.degree}});
  return Json{{"family", to_json(t.fam)}, {"rows", rows}};
}

Json to_json(const LinkTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    steps.push_back(Json{{"wall", to_json(s.wall)},
                         {"kind", to_string(s.kind)},
                         {"k_pairing", s.k_pairing},
                         {"before_block", s.before_block},
                         {"on_wall", s.on_wall},
                         {"after_block", s.after_block},
                         {"wall_weights", s.wall_weights}});
  }
  Json terminal{{"ray", to_json(t.terminal.ray)},
                {"far_block", t.terminal.far_block},
                {"section_counts", t.terminal.section_counts},
                {"heuristic", t.terminal.heuristic}};
  return Json{{"family", to_json(t.fam)},
              {"ambient", to_json(t.ambient)},
              {"anticanonical", to_json(t.anticanonical)},
              {"steps", steps},
              {"terminal", terminal},
              {"curated", t.curated}};
}

Json to_json(const NonrigidRow& r) {
  Json ext = Json::array();
  for (const auto& e : r.extensions) ext.push_back(to_json(e));
  Json j{{"id", r.id},
         {"family", to_json(r.fam)},
         {"mu", r.mu},
         {"extensions", ext},
         {"extension_names", r.extension_names},
         {"extensions_reconstructed", r.extensions_reconstructed},
         {"special_only", r.special_only},
         {"label", r.label},
         {"opening", r.opening},
         {"link", r.link_moves},
         {"other_model", r.other_model},
         {"other_model_uncertain", r.other_model_uncertain}};
  if (!r.singular_member_equation.empty())
    j["singular_member_equation"] = r.singular_member_equation;
  if (r.other_model_scroll) {
    j["other_model_scroll"] = to_json(*r.other_model_scroll);
    j["other_model_class"] = r.other_model_class;
  }
  return j;
}

Json to_json(const DetFormat& f) {
  return Json{{"degree", f.degree},
              {"e", f.e},
              {"diagonal_degrees", f.diag},
              {"partition", f.partition_str()},
              {"entry_degrees", f.entry_matrix()},
              {"generator_degrees", f.generator_degrees()},
              {"relation_degrees", f.relation_degrees()}};
}

Json geography_json(const std::vector<GeographyPoint>& points) {
  Json out = Json::array();
  for (const auto& pt : points) {
    Json fams = Json::array();
    for (const auto& fe : pt.families) {
      fams.push_back(Json{{"a", fe.fam.a},
                          {"b", fe.fam.b},
                          {"c", fe.fam.c},
                          {"sigma_position", to_string(fe.sigma)},
                          {"label", fe.label},
                          {"nonrigid_source", fe.nonrigid_source}});
    }
    out.push_back(Json{{"n", pt.n},
                       {"d", pt.d},
                       {"marker", to_string(pt.marker)},
                       {"k2_strict", pt.k2_strict},
                       {"families", fams}});
  }
  return out;
}

Json family_report_json(const FamilyParams& fam) {
  Json j;
  j["family"] = to_json(fam);
  Admissibility adm = admissible(fam);
  j["admissible"] = adm.ok;
  if (!adm.ok) {
    j["reason"] = adm.reason;
    return j;
  }
  auto k2 = canonical_square(fam);
  auto table = newton_table(fam);
  j["anticanonical"] = to_json(anticanonical(fam));
  j["anticanonical_dot_gamma"] = anticanonical_dot_gamma(fam);
  j["k2"] = Json{{"gamma", k2.cycle.gamma},
                 {"m2l", k2.cycle.m2l},
                 {"interior", k2.interior},
                 {"iff_known", k2.iff_known}};
  j["sigma_position"] = to_string(sigma_position(fam));
  j["sigma_margin"] = sigma_margin(fam);
  j["newton_rows"] = table.rows.size();
  if (!table.rows.empty()) j["val"] = valuation(table);
  return j;
}

Json theta_report_json(Int degree, int e, const std::vector<Int>& h0, const DetFormat& fmt,
                       const std::vector<Int>& series, const ModuliCount& moduli) {
  Json j;
  j["degree"] = degree;
  j["e"] = e;
  if (!h0.empty()) j["h0"] = h0;
  j["format"] = to_json(fmt);
  j["hilbert_series"] = series;
  j["moduli"] = Json{{"params", moduli.params},
                     {"gauge", moduli.gauge},
                     {"family_dim", moduli.family_dim},
                     {"all_curves_dim", moduli.all_curves_dim}};
  return j;
}

DivisibilityProfile profile_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("profile must be a JSON object");
  DivisibilityProfile p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto mono = FibreMonomial::parse(it.key());
    if (!mono) throw std::invalid_argument("not a cubic fibre monomial: " + it.key());
    if (!it.value().is_number_integer() || it.value().get<Int>() < 0)
      throw std::invalid_argument("profile power must be a nonnegative integer");
    p[*mono] = it.value().get<Int>();
  }
  return p;
}

}  // namespace dp3
