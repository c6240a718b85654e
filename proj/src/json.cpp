#include "legruling/json.hpp"

namespace legruling {

using nlohmann::json;

json coefficient_json(const Coefficient& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

json to_json(const LaurentPoly2& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"v", e.v}, {"z", e.z}, {"c", coefficient_json(c)}});
  return out;
}

json to_json(const LaurentPoly1& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"z", e}, {"c", coefficient_json(c)}});
  return out;
}

json exponent_map_json(const LaurentPoly1& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = coefficient_json(c);
  return out;
}

json to_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"event", x.event}, {"message", x.message}});
  return {{"ok", r.ok()}, {"violations", v}};
}

json to_json(const OrientedFront& f) {
  const auto& inv = f.invariants();
  json crossings = json::array();
  for (int id = 1; id <= f.num_crossings(); ++id) {
    crossings.push_back({{"id", id}, {"sign", f.crossing_sign(id)}, {"index", f.crossing_index(id)}});
  }
  json strands = json::array();
  const auto& comps = f.components();
  for (std::size_t s = 0; s < comps.component.size(); ++s) {
    strands.push_back({{"component", comps.component[s]},
                       {"direction", comps.direction[s] == Direction::Rightward ? "right" : "left"},
                       {"maslov", f.maslov().potential[s]}});
  }
  return {{"name", f.front().name},
          {"components", f.num_components()},
          {"tb", inv.tb},
          {"writhe", inv.writhe},
          {"right_cusps", inv.num_right_cusps},
          {"rotation", inv.rot_per_component},
          {"r", inv.r},
          {"maslov_modulus", f.maslov().modulus},
          {"strands", strands},
          {"crossings", crossings}};
}

json to_json(const Ruling& r) {
  return {{"switches", r.switches},
          {"eyes", r.eyes},
          {"theta", r.theta},
          {"class", to_string(r.grading)},
          {"orientable", r.orientable},
          {"genus", r.genus ? json(*r.genus) : json(nullptr)}};
}

json to_json(const RulingCensus& c, GradingClass listed) {
  json rulings = json::array();
  for (const auto& r : c.rulings(listed)) rulings.push_back(to_json(r));
  return {{"class", to_string(listed)},
          {"count", c.rulings(listed).size()},
          {"rulings", rulings},
          {"polynomials",
           {{"ungraded", exponent_map_json(c.ungraded_poly)},
            {"two_graded", exponent_map_json(c.two_graded_poly)},
            {"z_graded", exponent_map_json(c.z_graded_poly)}}}};
}

json to_json(const RutherfordCheck& r) {
  return {{"tb", r.tb},
          {"two_graded", {{"pass", r.two_graded_pass()}, {"homfly_slice", to_json(r.homfly_slice)}, {"ruling_polynomial", to_json(r.two_graded_poly)}}},
          {"ungraded", {{"pass", r.ungraded_pass()}, {"kauffman_slice", to_json(r.kauffman_slice)}, {"ruling_polynomial", to_json(r.ungraded_poly)}}}};
}

json to_json(const MaxTbCertificate& c) {
  return {{"tb", c.tb}, {"e", c.e}, {"maximal", c.maximal}, {"has_two_graded_ruling", c.has_two_graded_ruling},
          {"consistent", c.consistent()}};
}

json to_json(const NoRulingFlags& f) {
  return {{"khovanov_beats_homfly", f.khovanov_beats_homfly ? json(*f.khovanov_beats_homfly) : json("not_evaluated")},
          {"kauffman_beats_homfly", f.kauffman_beats_homfly},
          {"negative_counts", f.negative_counts},
          {"subset_failure", f.subset_failure},
          {"any", f.any()}};
}

json to_json(const RhoReport& r) {
  return {{"kind", to_string(r.kind)},
          {"value", r.value ? json(*r.value) : json(nullptr)},
          {"reason", r.reason},
          {"consistent", r.consistent}};
}

json to_json(const GenusTests& g) {
  return {{"e", g.e},
          {"M", g.M},
          {"conway_degree", g.conway_degree ? json(*g.conway_degree) : json(nullptr)},
          {"bennequin_test", g.bennequin},
          {"conway_test", g.conway}};
}

json to_json(const GenusChain& t) {
  return {{"max_ruling_genus", t.max_ruling_genus ? json(*t.max_ruling_genus) : json(nullptr)},
          {"M", t.M},
          {"max_z_degree", t.max_z_degree},
          {"seifert_genus", t.seifert_genus},
          {"note", "Seifert-algorithm genus of this diagram stands in for the canonical genus (an upper bound for it)"},
          {"holds", t.holds()}};
}

json to_json(const ConnsumCheck& c) {
  json classes = json::array();
  for (const auto& pc : c.classes) {
    classes.push_back({{"class", to_string(pc.grading)},
                       {"count_left", pc.count_left},
                       {"count_right", pc.count_right},
                       {"count_sum", pc.count_sum},
                       {"product_bijection", pc.product_bijection},
                       {"polynomial_multiplicative", pc.polynomial_multiplicative}});
  }
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  return {{"name", c.name},
          {"classes", classes},
          {"genus_left", opt(c.genus_left)},
          {"genus_right", opt(c.genus_right)},
          {"genus_sum", opt(c.genus_sum)},
          {"pass", c.pass()}};
}

json to_json(const AnalysisReport& r) {
  json out = {{"name", r.name},
              {"components", r.components},
              {"tb", r.invariants.tb},
              {"r", r.invariants.r},
              {"homfly", to_json(r.polynomials.homfly)},
              {"kauffman", to_json(r.polynomials.kauffman)},
              {"conway", to_json(r.polynomials.conway)},
              {"ruling_counts",
               {{"ungraded", r.census.ungraded.size()},
                {"two_graded", r.census.two_graded.size()},
                {"z_graded", r.census.z_graded.size()}}},
              {"rutherford", to_json(r.rutherford)},
              {"max_tb_certificate", to_json(r.max_tb)},
              {"rho", to_json(r.rho)},
              {"no_ruling_tests", to_json(r.no_ruling)},
              {"khovanov_bound_input", r.khovanov_bound ? json(*r.khovanov_bound) : json(nullptr)},
              {"genus_tests", r.genus_tests ? to_json(*r.genus_tests) : json(nullptr)},
              {"genus_chain", r.genus_chain ? to_json(*r.genus_chain) : json(nullptr)},
              {"failures", r.failures},
              {"pass", r.all_pass()}};
  return out;
}

}  // namespace legruling
