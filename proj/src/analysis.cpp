#include "legruling/analysis.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace legruling {

Polynomials compute_polynomials(const OrientedFront& front, const SkeinOptions& options) {
  const LinkDiagram d = LinkDiagram::from_front(front);
  Polynomials p;
  p.homfly = homfly(d, options);
  p.kauffman = kauffman_dubrovnik(d, options);
  p.conway = conway(p.homfly);
  return p;
}

RutherfordCheck rutherford_check(const OrientedFront& front, const RulingCensus& census, const Polynomials& polys) {
  RutherfordCheck r;
  r.tb = front.invariants().tb;
  r.homfly_slice = coefficient_of_v(polys.homfly, r.tb + 1);
  r.kauffman_slice = coefficient_of_v(polys.kauffman, r.tb + 1);
  r.two_graded_poly = census.two_graded_poly;
  r.ungraded_poly = census.ungraded_poly;
  return r;
}

RutherfordCheck rutherford_check(const OrientedFront& front, const SkeinOptions& options) {
  return rutherford_check(front, census(front), compute_polynomials(front, options));
}

MaxTbCertificate max_tb_certificate(const OrientedFront& front, const RulingCensus& census,
                                    const LaurentPoly2& homfly) {
  MaxTbCertificate c;
  c.tb = front.invariants().tb;
  c.e = profile(homfly).e;
  c.maximal = c.tb + 1 == c.e;
  c.has_two_graded_ruling = !census.two_graded.empty();
  return c;
}

NoRulingFlags no_ruling_tests(const LaurentPoly2& homfly, const LaurentPoly2& kauffman,
                              std::optional<int> khovanov_bound) {
  NoRulingFlags f;
  const int e = profile(homfly).e;
  if (khovanov_bound) f.khovanov_beats_homfly = e >= 2 + *khovanov_bound;

  const auto kauffman_min = min_v_degree(kauffman);
  f.kauffman_beats_homfly = kauffman_min && *kauffman_min < e;

  const LaurentPoly1 p = coefficient_of_v(homfly, e);
  for (const auto& [i, c] : p.terms()) f.negative_counts = f.negative_counts || c < 0;

  if (kauffman_min && *kauffman_min >= e) {
    const LaurentPoly1 fe = coefficient_of_v(kauffman, e);
    std::set<int> exps;
    for (const auto& [i, c] : p.terms()) exps.insert(i);
    for (const auto& [i, c] : fe.terms()) exps.insert(i);
    for (int i : exps) {
      const Coefficient pi = p.coefficient(i);
      if (!(0 <= pi && pi <= fe.coefficient(i))) f.subset_failure = true;
    }
  }
  return f;
}

std::string_view to_string(RhoKind k) {
  switch (k) {
    case RhoKind::Value: return "value";
    case RhoKind::MinusInfinity: return "-inf";
    case RhoKind::Unknown: return "unknown";
    case RhoKind::NotApplicable: return "not_applicable";
  }
  return "?";
}

RhoReport rho_report(const OrientedFront& front, const RulingCensus& census, const LaurentPoly2& homfly,
                     const NoRulingFlags& flags) {
  RhoReport r;
  if (!front.is_knot()) {
    r.kind = RhoKind::NotApplicable;
    r.reason = "ruling genus is defined for knots";
    return r;
  }
  const HomflyProfile prof = profile(homfly);
  if (!census.two_graded.empty()) {
    r.kind = RhoKind::Value;
    r.value = prof.M / 2;
    r.reason = "front has a 2-graded ruling, so rho = M/2";
    r.consistent = prof.M % 2 == 0 && census.max_two_graded_genus() == r.value &&
                   front.invariants().tb + 1 == prof.e;
    return r;
  }
  if (flags.any()) {
    r.kind = RhoKind::MinusInfinity;
    r.reason = "an obstruction to 2-graded rulings fired";
    return r;
  }
  r.kind = RhoKind::Unknown;
  r.reason = "no 2-graded ruling on this front and no obstruction fired";
  return r;
}

GenusChain genus_chain(const OrientedFront& front, const RulingCensus& census, const LaurentPoly2& homfly) {
  GenusChain t;
  t.max_ruling_genus = census.max_two_graded_genus();
  t.M = profile(homfly).M;
  t.max_z_degree = *max_z_degree(homfly);
  t.seifert_genus = seifert_diagram_genus(LinkDiagram::from_front(front));
  return t;
}

GenusTests genus_tests(const HomflyProfile& prof, const LaurentPoly1& conway_poly) {
  GenusTests g;
  g.e = prof.e;
  g.M = prof.M;
  g.conway_degree = max_degree(conway_poly);
  g.bennequin = g.M <= g.e;
  g.conway = g.conway_degree && *g.conway_degree >= g.M;
  return g;
}

std::vector<std::string> structural_violations(const OrientedFront& front, const RulingCensus& census) {
  std::vector<std::string> out;
  std::map<int, std::array<int, 3>> per_theta;  // ungraded, 2-graded, Z-graded counts
  for (const auto& r : census.ungraded) {
    const std::string who = "ruling " + std::to_string(r.switches.size()) + " switches";
    auto& counts = per_theta[r.theta];
    ++counts[0];
    if (satisfies(r.grading, GradingClass::TwoGraded)) ++counts[1];
    if (satisfies(r.grading, GradingClass::ZGraded)) ++counts[2];
    if (r.eyes != front.num_left_cusps() || r.theta != theta(r)) out.push_back(who + ": eye or theta bookkeeping");
    if (satisfies(r.grading, GradingClass::TwoGraded) && !r.orientable) {
      out.push_back(who + ": 2-graded but the surface is not orientable");
    }
    if (!front.is_knot()) continue;
    if (r.orientable && !satisfies(r.grading, GradingClass::TwoGraded)) {
      out.push_back(who + ": orientable knot ruling that is not 2-graded");
    }
    if (satisfies(r.grading, GradingClass::TwoGraded)) {
      for (int id : r.switches) {
        if (front.crossing_sign(id) != 1) out.push_back(who + ": 2-graded switch at negative crossing " + std::to_string(id));
      }
    }
    if (r.theta == 1 && (!satisfies(r.grading, GradingClass::ZGraded) || front.invariants().r != 0)) {
      out.push_back(who + ": disk ruling not Z-graded or r != 0");
    }
  }
  for (const auto& [t, c] : per_theta) {
    if (!(c[2] <= c[1] && c[1] <= c[0])) out.push_back("theta " + std::to_string(t) + ": class counts not nested");
  }
  return out;
}

bool ConnsumCheck::pass() const {
  for (const auto& c : classes) {
    if (!c.product_bijection || !c.polynomial_multiplicative || c.count_sum != c.count_left * c.count_right) return false;
  }
  if (genus_left && genus_right) return genus_sum && *genus_sum == *genus_left + *genus_right;
  return !genus_sum;
}

ConnsumCheck connsum_check(const FrontDiagram& f1, const FrontDiagram& f2) {
  const FrontDiagram sum = connected_sum(f1, f2);
  const OrientedFront a(f1);
  const OrientedFront b(f2);
  const OrientedFront s(sum);
  const RulingCensus ca = census(a);
  const RulingCensus cb = census(b);
  const RulingCensus cs = census(s);

  ConnsumCheck out;
  out.name = sum.name;
  for (GradingClass g : {GradingClass::Ungraded, GradingClass::TwoGraded, GradingClass::ZGraded}) {
    ConnsumCheck::PerClass pc;
    pc.grading = g;
    pc.count_left = ca.rulings(g).size();
    pc.count_right = cb.rulings(g).size();
    pc.count_sum = cs.rulings(g).size();
    std::set<std::vector<int>> expected;
    for (const auto& ra : ca.rulings(g)) {
      for (const auto& rb : cb.rulings(g)) {
        std::vector<int> sw = ra.switches;
        for (int id : rb.switches) sw.push_back(id + a.num_crossings());
        expected.insert(sw);
      }
    }
    std::set<std::vector<int>> actual;
    for (const auto& r : cs.rulings(g)) actual.insert(r.switches);
    pc.product_bijection = expected == actual;
    pc.polynomial_multiplicative = cs.polynomial(g) == ca.polynomial(g) * cb.polynomial(g);
    out.classes.push_back(pc);
  }
  out.genus_left = ca.max_two_graded_genus();
  out.genus_right = cb.max_two_graded_genus();
  out.genus_sum = cs.max_two_graded_genus();
  return out;
}

AnalysisReport analyze(const FrontDiagram& front_in, const AnalysisOptions& options) {
  const OrientedFront front(front_in, options.reversed_components);
  AnalysisReport rep;
  rep.name = front_in.name;
  rep.components = front.num_components();
  rep.invariants = front.invariants();
  rep.census = census(front);
  rep.polynomials = compute_polynomials(front, options.skein);
  rep.profile = profile(rep.polynomials.homfly);
  rep.rutherford = rutherford_check(front, rep.census, rep.polynomials);
  rep.max_tb = max_tb_certificate(front, rep.census, rep.polynomials.homfly);
  rep.khovanov_bound = options.khovanov_bound;
  rep.no_ruling = no_ruling_tests(rep.polynomials.homfly, rep.polynomials.kauffman, options.khovanov_bound);
  rep.rho = rho_report(front, rep.census, rep.polynomials.homfly, rep.no_ruling);

  auto& fail = rep.failures;
  if (!rep.rutherford.two_graded_pass()) fail.push_back("Homfly slice at v^(tb+1) differs from the 2-graded ruling polynomial");
  if (!rep.rutherford.ungraded_pass()) fail.push_back("Kauffman slice at v^(tb+1) differs from the ungraded ruling polynomial");
  if (!rep.max_tb.consistent()) fail.push_back("2-graded ruling exists but tb + 1 != e");
  if (!rep.rho.consistent) fail.push_back("largest 2-graded ruling genus differs from M/2");
  if (!rep.census.two_graded.empty() && rep.no_ruling.any()) fail.push_back("obstruction fired on a front with a 2-graded ruling");
  for (auto& v : structural_violations(front, rep.census)) fail.push_back(std::move(v));

  if (front.is_knot()) {
    rep.genus_tests = genus_tests(rep.profile, rep.polynomials.conway);
    rep.genus_chain = genus_chain(front, rep.census, rep.polynomials.homfly);
    if (!rep.genus_chain->holds()) fail.push_back("ruling genus / Morton / Seifert genus chain violated");
  }
  return rep;
}

}  // namespace legruling
