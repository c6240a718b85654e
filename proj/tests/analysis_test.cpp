#include <random>

#include <gtest/gtest.h>

#include "legruling/analysis.hpp"
#include "legruling/corpus.hpp"
#include "legruling/front_io.hpp"
#include "legruling/json.hpp"
#include "oracles.hpp"

using namespace legruling;

namespace {

FrontDiagram corpus(const std::string& name) { return *find_corpus_front(name); }

const LaurentPoly2 kTrefoilHomfly = vz(2, 0, 2) - vz(4, 0) + vz(2, 2);

}  // namespace

TEST(Rutherford, HoldsOnCorpus) {
  for (const auto& e : bundled_corpus()) {
    const auto r = rutherford_check(OrientedFront(e.front));
    EXPECT_TRUE(r.two_graded_pass()) << e.front.name;
    EXPECT_TRUE(r.ungraded_pass()) << e.front.name;
  }
}

TEST(Rutherford, HoldsOnRandomFronts) {
  std::mt19937 rng(2024);
  int nonzero = 0;
  for (int t = 0; t < 150; ++t) {
    const OrientedFront f(t % 3 ? oracle::ruled_front(rng, 7, 6, 3) : oracle::random_front(rng, 7, 6, 3));
    const auto r = rutherford_check(f);
    EXPECT_TRUE(r.two_graded_pass()) << render_front(f.front());
    EXPECT_TRUE(r.ungraded_pass()) << render_front(f.front());
    nonzero += !r.ungraded_poly.is_zero();
  }
  EXPECT_GT(nonzero, 90);
}

TEST(MaxTb, CertificateOnCorpus) {
  for (const auto& e : bundled_corpus()) {
    const OrientedFront f(e.front);
    const auto c = census(f);
    const auto cert = max_tb_certificate(f, c, homfly(LinkDiagram::from_front(f)));
    EXPECT_TRUE(cert.consistent()) << e.front.name;
    EXPECT_EQ(cert.maximal, e.front.name != "stabilized_unknot") << e.front.name;
    EXPECT_LE(cert.tb + 1, cert.e);
  }
}

TEST(NoRuling, SilentOnTrefoil) {
  const OrientedFront f(corpus("trefoil"));
  const auto p = compute_polynomials(f);
  const auto flags = no_ruling_tests(p.homfly, p.kauffman);
  EXPECT_FALSE(flags.any());
  EXPECT_EQ(flags.khovanov_beats_homfly, std::nullopt);
  EXPECT_EQ(to_json(flags).at("khovanov_beats_homfly"), "not_evaluated");
}

TEST(NoRuling, SyntheticInputsTriggerEachCondition) {
  const auto one = LaurentPoly2::constant(1);
  // (i) e >= 2 + Khovanov bound
  auto f = no_ruling_tests(one, one, -2);
  EXPECT_EQ(f.khovanov_beats_homfly, true);
  EXPECT_EQ(no_ruling_tests(one, one, -1).khovanov_beats_homfly, false);
  // (ii) Kauffman reaches below e
  f = no_ruling_tests(kTrefoilHomfly, kTrefoilHomfly + vz(0, 0));
  EXPECT_TRUE(f.kauffman_beats_homfly);
  EXPECT_FALSE(f.negative_counts);
  EXPECT_FALSE(f.subset_failure);
  // (iii) negative Homfly count
  f = no_ruling_tests(vz(0, 0, -1) + vz(0, 2), vz(0, 0, 2) + vz(0, 2));
  EXPECT_TRUE(f.negative_counts);
  EXPECT_FALSE(f.kauffman_beats_homfly);
  // (iv) Homfly count exceeds Kauffman count
  f = no_ruling_tests(vz(0, 0, 3), vz(0, 0, 2));
  EXPECT_TRUE(f.subset_failure);
  EXPECT_FALSE(f.negative_counts);
  EXPECT_FALSE(f.kauffman_beats_homfly);
}

TEST(Rho, CorpusKinds) {
  EXPECT_EQ(analyze(corpus("trefoil")).rho.value, 1);
  EXPECT_EQ(analyze(corpus("unknot")).rho.value, 0);
  EXPECT_EQ(analyze(corpus("5_1")).rho.value, 2);
  EXPECT_EQ(analyze(corpus("trefoil_sum")).rho.value, 2);
  EXPECT_EQ(analyze(corpus("stabilized_unknot")).rho.kind, RhoKind::Unknown);
  EXPECT_EQ(analyze(corpus("unlink2")).rho.kind, RhoKind::NotApplicable);
}

TEST(Rho, MinusInfinityWhenObstructed) {
  const OrientedFront f(corpus("stabilized_unknot"));
  const auto c = census(f);
  const auto p = vz(0, 0, -1) + vz(0, 2);
  const auto r = rho_report(f, c, p, no_ruling_tests(p, p));
  EXPECT_EQ(r.kind, RhoKind::MinusInfinity);
  EXPECT_EQ(r.value, std::nullopt);
}

TEST(GenusTests, TrefoilAndUnknot) {
  const auto g = genus_tests(profile(kTrefoilHomfly), zpow(2) + zpow(0));
  EXPECT_TRUE(g.bennequin);
  EXPECT_TRUE(g.conway);
  const auto u = genus_tests(profile(LaurentPoly2::constant(1)), zpow(0));
  EXPECT_TRUE(u.bennequin);
  EXPECT_TRUE(u.conway);
  // M = 2 but the Conway polynomial stops at z^0
  EXPECT_FALSE(genus_tests(profile(kTrefoilHomfly), zpow(0)).conway);
  EXPECT_FALSE(genus_tests(profile(vz(0, 2)), zpow(2)).bennequin);
}

TEST(GenusChain, ChainOnCorpusKnots) {
  for (const auto& e : bundled_corpus()) {
    const OrientedFront f(e.front);
    if (!f.is_knot()) continue;
    const auto t = genus_chain(f, census(f), homfly(LinkDiagram::from_front(f)));
    EXPECT_TRUE(t.holds()) << e.front.name;
  }
  const OrientedFront f(corpus("trefoil_sum"));
  const auto t = genus_chain(f, census(f), homfly(LinkDiagram::from_front(f)));
  EXPECT_EQ(t.max_ruling_genus, 2);
  EXPECT_EQ(t.M, 4);
  EXPECT_EQ(t.seifert_genus, 2);
}

TEST(Structural, NoViolationsOnRandomFronts) {
  std::mt19937 rng(77);
  for (int t = 0; t < 300; ++t) {
    const OrientedFront f(oracle::ruled_front(rng, 10));
    EXPECT_EQ(structural_violations(f, census(f)), std::vector<std::string>{}) << render_front(f.front());
  }
}

TEST(ConnectedSum, ProductCensus) {
  const auto tt = connsum_check(corpus("trefoil"), corpus("trefoil"));
  EXPECT_TRUE(tt.pass());
  EXPECT_EQ(tt.genus_sum, 2);
  for (const auto& pc : tt.classes) EXPECT_EQ(pc.count_sum, 9u);

  const auto uu = connsum_check(corpus("unknot"), corpus("unknot"));
  EXPECT_TRUE(uu.pass());
  EXPECT_EQ(uu.classes[0].count_sum, 1u);

  const auto tu = connsum_check(corpus("trefoil"), corpus("unknot"));
  EXPECT_TRUE(tu.pass());
  EXPECT_EQ(tu.classes[1].count_sum, 3u);

  const auto t5 = connsum_check(corpus("trefoil"), corpus("5_1"));
  EXPECT_TRUE(t5.pass());
  EXPECT_EQ(t5.genus_sum, 3);

  EXPECT_THROW(connsum_check(FrontDiagram{}, corpus("trefoil")), std::invalid_argument);
}

TEST(ConnectedSum, RandomKnotPairs) {
  std::mt19937 rng(88);
  int done = 0;
  while (done < 40) {
    const auto a = oracle::ruled_front(rng, 5, 4, 3);
    const auto b = oracle::ruled_front(rng, 5, 4, 3);
    if (!OrientedFront(a).is_knot() || !OrientedFront(b).is_knot()) continue;
    EXPECT_TRUE(connsum_check(a, b).pass()) << render_front(a) << render_front(b);
    ++done;
  }
}

TEST(Analyze, CorpusPassesAndKnotOnlySectionsAreGated) {
  for (const auto& e : bundled_corpus()) {
    const auto rep = analyze(e.front);
    EXPECT_TRUE(rep.all_pass()) << e.front.name;
    EXPECT_EQ(rep.genus_tests.has_value(), rep.components == 1);
    EXPECT_EQ(rep.genus_chain.has_value(), rep.components == 1);
  }
  AnalysisOptions opts;
  opts.khovanov_bound = 0;
  const auto rep = analyze(corpus("trefoil"), opts);
  EXPECT_EQ(rep.no_ruling.khovanov_beats_homfly, true);
  EXPECT_FALSE(rep.all_pass());  // an inconsistent bound is reported, not hidden
}

TEST(Analyze, ReportSerializes) {
  const auto j = to_json(analyze(corpus("trefoil")));
  EXPECT_EQ(j.at("tb"), 1);
  EXPECT_EQ(j.at("rho").at("value"), 1);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(j.at("ruling_counts").at("two_graded"), 3);
}
