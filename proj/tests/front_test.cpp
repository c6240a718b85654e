#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "legruling/corpus.hpp"
#include "legruling/front.hpp"
#include "oracles.hpp"

using namespace legruling;

namespace {

FrontDiagram corpus(const std::string& name) { return *find_corpus_front(name); }

const FrontDiagram kHopf{"hopf", {L(1), L(3), X(2), X(2), R(1), R(1)}};

}  // namespace

TEST(Validate, AcceptsCorpus) {
  for (const auto& e : bundled_corpus()) EXPECT_TRUE(validate(e.front).ok()) << e.front.name;
  EXPECT_TRUE(validate(FrontDiagram{}).ok());
}

TEST(Validate, ReportsEventIndex) {
  auto first = [](const FrontDiagram& f) { return validate(f).violations.at(0).event; };
  EXPECT_EQ(first({"", {L(2), R(1)}}), 1u);
  EXPECT_EQ(first({"", {L(1), L(1), X(4), R(1), R(1)}}), 3u);
  EXPECT_EQ(first({"", {L(1), X(2), R(1)}}), 2u);
  EXPECT_EQ(first({"", {L(1), R(2)}}), 2u);
  EXPECT_EQ(first({"", {R(1)}}), 1u);
  EXPECT_EQ(first({"", {L(1), L(4), R(1), R(1)}}), 2u);
}

TEST(Validate, ReportsOpenStrands) {
  const auto r = validate({"", {L(1), L(1), R(1)}});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violations.back().event, 0u);
}

TEST(Validate, ConstructorRejectsInvalid) {
  EXPECT_THROW(OrientedFront({"", {L(1)}}), std::invalid_argument);
  EXPECT_THROW(OrientedFront({"", {L(1), X(3), R(1)}}), std::invalid_argument);
  EXPECT_THROW(OrientedFront(corpus("trefoil"), {1}), std::invalid_argument);
  EXPECT_THROW(OrientedFront(corpus("trefoil"), {-1}), std::invalid_argument);
}

TEST(Invariants, Trefoil) {
  const OrientedFront f(corpus("trefoil"));
  EXPECT_TRUE(f.is_knot());
  EXPECT_EQ(f.num_crossings(), 3);
  EXPECT_EQ(f.num_left_cusps(), 2);
  EXPECT_EQ(f.invariants().writhe, 3);
  EXPECT_EQ(f.invariants().num_right_cusps, 2);
  EXPECT_EQ(f.invariants().tb, 1);
  EXPECT_EQ(f.invariants().r, 0);
  EXPECT_EQ(f.maslov().modulus, 0);
  for (int id = 1; id <= 3; ++id) {
    EXPECT_EQ(f.crossing_sign(id), 1);
    EXPECT_EQ(f.crossing_index(id), 0);
  }
  EXPECT_THROW(f.crossing_sign(0), std::out_of_range);
  EXPECT_THROW(f.crossing_index(4), std::out_of_range);
}

TEST(Invariants, CorpusTable) {
  struct Row {
    const char* name;
    int tb, r, components, crossings, left_cusps;
  };
  const Row rows[] = {
      {"unknot", -1, 0, 1, 0, 1},   {"stabilized_unknot", -2, 1, 1, 0, 2}, {"unlink2", -2, 0, 2, 0, 2},
      {"trefoil", 1, 0, 1, 3, 2},   {"5_1", 3, 0, 1, 5, 2},                {"trefoil_sum", 3, 0, 1, 6, 3},
  };
  for (const auto& row : rows) {
    const OrientedFront f(corpus(row.name));
    EXPECT_EQ(f.invariants().tb, row.tb) << row.name;
    EXPECT_EQ(f.invariants().r, row.r) << row.name;
    EXPECT_EQ(f.num_components(), row.components) << row.name;
    EXPECT_EQ(f.num_crossings(), row.crossings) << row.name;
    EXPECT_EQ(f.num_left_cusps(), row.left_cusps) << row.name;
  }
}

TEST(Invariants, StabilizedUnknotRotation) {
  const OrientedFront f(corpus("stabilized_unknot"));
  ASSERT_EQ(f.invariants().rot_per_component.size(), 1u);
  EXPECT_EQ(std::abs(f.invariants().rot_per_component[0]), 1);
  const OrientedFront g(corpus("stabilized_unknot"), {0});
  EXPECT_EQ(g.invariants().rot_per_component[0], -f.invariants().rot_per_component[0]);
  EXPECT_EQ(g.maslov().modulus, 2);
}

TEST(Invariants, ReversingOneComponentOfHopfLink) {
  const OrientedFront f(kHopf);
  ASSERT_EQ(f.num_components(), 2);
  const OrientedFront g(kHopf, {1});
  EXPECT_EQ(std::abs(f.invariants().writhe), 2);
  EXPECT_EQ(g.invariants().writhe, -f.invariants().writhe);
  EXPECT_EQ(g.invariants().tb, g.invariants().writhe - 2);
}

TEST(Invariants, EarliestStrandRunsRight) {
  for (const auto& e : bundled_corpus()) {
    const OrientedFront f(e.front);
    std::vector<bool> seen(static_cast<std::size_t>(f.num_components()), false);
    for (std::size_t s = 0; s < f.components().component.size(); ++s) {
      const auto c = static_cast<std::size_t>(f.components().component[s]);
      if (!seen[c]) {
        EXPECT_EQ(f.components().direction[s], Direction::Rightward) << e.front.name;
      }
      seen[c] = true;
    }
  }
}

// Properties on random fronts.

TEST(FrontProperties, TbEqualsWritheMinusRightCusps) {
  std::mt19937 rng(101);
  for (int t = 0; t < 300; ++t) {
    const OrientedFront f(oracle::random_front(rng, 8));
    int writhe = 0;
    for (int id = 1; id <= f.num_crossings(); ++id) writhe += f.crossing_sign(id);
    EXPECT_EQ(writhe, f.invariants().writhe);
    EXPECT_EQ(f.invariants().tb, writhe - f.invariants().num_right_cusps);
  }
}

TEST(FrontProperties, KnotParityTbPlusROdd) {
  std::mt19937 rng(202);
  int knots = 0;
  for (int t = 0; t < 500; ++t) {
    const OrientedFront f(oracle::random_front(rng, 8));
    if (!f.is_knot()) continue;
    ++knots;
    EXPECT_EQ(((f.invariants().tb + f.invariants().r) % 2 + 2) % 2, 1);
  }
  EXPECT_GT(knots, 20);
}

TEST(FrontProperties, OrientationIsConsistentAlongComponents) {
  std::mt19937 rng(303);
  for (int t = 0; t < 300; ++t) {
    const OrientedFront f(oracle::random_front(rng, 8));
    const auto& lay = f.layout();
    const auto& cm = f.components();
    // the two strands at any cusp share a component and run opposite ways
    for (std::size_t i = 0; i < f.front().events.size(); ++i) {
      if (f.front().events[i].kind == EventKind::Crossing) continue;
      const auto& sl = lay.at_event[i];
      const auto u = static_cast<std::size_t>(sl.upper), l = static_cast<std::size_t>(sl.lower);
      EXPECT_EQ(cm.component[u], cm.component[l]);
      EXPECT_NE(cm.direction[u], cm.direction[l]);
      EXPECT_TRUE(cm.cusp_turn[i].has_value());
    }
  }
}

TEST(FrontProperties, MaslovCuspRule) {
  std::mt19937 rng(404);
  for (int t = 0; t < 300; ++t) {
    const OrientedFront f(oracle::random_front(rng, 8));
    const auto& m = f.maslov();
    const auto& rot = f.invariants().rot_per_component;
    const int r = std::accumulate(rot.begin(), rot.end(), 0, [](int a, int b) { return std::gcd(a, b); });
    EXPECT_EQ(m.modulus, 2 * r);
    for (std::size_t i = 0; i < f.front().events.size(); ++i) {
      if (f.front().events[i].kind == EventKind::Crossing) continue;
      const auto& sl = f.layout().at_event[i];
      const int jump = m.potential[static_cast<std::size_t>(sl.upper)] - m.potential[static_cast<std::size_t>(sl.lower)];
      EXPECT_EQ(m.reduce(jump), m.reduce(1));
    }
    for (int id = 1; id <= f.num_crossings(); ++id) {
      const auto& sl = f.crossing_strands(id);
      EXPECT_EQ(f.crossing_index(id),
                m.reduce(m.potential[static_cast<std::size_t>(sl.upper)] - m.potential[static_cast<std::size_t>(sl.lower)]));
    }
  }
}

TEST(FrontProperties, ReversingAKnotKeepsTbAndNegatesRotation) {
  std::mt19937 rng(505);
  for (int t = 0; t < 300; ++t) {
    const FrontDiagram d = oracle::random_front(rng, 8);
    const OrientedFront f(d);
    if (!f.is_knot()) continue;
    const OrientedFront g(d, {0});
    EXPECT_EQ(g.invariants().tb, f.invariants().tb);
    EXPECT_EQ(g.invariants().rot_per_component[0], -f.invariants().rot_per_component[0]);
  }
}

TEST(FrontProperties, ZigzagLowersTbByOneAndShiftsRotation) {
  std::mt19937 rng(606);
  for (int t = 0; t < 200; ++t) {
    const FrontDiagram d = oracle::random_front(rng, 6);
    const OrientedFront f(d);
    if (!f.is_knot()) continue;
    const std::size_t at = 1 + static_cast<std::size_t>(t) % (d.events.size() - 1);
    const int n = oracle::strands_before(d, at);
    const OrientedFront g(oracle::stabilize(d, at, 1 + t % n, t % 2 == 0));
    EXPECT_EQ(g.invariants().tb, f.invariants().tb - 1);
    EXPECT_EQ(std::abs(g.invariants().rot_per_component[0] - f.invariants().rot_per_component[0]), 1);
  }
}

TEST(ConnectedSum, SplicesAtOuterCusps) {
  const auto t = corpus("trefoil");
  const auto u = corpus("unknot");
  EXPECT_EQ(connected_sum(t, u).events, t.events);
  EXPECT_EQ(connected_sum(u, t).events, t.events);
  EXPECT_EQ(connected_sum(t, t).events, corpus("trefoil_sum").events);
  EXPECT_EQ(connected_sum(t, t).name, "trefoil#trefoil");
  const OrientedFront s(connected_sum(t, t));
  EXPECT_EQ(s.invariants().tb, 2 * 1 + 1);
}

TEST(ConnectedSum, RejectsNonNormalForm) {
  const auto t = corpus("trefoil");
  EXPECT_THROW(connected_sum(FrontDiagram{}, t), std::invalid_argument);
  EXPECT_THROW(connected_sum(t, FrontDiagram{}), std::invalid_argument);
  EXPECT_THROW(connected_sum({"", {L(1), L(1), R(2)}}, t), std::invalid_argument);
}
