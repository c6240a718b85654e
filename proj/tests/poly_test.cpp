#include <random>

#include <gtest/gtest.h>

#include "legruling/poly.hpp"
#include "oracles.hpp"

using namespace legruling;

namespace {

// 2v^2 - v^4 + v^2 z^2
LaurentPoly2 trefoil_homfly() { return vz(2, 0, 2) - vz(4, 0) + vz(2, 2); }

}  // namespace

TEST(Poly, ZeroIsCanonical) {
  LaurentPoly2 p = vz(1, 1, 3);
  p -= vz(1, 1, 3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, LaurentPoly2{});
  EXPECT_EQ(p.size(), 0u);
  EXPECT_TRUE((vz(0, 0, 0)).is_zero());
  EXPECT_TRUE((trefoil_homfly() * Coefficient(0)).is_zero());
}

TEST(Poly, ProductMatchesSchoolbookOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_terms(rng, 1 + trial % 7);
    const auto b = oracle::random_terms(rng, 1 + trial % 5);
    EXPECT_EQ(oracle::to_poly(a) * oracle::to_poly(b), oracle::to_poly(oracle::naive_product(a, b)));
  }
}

TEST(Poly, RingAxioms) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = oracle::to_poly(oracle::random_terms(rng, 4));
    const auto b = oracle::to_poly(oracle::random_terms(rng, 4));
    const auto c = oracle::to_poly(oracle::random_terms(rng, 4));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly2{});
    EXPECT_EQ(-(-a), a);
    EXPECT_EQ(a * LaurentPoly2::constant(1), a);
  }
}

TEST(Poly, PowAndShift) {
  const LaurentPoly2 x = vz(-1, -1) - vz(1, -1);
  EXPECT_EQ(x.pow(0), LaurentPoly2::constant(1));
  EXPECT_EQ(x.pow(3), x * x * x);
  EXPECT_EQ(x.shifted({2, 1}), x * vz(2, 1));
  EXPECT_EQ(zpow(1).pow(5), zpow(5));
}

TEST(Poly, CoefficientsBeyondMachineWords) {
  LaurentPoly1 p = LaurentPoly1::constant(Coefficient("123456789012345678901234567890"));
  p *= p;
  EXPECT_EQ(p.coefficient(0), Coefficient("15241578753238836750495351562536198787501905199875019052100"));
}

TEST(Poly, CoefficientOfV) {
  EXPECT_EQ(coefficient_of_v(trefoil_homfly(), 2), zpow(2) + zpow(0, 2));
  EXPECT_EQ(coefficient_of_v(trefoil_homfly(), 4), zpow(0, -1));
  EXPECT_TRUE(coefficient_of_v(trefoil_homfly(), 3).is_zero());
}

TEST(Poly, ConwayIsSubstitutionVEqualsOne) {
  EXPECT_EQ(conway(trefoil_homfly()), zpow(2) + zpow(0));
  // split link: (v^-1 - v)/z vanishes at v = 1
  EXPECT_TRUE(conway(vz(-1, -1) - vz(1, -1)).is_zero());
}

TEST(Poly, DegreesAndProfile) {
  EXPECT_EQ(min_v_degree(trefoil_homfly()), 2);
  EXPECT_EQ(max_z_degree(trefoil_homfly()), 2);
  EXPECT_EQ(min_v_degree(LaurentPoly2{}), std::nullopt);
  EXPECT_EQ(max_degree(LaurentPoly1{}), std::nullopt);
  EXPECT_EQ(min_degree(zpow(-1) + zpow(3)), -1);

  const auto prof = profile(trefoil_homfly());
  EXPECT_EQ(prof.e, 2);
  EXPECT_EQ(prof.M, 2);
  EXPECT_EQ(prof.Q, zpow(2) + zpow(0, 2));
  // M is taken inside the v^e slice, not over the whole polynomial
  const auto p = vz(0, 0) + vz(2, 6);
  EXPECT_EQ(profile(p).M, 0);
  EXPECT_EQ(profile(p, 2).Q, zpow(6));
  EXPECT_THROW(profile(LaurentPoly2{}), std::invalid_argument);
}

TEST(Poly, Rendering) {
  EXPECT_EQ(to_string(LaurentPoly1{}), "0");
  EXPECT_EQ(to_string(zpow(2) + zpow(0, 2)), "z^2 + 2");
  EXPECT_EQ(to_string(zpow(-1)), "z^-1");
  EXPECT_EQ(to_string(trefoil_homfly()), "2*v^2 + v^2*z^2 - v^4");
  EXPECT_EQ(to_string(LaurentPoly2{}), "0");
}
