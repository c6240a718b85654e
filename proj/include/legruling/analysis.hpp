#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legruling/front.hpp"
#include "legruling/poly.hpp"
#include "legruling/ruling.hpp"
#include "legruling/skein.hpp"

namespace legruling {

struct Polynomials {
  LaurentPoly2 homfly;
  LaurentPoly2 kauffman;  // Dubrovnik, a = v^-1
  LaurentPoly1 conway;
};

Polynomials compute_polynomials(const OrientedFront& front, const SkeinOptions& options = {});

/// Both sides of the ruling-polynomial identities at v^(tb+1).
struct RutherfordCheck {
  int tb = 0;
  LaurentPoly1 homfly_slice;
  LaurentPoly1 two_graded_poly;
  LaurentPoly1 kauffman_slice;
  LaurentPoly1 ungraded_poly;

  bool two_graded_pass() const { return homfly_slice == two_graded_poly; }
  bool ungraded_pass() const { return kauffman_slice == ungraded_poly; }
  bool pass() const { return two_graded_pass() && ungraded_pass(); }
};

RutherfordCheck rutherford_check(const OrientedFront& front, const RulingCensus& census, const Polynomials& polys);
RutherfordCheck rutherford_check(const OrientedFront& front, const SkeinOptions& options = {});

struct MaxTbCertificate {
  int tb = 0;
  int e = 0;
  bool maximal = false;  // tb + 1 == e
  bool has_two_graded_ruling = false;
  /// False only when a 2-graded ruling exists but tb + 1 != e.
  bool consistent() const { return !has_two_graded_ruling || maximal; }
};

MaxTbCertificate max_tb_certificate(const OrientedFront& front, const RulingCensus& census,
                                    const LaurentPoly2& homfly);

/// Obstructions to 2-graded rulings on any Legendrian representative.
struct NoRulingFlags {
  std::optional<bool> khovanov_beats_homfly;  // unset: no Khovanov bound supplied
  bool kauffman_beats_homfly = false;
  bool negative_counts = false;
  bool subset_failure = false;

  bool any() const {
    return khovanov_beats_homfly.value_or(false) || kauffman_beats_homfly || negative_counts || subset_failure;
  }
};

/// `khovanov_bound` is min{ k : sum over i - j = k of HKh^{i,j} != 0 }.
NoRulingFlags no_ruling_tests(const LaurentPoly2& homfly, const LaurentPoly2& kauffman,
                              std::optional<int> khovanov_bound = std::nullopt);

enum class RhoKind { Value, MinusInfinity, Unknown, NotApplicable };

std::string_view to_string(RhoKind k);

struct RhoReport {
  RhoKind kind = RhoKind::Unknown;
  std::optional<int> value;
  std::string reason;
  /// For a value: the largest 2-graded ruling genus on the front equals M/2.
  bool consistent = true;
};

RhoReport rho_report(const OrientedFront& front, const RulingCensus& census, const LaurentPoly2& homfly,
                     const NoRulingFlags& flags);

/// max 2-graded genus <= M/2 <= (max z-degree of Homfly)/2 <= Seifert genus of the diagram.
struct GenusChain {
  std::optional<int> max_ruling_genus;
  int M = 0;
  int max_z_degree = 0;
  int seifert_genus = 0;

  bool holds() const {
    return (!max_ruling_genus || 2 * *max_ruling_genus <= M) && M <= max_z_degree && max_z_degree <= 2 * seifert_genus;
  }
};

GenusChain genus_chain(const OrientedFront& front, const RulingCensus& census, const LaurentPoly2& homfly);

/// Sufficient conditions for rho <= g.
struct GenusTests {
  int e = 0;
  int M = 0;
  std::optional<int> conway_degree;
  bool bennequin = false;  // M <= e
  bool conway = false;     // deg conway >= M
};

GenusTests genus_tests(const HomflyProfile& profile, const LaurentPoly1& conway);

/// Structural facts every census must satisfy; each failure is one message.
std::vector<std::string> structural_violations(const OrientedFront& front, const RulingCensus& census);

struct ConnsumCheck {
  std::string name;
  struct PerClass {
    GradingClass grading;
    std::size_t count_left = 0;
    std::size_t count_right = 0;
    std::size_t count_sum = 0;
    bool product_bijection = false;  // switch sets of the sum = pairwise unions
    bool polynomial_multiplicative = false;
  };
  std::vector<PerClass> classes;
  std::optional<int> genus_left;
  std::optional<int> genus_right;
  std::optional<int> genus_sum;

  bool pass() const;
};

/// Throws std::invalid_argument when the operands are not in splice normal form.
ConnsumCheck connsum_check(const FrontDiagram& f1, const FrontDiagram& f2);

struct AnalysisOptions {
  SkeinOptions skein;
  std::optional<int> khovanov_bound;
  std::vector<int> reversed_components;
};

struct AnalysisReport {
  std::string name;
  int components = 0;
  ClassicalInvariants invariants;
  RulingCensus census;
  Polynomials polynomials;
  HomflyProfile profile;
  RutherfordCheck rutherford;
  MaxTbCertificate max_tb;
  NoRulingFlags no_ruling;
  RhoReport rho;
  std::optional<GenusTests> genus_tests;     // knots only
  std::optional<GenusChain> genus_chain;     // knots only
  std::optional<int> khovanov_bound;
  std::vector<std::string> failures;         // violated identities and theorems

  bool all_pass() const { return failures.empty(); }
};

/// Runs every check on one front. Throws ResourceLimitError from the skein
/// module and std::invalid_argument for invalid fronts.
AnalysisReport analyze(const FrontDiagram& front, const AnalysisOptions& options = {});

}  // namespace legruling
