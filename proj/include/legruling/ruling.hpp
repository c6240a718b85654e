#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "legruling/front.hpp"
#include "legruling/poly.hpp"

namespace legruling {

/// Ruling classes, ordered from weakest to strongest requirement on switches.
enum class GradingClass { Ungraded, TwoGraded, ZGraded };

std::string_view to_string(GradingClass g);
/// Accepts "ungraded", "two_graded", "z_graded"; throws std::invalid_argument.
GradingClass parse_grading_class(std::string_view s);

/// Whether a ruling of finest class `have` belongs to the class `want`.
constexpr bool satisfies(GradingClass have, GradingClass want) {
  return static_cast<int>(have) >= static_cast<int>(want);
}

/// Fixed-point-free involution on the strand heights of one x-slice: which
/// strand bounds the same eye. Heights are 1-based.
class PairingState {
 public:
  PairingState() = default;
  explicit PairingState(std::vector<int> partner);

  int size() const { return static_cast<int>(partner_.size()); }
  int partner(int height) const { return partner_[static_cast<std::size_t>(height - 1)]; }

  /// New eye born at heights k, k+1 (left cusp).
  void open_eye(int k);
  /// Removes the eye at heights k, k+1 (right cusp). Precondition: partners.
  void close_eye(int k);
  /// Strands at k and k+1 exchange heights (non-switching crossing).
  void cross(int k);

  friend bool operator==(const PairingState&, const PairingState&) = default;

 private:
  std::vector<int> partner_;
};

/// Normality test for a switch at heights k, k+1: the two eyes meeting there
/// must be disjoint or nested in the vertical slice. Precondition: the two
/// strands are not partners.
bool is_normal_switch(const PairingState& state, int k);

struct Ruling {
  std::vector<int> switches;  // 1-based crossing ids, ascending
  int eyes = 0;
  int theta = 0;              // eyes - switches: Euler characteristic of the ruling surface
  GradingClass grading = GradingClass::Ungraded;  // finest class the ruling belongs to
  bool orientable = false;    // of the surface built from eye disks and twisted bands
  std::optional<int> genus;   // knot fronts with 2-graded rulings only

  friend bool operator==(const Ruling&, const Ruling&) = default;
};

/// All normal rulings of the front that belong to `filter`, sorted by switch
/// set. Enumeration is a depth-first sweep over the events, pruned at the
/// first event that invalidates a branch.
std::vector<Ruling> enumerate_rulings(const OrientedFront& front, GradingClass filter = GradingClass::Ungraded);

/// Finest grading class of a switch set, from the crossing indices.
GradingClass classify(const OrientedFront& front, const std::vector<int>& switches);

int theta(const Ruling& ruling);
std::optional<int> genus(const Ruling& ruling, const OrientedFront& front);

/// Sum over rulings in the class of z^(1 - theta).
LaurentPoly1 ruling_polynomial(const std::vector<Ruling>& rulings);
LaurentPoly1 ruling_polynomial(const OrientedFront& front, GradingClass filter);

struct RulingCensus {
  std::vector<Ruling> ungraded;
  std::vector<Ruling> two_graded;
  std::vector<Ruling> z_graded;
  LaurentPoly1 ungraded_poly;
  LaurentPoly1 two_graded_poly;
  LaurentPoly1 z_graded_poly;

  const std::vector<Ruling>& rulings(GradingClass g) const;
  const LaurentPoly1& polynomial(GradingClass g) const;
  /// Largest genus among 2-graded rulings, if any carries one.
  std::optional<int> max_two_graded_genus() const;
};

RulingCensus census(const OrientedFront& front);

}  // namespace legruling
