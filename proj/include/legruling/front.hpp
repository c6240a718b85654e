#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace legruling {

enum class EventKind { LeftCusp, RightCusp, Crossing };

/// One x-slice of a plat-style front. Heights are 1-based from the top.
struct FrontEvent {
  EventKind kind;
  int height;

  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

/// A generic front as a totally ordered event list; no two events share an
/// x-coordinate.
struct FrontDiagram {
  std::string name;
  std::vector<FrontEvent> events;

  friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;
};

inline FrontEvent L(int k) { return {EventKind::LeftCusp, k}; }
inline FrontEvent R(int k) { return {EventKind::RightCusp, k}; }
inline FrontEvent X(int k) { return {EventKind::Crossing, k}; }

struct Violation {
  std::size_t event;  // 1-based event index; 0 for whole-diagram violations
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FrontDiagram& front);

/// Cusp-to-cusp strands of a valid front. A strand keeps its id through
/// crossings; strand ids follow creation order (upper strand of a left cusp
/// first), which is the "earliest strand-arc" order used for orientation.
struct StrandLayout {
  struct Strand {
    std::size_t left_event;
    std::size_t right_event;
    bool upper_at_left;
    bool upper_at_right;
  };
  /// Strands at heights k and k+1 of an event. For a crossing these are the
  /// strands entering from the left; `upper` is the one moving down.
  struct Slice {
    int upper = -1;
    int lower = -1;
  };

  std::vector<Strand> strands;
  std::vector<Slice> at_event;
  std::vector<std::size_t> crossing_events;  // event index of each crossing, in x-order
  int num_left_cusps = 0;
  int num_right_cusps = 0;
};

/// Precondition: validate(front).ok().
StrandLayout strand_layout(const FrontDiagram& front);

enum class Direction { Rightward, Leftward };
enum class CuspTurn { Up, Down };

struct ComponentMap {
  int num_components = 0;
  std::vector<int> component;         // per strand
  std::vector<Direction> direction;   // per strand
  std::vector<std::optional<CuspTurn>> cusp_turn;  // per event, set on cusps
};

struct ClassicalInvariants {
  int tb = 0;
  std::vector<int> rot_per_component;
  int r = 0;  // gcd of |rotations|; 0 when every rotation vanishes
  int writhe = 0;
  int num_right_cusps = 0;
};

/// Maslov potential per strand. `modulus` is 2r, or 0 for integer values.
struct MaslovAssignment {
  int modulus = 0;
  std::vector<int> potential;

  int reduce(int value) const;
};

/// A validated front together with its orientation data. Everything is
/// computed once at construction; the object is immutable afterwards.
class OrientedFront {
 public:
  /// Throws std::invalid_argument if the front fails validation or a
  /// reversed component id is out of range.
  explicit OrientedFront(FrontDiagram front, std::vector<int> reversed_components = {});

  const FrontDiagram& front() const { return front_; }
  const StrandLayout& layout() const { return layout_; }
  const ComponentMap& components() const { return components_; }
  const ClassicalInvariants& invariants() const { return invariants_; }
  const MaslovAssignment& maslov() const { return maslov_; }

  int num_crossings() const { return static_cast<int>(layout_.crossing_events.size()); }
  int num_left_cusps() const { return layout_.num_left_cusps; }
  int num_components() const { return components_.num_components; }
  bool is_knot() const { return components_.num_components == 1; }

  /// Crossing ids are 1-based in x-order. Throw std::out_of_range.
  int crossing_sign(int id) const;
  int crossing_index(int id) const;
  const StrandLayout::Slice& crossing_strands(int id) const;

 private:
  FrontDiagram front_;
  StrandLayout layout_;
  ComponentMap components_;
  ClassicalInvariants invariants_;
  MaslovAssignment maslov_;
  std::vector<int> signs_;
  std::vector<int> indices_;
};

ComponentMap components(const FrontDiagram& front, std::span<const int> reversed = {});
ClassicalInvariants classical_invariants(const FrontDiagram& front, std::span<const int> reversed = {});
MaslovAssignment maslov_potential(const FrontDiagram& front, std::span<const int> reversed = {});
int crossing_index(const FrontDiagram& front, int crossing_id);

/// Splices f2 onto f1 at their outer cusps. Requires f1 to end with a right
/// cusp closing its last two strands and f2 to start with `L 1`; throws
/// std::invalid_argument otherwise.
FrontDiagram connected_sum(const FrontDiagram& f1, const FrontDiagram& f2);

}  // namespace legruling
