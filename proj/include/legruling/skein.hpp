#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "legruling/front.hpp"
#include "legruling/poly.hpp"

namespace legruling {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oriented planar link diagram as a 4-valent graph.
///
/// Each crossing has four slots numbered counter-clockwise. Slot s of
/// crossing c has the global id 4c + s; `adj` holds the global id of the slot
/// at the other end of each edge. The strand through slots {0, 2} and the one
/// through {1, 3} cross; `over_odd` says which is on top. Crossing-free
/// components are counted in `free_loops`.
class LinkDiagram {
 public:
  struct Crossing {
    std::array<int, 4> adj{};
    bool over_odd = true;
    std::uint8_t incoming = 0;  // bit s set iff the orientation enters through slot s
  };

  enum class Smoothing {
    Zero,      // joins each over-strand end to its clockwise neighbour
    Infinity,  // joins each over-strand end to its counter-clockwise neighbour
  };

  LinkDiagram() = default;
  LinkDiagram(std::vector<Crossing> crossings, int free_loops);

  /// Cusps become extrema; at every crossing the strand moving down to the
  /// right passes over. Orientation comes from the front's component map.
  static LinkDiagram from_front(const OrientedFront& front);

  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int free_loops() const { return free_loops_; }
  int num_components() const;
  const std::vector<Crossing>& crossings() const { return crossings_; }

  int sign(int c) const;
  int writhe() const;
  /// Writhe restricted to crossings whose strands lie on the same component.
  int self_writhe() const;

  LinkDiagram with_crossing_changed(int c) const;
  LinkDiagram oriented_smoothing(int c) const;
  /// Orientation of the result is re-chosen per component.
  LinkDiagram unoriented_smoothing(int c, Smoothing which) const;

  /// Removes Reidemeister-I curls until none remain; returns the sum of
  /// their signs.
  int remove_curls();

  /// Number of circles after the oriented smoothing of every crossing.
  int seifert_circles() const;

  /// Checks the slot graph and orientation bits; throws std::logic_error.
  void check() const;

  /// PD-style export: each crossing as [i, j, k, l], edges labelled along
  /// the orientation, starting at the incoming under-strand and going
  /// counter-clockwise.
  nlohmann::json to_pd_json() const;

  /// Traversal of one component: the sequence of (crossing, entry slot).
  using Visit = std::pair<int, int>;
  std::vector<std::vector<Visit>> component_traversals(bool along_orientation = true) const;

 private:
  int& adj(int slot) { return crossings_[static_cast<std::size_t>(slot / 4)].adj[static_cast<std::size_t>(slot % 4)]; }
  int adj(int slot) const { return crossings_[static_cast<std::size_t>(slot / 4)].adj[static_cast<std::size_t>(slot % 4)]; }
  bool incoming(int slot) const { return (crossings_[static_cast<std::size_t>(slot / 4)].incoming >> (slot % 4)) & 1u; }

  void splice_out(int c, std::array<std::pair<int, int>, 2> links);
  void erase_crossing(int c);
  void reorient();

  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
};

enum class SkeinStrategy {
  Standard,   // components by lowest slot, base point at lowest slot, along orientation
  Alternate,  // components in reverse order, base point at highest slot, against orientation
};

struct SkeinOptions {
  int max_crossings = 16;
  SkeinStrategy strategy = SkeinStrategy::Standard;
};

/// First crossing met from below in the descending traversal, if any.
std::optional<int> first_non_descending(const LinkDiagram& d, SkeinStrategy strategy);

/// Homfly polynomial with v^-1 P(L+) - v P(L-) = z P(L0), P(unknot) = 1.
/// Throws ResourceLimitError above the crossing ceiling.
LaurentPoly2 homfly(const LinkDiagram& d, const SkeinOptions& options = {});

/// Regular-isotopy Dubrovnik polynomial D in the variables (v, z) with a = v^-1:
/// D(L+) - D(L-) = z (D(L0) - D(Linf)), D(positive curl) = a D, D(unknot) = 1.
LaurentPoly2 dubrovnik_regular(const LinkDiagram& d, const SkeinOptions& options = {});

/// Writhe-normalized Dubrovnik polynomial a^-w D, rendered with a = v^-1.
LaurentPoly2 kauffman_dubrovnik(const LinkDiagram& d, const SkeinOptions& options = {});

/// (crossings - Seifert circles + 1) / 2. Throws std::invalid_argument on links.
int seifert_diagram_genus(const LinkDiagram& d);

/// ((v^-1 - v) / z)^(n-1).
LaurentPoly2 unlink_homfly(int components);

}  // namespace legruling
