#include "legruling/front.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace legruling {

ValidationReport validate(const FrontDiagram& front) {
  ValidationReport report;
  int n = 0;
  int left = 0;
  int right = 0;
  for (std::size_t i = 0; i < front.events.size(); ++i) {
    const auto& ev = front.events[i];
    const std::size_t pos = i + 1;
    auto bad = [&](int hi) {
      report.violations.push_back(
          {pos, "height " + std::to_string(ev.height) + " out of range [1, " + std::to_string(hi) +
                    "] with " + std::to_string(n) + " strands"});
    };
    switch (ev.kind) {
      case EventKind::LeftCusp:
        ++left;
        if (ev.height < 1 || ev.height > n + 1) {
          bad(n + 1);
          // keep counting so later events are judged against a sensible strand count
        }
        n += 2;
        break;
      case EventKind::RightCusp:
        ++right;
        if (ev.height < 1 || ev.height > n - 1) bad(n - 1);
        n = std::max(0, n - 2);
        break;
      case EventKind::Crossing:
        if (ev.height < 1 || ev.height > n - 1) bad(n - 1);
        break;
    }
  }
  if (n != 0) {
    report.violations.push_back({0, "diagram ends with " + std::to_string(n) + " open strands"});
  }
  if (left != right) {
    report.violations.push_back({0, std::to_string(left) + " left cusps but " + std::to_string(right) +
                                        " right cusps"});
  }
  return report;
}

StrandLayout strand_layout(const FrontDiagram& front) {
  StrandLayout out;
  out.at_event.resize(front.events.size());
  std::vector<int> live;  // strand id per height (index 0 = height 1)
  for (std::size_t i = 0; i < front.events.size(); ++i) {
    const auto& ev = front.events[i];
    const auto k = static_cast<std::size_t>(ev.height - 1);
    auto& slice = out.at_event[i];
    switch (ev.kind) {
      case EventKind::LeftCusp: {
        const int upper = static_cast<int>(out.strands.size());
        out.strands.push_back({i, 0, true, false});
        out.strands.push_back({i, 0, false, false});
        live.insert(live.begin() + static_cast<std::ptrdiff_t>(k), {upper, upper + 1});
        slice = {upper, upper + 1};
        ++out.num_left_cusps;
        break;
      }
      case EventKind::RightCusp:
        slice = {live[k], live[k + 1]};
        out.strands[static_cast<std::size_t>(slice.upper)].right_event = i;
        out.strands[static_cast<std::size_t>(slice.upper)].upper_at_right = true;
        out.strands[static_cast<std::size_t>(slice.lower)].right_event = i;
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(k),
                   live.begin() + static_cast<std::ptrdiff_t>(k + 2));
        ++out.num_right_cusps;
        break;
      case EventKind::Crossing:
        slice = {live[k], live[k + 1]};
        std::swap(live[k], live[k + 1]);
        out.crossing_events.push_back(i);
        break;
    }
  }
  return out;
}

namespace {

void require_valid(const FrontDiagram& front) {
  auto report = validate(front);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw std::invalid_argument("invalid front '" + front.name + "'" +
                                (v.event ? " at event " + std::to_string(v.event) : std::string()) + ": " +
                                v.message);
  }
}

// Partner strand of `s` at the given cusp event.
int cusp_partner(const StrandLayout& layout, std::size_t event, int s) {
  const auto& slice = layout.at_event[event];
  return slice.upper == s ? slice.lower : slice.upper;
}

ComponentMap compute_components(const FrontDiagram& front, const StrandLayout& layout,
                                std::span<const int> reversed) {
  ComponentMap map;
  const std::size_t ns = layout.strands.size();
  map.component.assign(ns, -1);
  map.direction.assign(ns, Direction::Rightward);
  map.cusp_turn.assign(front.events.size(), std::nullopt);

  for (std::size_t start = 0; start < ns; ++start) {
    if (map.component[start] != -1) continue;
    const int comp = map.num_components++;
    int s = static_cast<int>(start);
    Direction dir = Direction::Rightward;
    while (map.component[static_cast<std::size_t>(s)] == -1) {
      const auto& strand = layout.strands[static_cast<std::size_t>(s)];
      map.component[static_cast<std::size_t>(s)] = comp;
      map.direction[static_cast<std::size_t>(s)] = dir;
      // travel to the cusp at the far end and turn onto its partner strand
      const bool rightward = dir == Direction::Rightward;
      const std::size_t cusp = rightward ? strand.right_event : strand.left_event;
      const bool arriving_upper = rightward ? strand.upper_at_right : strand.upper_at_left;
      map.cusp_turn[cusp] = arriving_upper ? CuspTurn::Down : CuspTurn::Up;
      s = cusp_partner(layout, cusp, s);
      dir = rightward ? Direction::Leftward : Direction::Rightward;
    }
  }

  for (int c : reversed) {
    if (c < 0 || c >= map.num_components) {
      throw std::invalid_argument("no component with id " + std::to_string(c));
    }
  }
  auto is_reversed = [&](int comp) { return std::find(reversed.begin(), reversed.end(), comp) != reversed.end(); };
  for (std::size_t s = 0; s < ns; ++s) {
    if (!is_reversed(map.component[s])) continue;
    map.direction[s] = map.direction[s] == Direction::Rightward ? Direction::Leftward : Direction::Rightward;
  }
  for (std::size_t i = 0; i < front.events.size(); ++i) {
    if (!map.cusp_turn[i]) continue;
    const int comp = map.component[static_cast<std::size_t>(layout.at_event[i].upper)];
    if (is_reversed(comp)) map.cusp_turn[i] = *map.cusp_turn[i] == CuspTurn::Up ? CuspTurn::Down : CuspTurn::Up;
  }
  return map;
}

int crossing_sign_of(const ComponentMap& map, const StrandLayout::Slice& slice) {
  return map.direction[static_cast<std::size_t>(slice.upper)] == map.direction[static_cast<std::size_t>(slice.lower)]
             ? 1
             : -1;
}

ClassicalInvariants compute_invariants(const FrontDiagram& front, const StrandLayout& layout,
                                       const ComponentMap& map) {
  ClassicalInvariants inv;
  for (std::size_t e : layout.crossing_events) inv.writhe += crossing_sign_of(map, layout.at_event[e]);
  inv.num_right_cusps = layout.num_right_cusps;
  inv.tb = inv.writhe - inv.num_right_cusps;

  std::vector<int> down(static_cast<std::size_t>(map.num_components), 0);
  std::vector<int> up(static_cast<std::size_t>(map.num_components), 0);
  for (std::size_t i = 0; i < front.events.size(); ++i) {
    if (!map.cusp_turn[i]) continue;
    const auto comp = static_cast<std::size_t>(map.component[static_cast<std::size_t>(layout.at_event[i].upper)]);
    (*map.cusp_turn[i] == CuspTurn::Down ? down : up)[comp]++;
  }
  for (int c = 0; c < map.num_components; ++c) {
    const auto ci = static_cast<std::size_t>(c);
    const int rot = (down[ci] - up[ci]) / 2;
    inv.rot_per_component.push_back(rot);
    inv.r = std::gcd(inv.r, std::abs(rot));
  }
  return inv;
}

MaslovAssignment compute_maslov(const FrontDiagram& front, const StrandLayout& layout, const ComponentMap& map,
                                int r) {
  MaslovAssignment m;
  m.modulus = 2 * r;
  const std::size_t ns = layout.strands.size();
  std::vector<std::optional<int>> raw(ns);

  // Walk every component from its earliest strand, which is rightward before
  // any reversal; reversal is folded in afterwards by an odd shift.
  for (std::size_t start = 0; start < ns; ++start) {
    if (raw[start]) continue;
    int s = static_cast<int>(start);
    bool rightward = true;
    int mu = 0;
    while (!raw[static_cast<std::size_t>(s)]) {
      raw[static_cast<std::size_t>(s)] = mu;
      const auto& strand = layout.strands[static_cast<std::size_t>(s)];
      const bool upper_here = rightward ? strand.upper_at_right : strand.upper_at_left;
      const std::size_t cusp = rightward ? strand.right_event : strand.left_event;
      s = cusp_partner(layout, cusp, s);
      mu += upper_here ? -1 : 1;
      rightward = !rightward;
    }
  }

  std::vector<int> comp_min(static_cast<std::size_t>(map.num_components), std::numeric_limits<int>::max());
  std::vector<int> comp_shift(static_cast<std::size_t>(map.num_components), 0);
  for (std::size_t s = 0; s < ns; ++s) {
    const auto c = static_cast<std::size_t>(map.component[s]);
    // the walk above assumed the default orientation; a reversed component
    // needs its parity flipped to keep rightward strands even
    const bool flipped = (*raw[s] % 2 == 0) != (map.direction[s] == Direction::Rightward);
    comp_shift[c] = flipped ? 1 : 0;
  }
  m.potential.resize(ns);
  for (std::size_t s = 0; s < ns; ++s) {
    const auto c = static_cast<std::size_t>(map.component[s]);
    m.potential[s] = *raw[s] + comp_shift[c];
    comp_min[c] = std::min(comp_min[c], m.potential[s]);
  }
  for (std::size_t s = 0; s < ns; ++s) {
    const auto c = static_cast<std::size_t>(map.component[s]);
    const int lo = comp_min[c];
    const int even_floor = lo - (((lo % 2) + 2) % 2);
    m.potential[s] = m.reduce(m.potential[s] - even_floor);
  }

  for (std::size_t i = 0; i < front.events.size(); ++i) {
    if (front.events[i].kind == EventKind::Crossing) continue;
    const auto& slice = layout.at_event[i];
    const int jump = m.reduce(m.potential[static_cast<std::size_t>(slice.upper)] -
                              m.potential[static_cast<std::size_t>(slice.lower)]);
    if (jump != m.reduce(1)) throw std::logic_error("Maslov potential violates the cusp rule");
  }
  for (std::size_t s = 0; s < ns; ++s) {
    const bool even = m.potential[s] % 2 == 0;
    if (even != (map.direction[s] == Direction::Rightward)) {
      throw std::logic_error("Maslov potential violates the even-right convention");
    }
  }
  return m;
}

}  // namespace

int MaslovAssignment::reduce(int value) const {
  if (modulus == 0) return value;
  return ((value % modulus) + modulus) % modulus;
}

OrientedFront::OrientedFront(FrontDiagram front, std::vector<int> reversed_components) : front_(std::move(front)) {
  require_valid(front_);
  layout_ = strand_layout(front_);
  components_ = compute_components(front_, layout_, reversed_components);
  invariants_ = compute_invariants(front_, layout_, components_);
  maslov_ = compute_maslov(front_, layout_, components_, invariants_.r);
  for (std::size_t e : layout_.crossing_events) {
    const auto& slice = layout_.at_event[e];
    signs_.push_back(crossing_sign_of(components_, slice));
    indices_.push_back(maslov_.reduce(maslov_.potential[static_cast<std::size_t>(slice.upper)] -
                                      maslov_.potential[static_cast<std::size_t>(slice.lower)]));
  }
}

const StrandLayout::Slice& OrientedFront::crossing_strands(int id) const {
  if (id < 1 || id > num_crossings()) throw std::out_of_range("no crossing with id " + std::to_string(id));
  return layout_.at_event[layout_.crossing_events[static_cast<std::size_t>(id - 1)]];
}

int OrientedFront::crossing_sign(int id) const {
  crossing_strands(id);
  return signs_[static_cast<std::size_t>(id - 1)];
}

int OrientedFront::crossing_index(int id) const {
  crossing_strands(id);
  return indices_[static_cast<std::size_t>(id - 1)];
}

ComponentMap components(const FrontDiagram& front, std::span<const int> reversed) {
  require_valid(front);
  return compute_components(front, strand_layout(front), reversed);
}

ClassicalInvariants classical_invariants(const FrontDiagram& front, std::span<const int> reversed) {
  return OrientedFront(front, {reversed.begin(), reversed.end()}).invariants();
}

MaslovAssignment maslov_potential(const FrontDiagram& front, std::span<const int> reversed) {
  return OrientedFront(front, {reversed.begin(), reversed.end()}).maslov();
}

int crossing_index(const FrontDiagram& front, int crossing_id) {
  return OrientedFront(front).crossing_index(crossing_id);
}

FrontDiagram connected_sum(const FrontDiagram& f1, const FrontDiagram& f2) {
  require_valid(f1);
  require_valid(f2);
  if (f1.events.empty() || f1.events.back() != R(1)) {
    throw std::invalid_argument("connected sum: left operand must end with 'R 1' closing its last two strands");
  }
  if (f2.events.empty() || f2.events.front() != L(1)) {
    throw std::invalid_argument("connected sum: right operand must start with 'L 1'");
  }
  // a valid front ending in R 1 has exactly two strands live before that cusp
  FrontDiagram out;
  out.name = f1.name + "#" + f2.name;
  out.events.assign(f1.events.begin(), f1.events.end() - 1);
  out.events.insert(out.events.end(), f2.events.begin() + 1, f2.events.end());
  return out;
}

}  // namespace legruling
