#include "legruling/skein.hpp"

#include <algorithm>
#include <string>

namespace legruling {

namespace {

constexpr int opposite(int slot) { return (slot & ~3) | ((slot + 2) & 3); }
constexpr int local(int slot) { return slot & 3; }

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  check();
}

LinkDiagram LinkDiagram::from_front(const OrientedFront& front) {
  const auto& events = front.front().events;
  const auto& layout = front.layout();
  const auto& dirs = front.components().direction;
  const int nc = front.num_crossings();

  // Half-edge ids: crossing slots first, then one pair per cusp.
  const int cusp_base = 4 * nc;
  const int total = cusp_base + 2 * static_cast<int>(events.size());
  std::vector<int> strand_nbr(static_cast<std::size_t>(total), -1);
  auto link = [&](int a, int b) {
    strand_nbr[static_cast<std::size_t>(a)] = b;
    strand_nbr[static_cast<std::size_t>(b)] = a;
  };
  auto twin = [&](int h) { return cusp_base + ((h - cusp_base) ^ 1); };

  std::vector<Crossing> crossings(static_cast<std::size_t>(nc));
  std::vector<int> pending;  // open half-edge per height
  int c = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto k = static_cast<std::size_t>(events[i].height - 1);
    const int a = cusp_base + 2 * static_cast<int>(i);
    switch (events[i].kind) {
      case EventKind::LeftCusp:
        pending.insert(pending.begin() + static_cast<std::ptrdiff_t>(k), {a, a + 1});
        break;
      case EventKind::RightCusp:
        link(pending[k], a);
        link(pending[k + 1], a + 1);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(k),
                      pending.begin() + static_cast<std::ptrdiff_t>(k + 2));
        break;
      case EventKind::Crossing: {
        // slots counter-clockwise: 0 = SW, 1 = SE, 2 = NE, 3 = NW
        const int g = 4 * c;
        link(pending[k], g + 3);
        link(pending[k + 1], g + 0);
        pending[k] = g + 2;
        pending[k + 1] = g + 1;
        const auto& slice = layout.at_event[i];
        auto& x = crossings[static_cast<std::size_t>(c)];
        x.over_odd = true;  // NW-SE strand, moving down to the right, is in front
        const bool over_right = dirs[static_cast<std::size_t>(slice.upper)] == Direction::Rightward;
        const bool under_right = dirs[static_cast<std::size_t>(slice.lower)] == Direction::Rightward;
        x.incoming = static_cast<std::uint8_t>((over_right ? 1u << 3 : 1u << 1) | (under_right ? 1u << 0 : 1u << 2));
        ++c;
        break;
      }
    }
  }

  std::vector<bool> used(static_cast<std::size_t>(total), false);
  for (int g = 0; g < cusp_base; ++g) {
    int x = strand_nbr[static_cast<std::size_t>(g)];
    while (x >= cusp_base) {
      used[static_cast<std::size_t>(x)] = true;
      const int y = twin(x);
      used[static_cast<std::size_t>(y)] = true;
      x = strand_nbr[static_cast<std::size_t>(y)];
    }
    crossings[static_cast<std::size_t>(g / 4)].adj[static_cast<std::size_t>(g % 4)] = x;
  }
  int loops = 0;
  for (int h = cusp_base; h < total; ++h) {
    if (used[static_cast<std::size_t>(h)] || strand_nbr[static_cast<std::size_t>(h)] < 0) continue;
    ++loops;
    int x = h;
    while (!used[static_cast<std::size_t>(x)]) {
      used[static_cast<std::size_t>(x)] = true;
      const int y = twin(x);
      used[static_cast<std::size_t>(y)] = true;
      x = strand_nbr[static_cast<std::size_t>(y)];
    }
  }
  return LinkDiagram(std::move(crossings), loops);
}

void LinkDiagram::check() const {
  const int n = 4 * num_crossings();
  for (int g = 0; g < n; ++g) {
    const int p = adj(g);
    if (p < 0 || p >= n || p == g || adj(p) != g) {
      throw std::logic_error("link diagram: broken edge at slot " + std::to_string(g));
    }
    if (incoming(g) == incoming(p)) {
      throw std::logic_error("link diagram: inconsistent orientation on edge at slot " + std::to_string(g));
    }
    if (incoming(g) == incoming(opposite(g))) {
      throw std::logic_error("link diagram: strand orientation broken at slot " + std::to_string(g));
    }
  }
}

int LinkDiagram::sign(int c) const {
  const auto& x = crossings_.at(static_cast<std::size_t>(c));
  int under_in = -1;
  int over_in = -1;
  for (int s = 0; s < 4; ++s) {
    if (!((x.incoming >> s) & 1u)) continue;
    const bool on_over = (s % 2 == 1) == x.over_odd;
    (on_over ? over_in : under_in) = s;
  }
  return ((over_in - under_in + 4) % 4) == 3 ? 1 : -1;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < num_crossings(); ++c) w += sign(c);
  return w;
}

std::vector<std::vector<LinkDiagram::Visit>> LinkDiagram::component_traversals(bool along_orientation) const {
  std::vector<std::vector<Visit>> out;
  const int n = 4 * num_crossings();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int g = 0; g < n; ++g) {
    if (seen[static_cast<std::size_t>(g)]) continue;
    int entry = incoming(g) == along_orientation ? g : opposite(g);
    const int start = entry;
    auto& comp = out.emplace_back();
    do {
      seen[static_cast<std::size_t>(entry)] = true;
      seen[static_cast<std::size_t>(opposite(entry))] = true;
      comp.emplace_back(entry / 4, local(entry));
      entry = adj(opposite(entry));
    } while (entry != start);
  }
  return out;
}

int LinkDiagram::num_components() const {
  return static_cast<int>(component_traversals().size()) + free_loops_;
}

int LinkDiagram::self_writhe() const {
  std::vector<int> first_comp(crossings_.size(), -1);
  std::vector<bool> self(crossings_.size(), false);
  const auto comps = component_traversals();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    for (const auto& [c, s] : comps[ci]) {
      auto& f = first_comp[static_cast<std::size_t>(c)];
      if (f == -1) {
        f = static_cast<int>(ci);
      } else if (f == static_cast<int>(ci)) {
        self[static_cast<std::size_t>(c)] = true;
      }
    }
  }
  int w = 0;
  for (int c = 0; c < num_crossings(); ++c) {
    if (self[static_cast<std::size_t>(c)]) w += sign(c);
  }
  return w;
}

void LinkDiagram::splice_out(int c, std::array<std::pair<int, int>, 2> links) {
  auto internal = [&](int s) {
    for (auto [a, b] : links) {
      if (a == s) return b;
      if (b == s) return a;
    }
    throw std::logic_error("splice: slot not covered by links");
  };
  const int base = 4 * c;
  auto inside = [&](int g) { return g / 4 == c; };
  std::array<bool, 4> done{};
  for (int s = 0; s < 4; ++s) {
    if (done[static_cast<std::size_t>(s)]) continue;
    const int ext = adj(base + s);
    if (inside(ext)) continue;
    done[static_cast<std::size_t>(s)] = true;
    int cur = internal(s);
    done[static_cast<std::size_t>(cur)] = true;
    int out = adj(base + cur);
    while (inside(out)) {
      const int t = local(out);
      done[static_cast<std::size_t>(t)] = true;
      cur = internal(t);
      done[static_cast<std::size_t>(cur)] = true;
      out = adj(base + cur);
    }
    adj(ext) = out;
    adj(out) = ext;
  }
  // whatever is left closes up inside the crossing
  for (int s = 0; s < 4; ++s) {
    if (done[static_cast<std::size_t>(s)]) continue;
    ++free_loops_;
    int t = s;
    while (!done[static_cast<std::size_t>(t)]) {
      done[static_cast<std::size_t>(t)] = true;
      const int u = internal(t);
      done[static_cast<std::size_t>(u)] = true;
      t = local(adj(base + u));
    }
  }
  erase_crossing(c);
}

void LinkDiagram::erase_crossing(int c) {
  const int last = num_crossings() - 1;
  if (c != last) {
    Crossing moved = crossings_[static_cast<std::size_t>(last)];
    for (int s = 0; s < 4; ++s) {
      int& p = moved.adj[static_cast<std::size_t>(s)];
      if (p / 4 == last) {
        p = 4 * c + local(p);
      } else {
        adj(p) = 4 * c + s;
      }
    }
    crossings_[static_cast<std::size_t>(c)] = moved;
  }
  crossings_.pop_back();
}

void LinkDiagram::reorient() {
  for (auto& x : crossings_) x.incoming = 0;
  const int n = 4 * num_crossings();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int g = 0; g < n; ++g) {
    if (seen[static_cast<std::size_t>(g)]) continue;
    int entry = g;
    do {
      seen[static_cast<std::size_t>(entry)] = true;
      seen[static_cast<std::size_t>(opposite(entry))] = true;
      crossings_[static_cast<std::size_t>(entry / 4)].incoming |= static_cast<std::uint8_t>(1u << local(entry));
      entry = adj(opposite(entry));
    } while (entry != g);
  }
}

LinkDiagram LinkDiagram::with_crossing_changed(int c) const {
  LinkDiagram out = *this;
  auto& x = out.crossings_.at(static_cast<std::size_t>(c));
  x.over_odd = !x.over_odd;
  return out;
}

LinkDiagram LinkDiagram::oriented_smoothing(int c) const {
  const auto& x = crossings_.at(static_cast<std::size_t>(c));
  int under_in = -1;
  int over_in = -1;
  for (int s = 0; s < 4; ++s) {
    if (!((x.incoming >> s) & 1u)) continue;
    ((s % 2 == 1) == x.over_odd ? over_in : under_in) = s;
  }
  LinkDiagram out = *this;
  out.splice_out(c, {{{under_in, (over_in + 2) % 4}, {over_in, (under_in + 2) % 4}}});
  return out;
}

LinkDiagram LinkDiagram::unoriented_smoothing(int c, Smoothing which) const {
  const auto& x = crossings_.at(static_cast<std::size_t>(c));
  const int o1 = x.over_odd ? 1 : 0;
  const int o2 = o1 + 2;
  const int step = which == Smoothing::Zero ? 3 : 1;  // clockwise is -1 mod 4
  LinkDiagram out = *this;
  out.splice_out(c, {{{o1, (o1 + step) % 4}, {o2, (o2 + step) % 4}}});
  out.reorient();
  return out;
}

int LinkDiagram::remove_curls() {
  int total = 0;
  bool found = true;
  while (found) {
    found = false;
    for (int c = 0; c < num_crossings() && !found; ++c) {
      for (int s = 0; s < 4; ++s) {
        if (adj(4 * c + s) != 4 * c + (s + 1) % 4) continue;
        total += sign(c);
        splice_out(c, {{{(s + 1) % 4, (s + 2) % 4}, {(s + 3) % 4, s}}});
        found = true;
        break;
      }
    }
  }
  return total;
}

int LinkDiagram::seifert_circles() const {
  LinkDiagram d = *this;
  while (d.num_crossings() > 0) d = d.oriented_smoothing(d.num_crossings() - 1);
  return d.free_loops();
}

nlohmann::json LinkDiagram::to_pd_json() const {
  std::vector<int> edge_of_slot(static_cast<std::size_t>(4 * num_crossings()), 0);
  int next_label = 1;
  for (const auto& comp : component_traversals()) {
    const int m = static_cast<int>(comp.size());
    for (int i = 0; i < m; ++i) {
      const int entry = 4 * comp[static_cast<std::size_t>(i)].first + comp[static_cast<std::size_t>(i)].second;
      edge_of_slot[static_cast<std::size_t>(entry)] = next_label + i;
      edge_of_slot[static_cast<std::size_t>(opposite(entry))] = next_label + (i + 1) % m;
    }
    next_label += m;
  }
  nlohmann::json pd = nlohmann::json::array();
  nlohmann::json signs = nlohmann::json::array();
  for (int c = 0; c < num_crossings(); ++c) {
    const auto& x = crossings_[static_cast<std::size_t>(c)];
    int under_in = 0;
    for (int s = 0; s < 4; ++s) {
      if (((x.incoming >> s) & 1u) && (s % 2 == 1) != x.over_odd) under_in = s;
    }
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) row.push_back(edge_of_slot[static_cast<std::size_t>(4 * c + (under_in + i) % 4)]);
    pd.push_back(row);
    signs.push_back(sign(c));
  }
  return {{"pd", pd}, {"signs", signs}, {"free_loops", free_loops_}, {"components", num_components()}};
}

std::optional<int> first_non_descending(const LinkDiagram& d, SkeinStrategy strategy) {
  const bool alternate = strategy == SkeinStrategy::Alternate;
  auto comps = d.component_traversals(!alternate);
  if (alternate) {
    // each traversal starts at its lowest slot; rebase at the highest one and
    // take components in reverse discovery order
    for (auto& comp : comps) {
      auto key = [](const LinkDiagram::Visit& v) { return std::max(4 * v.first + v.second, 4 * v.first + (v.second + 2) % 4); };
      auto it = std::max_element(comp.begin(), comp.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
      std::rotate(comp.begin(), it, comp.end());
    }
    std::reverse(comps.begin(), comps.end());
  }
  std::vector<bool> seen(static_cast<std::size_t>(d.num_crossings()), false);
  for (const auto& comp : comps) {
    for (const auto& [c, s] : comp) {
      if (seen[static_cast<std::size_t>(c)]) continue;
      seen[static_cast<std::size_t>(c)] = true;
      const bool on_over = (s % 2 == 1) == d.crossings()[static_cast<std::size_t>(c)].over_odd;
      if (!on_over) return c;
    }
  }
  return std::nullopt;
}

LaurentPoly2 unlink_homfly(int components) {
  const LaurentPoly2 loop = vz(-1, -1) - vz(1, -1);
  return loop.pow(static_cast<unsigned>(std::max(0, components - 1)));
}

namespace {

void require_within(const LinkDiagram& d, const SkeinOptions& options) {
  if (d.num_crossings() > options.max_crossings) {
    throw ResourceLimitError("diagram has " + std::to_string(d.num_crossings()) +
                             " crossings, above the skein ceiling of " + std::to_string(options.max_crossings));
  }
}

LaurentPoly2 homfly_rec(LinkDiagram d, SkeinStrategy strategy) {
  d.remove_curls();
  const auto bad = first_non_descending(d, strategy);
  if (!bad) return unlink_homfly(d.num_components());
  const LaurentPoly2 changed = homfly_rec(d.with_crossing_changed(*bad), strategy);
  const LaurentPoly2 smoothed = homfly_rec(d.oriented_smoothing(*bad), strategy);
  if (d.sign(*bad) > 0) {
    // P(L+) = v^2 P(L-) + v z P(L0)
    return changed.shifted({2, 0}) + smoothed.shifted({1, 1});
  }
  // P(L-) = v^-2 P(L+) - v^-1 z P(L0)
  return changed.shifted({-2, 0}) - smoothed.shifted({-1, 1});
}

LaurentPoly2 dubrovnik_rec(LinkDiagram d, SkeinStrategy strategy) {
  const int curls = d.remove_curls();
  const Exp2 curl_factor{-curls, 0};  // a^curls
  const auto bad = first_non_descending(d, strategy);
  if (!bad) {
    const LaurentPoly2 delta = vz(-1, -1) - vz(1, -1) + vz(0, 0);
    const int n = d.num_components();
    return delta.pow(static_cast<unsigned>(n - 1)).shifted(Exp2{-d.self_writhe(), 0} + curl_factor);
  }
  using S = LinkDiagram::Smoothing;
  LaurentPoly2 sum = dubrovnik_rec(d.with_crossing_changed(*bad), strategy);
  sum += dubrovnik_rec(d.unoriented_smoothing(*bad, S::Zero), strategy).shifted({0, 1});
  sum -= dubrovnik_rec(d.unoriented_smoothing(*bad, S::Infinity), strategy).shifted({0, 1});
  return sum.shifted(curl_factor);
}

}  // namespace

LaurentPoly2 homfly(const LinkDiagram& d, const SkeinOptions& options) {
  require_within(d, options);
  return homfly_rec(d, options.strategy);
}

LaurentPoly2 dubrovnik_regular(const LinkDiagram& d, const SkeinOptions& options) {
  require_within(d, options);
  return dubrovnik_rec(d, options.strategy);
}

LaurentPoly2 kauffman_dubrovnik(const LinkDiagram& d, const SkeinOptions& options) {
  return dubrovnik_regular(d, options).shifted({d.writhe(), 0});
}

int seifert_diagram_genus(const LinkDiagram& d) {
  if (d.num_components() != 1) {
    throw std::invalid_argument("Seifert genus needs a knot diagram, got " + std::to_string(d.num_components()) +
                                " components");
  }
  return (d.num_crossings() - d.seifert_circles() + 1) / 2;
}

}  // namespace legruling
