#include "legruling/ruling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace legruling {

std::string_view to_string(GradingClass g) {
  switch (g) {
    case GradingClass::Ungraded: return "ungraded";
    case GradingClass::TwoGraded: return "two_graded";
    case GradingClass::ZGraded: return "z_graded";
  }
  return "?";
}

GradingClass parse_grading_class(std::string_view s) {
  if (s == "ungraded") return GradingClass::Ungraded;
  if (s == "two_graded") return GradingClass::TwoGraded;
  if (s == "z_graded") return GradingClass::ZGraded;
  throw std::invalid_argument("unknown grading class '" + std::string(s) + "'");
}

PairingState::PairingState(std::vector<int> partner) : partner_(std::move(partner)) {
  for (int h = 1; h <= size(); ++h) {
    const int p = this->partner(h);
    if (p < 1 || p > size() || p == h || this->partner(p) != h) {
      throw std::invalid_argument("pairing is not a fixed-point-free involution");
    }
  }
}

void PairingState::open_eye(int k) {
  for (int& p : partner_) {
    if (p >= k) p += 2;
  }
  partner_.insert(partner_.begin() + (k - 1), {k + 1, k});
}

void PairingState::close_eye(int k) {
  partner_.erase(partner_.begin() + (k - 1), partner_.begin() + (k + 1));
  for (int& p : partner_) {
    if (p > k + 1) p -= 2;
  }
}

void PairingState::cross(int k) {
  auto swap_label = [k](int h) { return h == k ? k + 1 : h == k + 1 ? k : h; };
  for (int& p : partner_) p = swap_label(p);
  std::swap(partner_[static_cast<std::size_t>(k - 1)], partner_[static_cast<std::size_t>(k)]);
}

namespace {

struct Interval {
  int lo;
  int hi;
};

Interval eye_span(const PairingState& state, int h) {
  const int p = state.partner(h);
  return {std::min(h, p), std::max(h, p)};
}

bool nested(Interval a, Interval b) {
  return (a.lo < b.lo && b.hi < a.hi) || (b.lo < a.lo && a.hi < b.hi);
}

bool disjoint(Interval a, Interval b) { return a.hi < b.lo || b.hi < a.lo; }

struct Band {
  int eye_a;
  int eye_b;
  bool same_side;  // nested eyes carry equal orientations across a half-twisted band
};

// 2-colouring of eyes consistent with every band's constraint.
bool bands_orientable(int eyes, const std::vector<Band>& bands) {
  std::vector<int> parent(static_cast<std::size_t>(eyes));
  std::vector<int> parity(static_cast<std::size_t>(eyes), 0);  // relative to parent
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    int p = 0;
    while (parent[static_cast<std::size_t>(x)] != x) {
      p ^= parity[static_cast<std::size_t>(x)];
      x = parent[static_cast<std::size_t>(x)];
    }
    return std::pair{x, p};
  };
  for (const auto& band : bands) {
    const auto [ra, pa] = find(band.eye_a);
    const auto [rb, pb] = find(band.eye_b);
    const int want = band.same_side ? 0 : 1;
    if (ra == rb) {
      if ((pa ^ pb) != want) return false;
    } else {
      parent[static_cast<std::size_t>(ra)] = rb;
      parity[static_cast<std::size_t>(ra)] = pa ^ pb ^ want;
    }
  }
  return true;
}

struct Branch {
  PairingState state;
  std::vector<int> eye;  // eye id per height, index 0 = height 1
  std::vector<int> switches;
  std::vector<Band> bands;
};

class Enumerator {
 public:
  Enumerator(const OrientedFront& front, GradingClass filter) : front_(front) {
    for (int id = 1; id <= front.num_crossings(); ++id) {
      const int index = front.crossing_index(id);
      bool ok = true;
      if (filter == GradingClass::TwoGraded) ok = index % 2 == 0;
      if (filter == GradingClass::ZGraded) ok = index == 0;
      switch_allowed_.push_back(ok);
    }
  }

  std::vector<Ruling> run() {
    explore(Branch{}, 0, 0, 0);
    std::sort(out_.begin(), out_.end(), [](const Ruling& a, const Ruling& b) { return a.switches < b.switches; });
    return std::move(out_);
  }

 private:
  void explore(Branch b, std::size_t event, int crossing, int eyes_born) {
    const auto& events = front_.front().events;
    for (; event < events.size(); ++event) {
      const int k = events[event].height;
      const auto ki = static_cast<std::size_t>(k - 1);
      switch (events[event].kind) {
        case EventKind::LeftCusp:
          b.state.open_eye(k);
          b.eye.insert(b.eye.begin() + static_cast<std::ptrdiff_t>(ki), {eyes_born, eyes_born});
          ++eyes_born;
          break;
        case EventKind::RightCusp:
          if (b.state.partner(k) != k + 1) return;
          b.state.close_eye(k);
          b.eye.erase(b.eye.begin() + static_cast<std::ptrdiff_t>(ki),
                      b.eye.begin() + static_cast<std::ptrdiff_t>(ki + 2));
          break;
        case EventKind::Crossing: {
          ++crossing;
          // the two arcs of one eye may only meet at its cusps
          if (b.state.partner(k) == k + 1) return;
          if (switch_allowed_[static_cast<std::size_t>(crossing - 1)] && is_normal_switch(b.state, k)) {
            Branch sw = b;
            sw.switches.push_back(crossing);
            sw.bands.push_back({sw.eye[ki], sw.eye[ki + 1], !disjoint(eye_span(sw.state, k), eye_span(sw.state, k + 1))});
            explore(std::move(sw), event + 1, crossing, eyes_born);
          }
          b.state.cross(k);
          std::swap(b.eye[ki], b.eye[ki + 1]);
          break;
        }
      }
    }
    record(b, eyes_born);
  }

  void record(const Branch& b, int eyes) {
    Ruling r;
    r.switches = b.switches;
    r.eyes = eyes;
    r.theta = eyes - static_cast<int>(b.switches.size());
    r.grading = classify(front_, r.switches);
    r.orientable = bands_orientable(eyes, b.bands);
    r.genus = genus(r, front_);
    out_.push_back(std::move(r));
  }

  const OrientedFront& front_;
  std::vector<bool> switch_allowed_;
  std::vector<Ruling> out_;
};

}  // namespace

bool is_normal_switch(const PairingState& state, int k) {
  const Interval a = eye_span(state, k);
  const Interval b = eye_span(state, k + 1);
  return disjoint(a, b) || nested(a, b);
}

GradingClass classify(const OrientedFront& front, const std::vector<int>& switches) {
  GradingClass g = GradingClass::ZGraded;
  for (int id : switches) {
    const int index = front.crossing_index(id);
    if (index % 2 != 0) return GradingClass::Ungraded;
    if (index != 0) g = GradingClass::TwoGraded;
  }
  return g;
}

int theta(const Ruling& ruling) { return ruling.eyes - static_cast<int>(ruling.switches.size()); }

std::optional<int> genus(const Ruling& ruling, const OrientedFront& front) {
  if (!front.is_knot() || !satisfies(ruling.grading, GradingClass::TwoGraded)) return std::nullopt;
  const int twice = static_cast<int>(ruling.switches.size()) - ruling.eyes + 1;
  if (twice < 0 || twice % 2 != 0) {
    throw std::logic_error("2-graded knot ruling with non-integral genus");
  }
  return twice / 2;
}

std::vector<Ruling> enumerate_rulings(const OrientedFront& front, GradingClass filter) {
  return Enumerator(front, filter).run();
}

LaurentPoly1 ruling_polynomial(const std::vector<Ruling>& rulings) {
  LaurentPoly1 out;
  for (const auto& r : rulings) out.add_term(1 - r.theta, 1);
  return out;
}

LaurentPoly1 ruling_polynomial(const OrientedFront& front, GradingClass filter) {
  return ruling_polynomial(enumerate_rulings(front, filter));
}

const std::vector<Ruling>& RulingCensus::rulings(GradingClass g) const {
  switch (g) {
    case GradingClass::Ungraded: return ungraded;
    case GradingClass::TwoGraded: return two_graded;
    case GradingClass::ZGraded: return z_graded;
  }
  throw std::invalid_argument("bad grading class");
}

const LaurentPoly1& RulingCensus::polynomial(GradingClass g) const {
  switch (g) {
    case GradingClass::Ungraded: return ungraded_poly;
    case GradingClass::TwoGraded: return two_graded_poly;
    case GradingClass::ZGraded: return z_graded_poly;
  }
  throw std::invalid_argument("bad grading class");
}

std::optional<int> RulingCensus::max_two_graded_genus() const {
  std::optional<int> best;
  for (const auto& r : two_graded) {
    if (r.genus && (!best || *r.genus > *best)) best = r.genus;
  }
  return best;
}

RulingCensus census(const OrientedFront& front) {
  RulingCensus c;
  c.ungraded = enumerate_rulings(front, GradingClass::Ungraded);
  for (const auto& r : c.ungraded) {
    if (satisfies(r.grading, GradingClass::TwoGraded)) c.two_graded.push_back(r);
    if (satisfies(r.grading, GradingClass::ZGraded)) c.z_graded.push_back(r);
  }
  c.ungraded_poly = ruling_polynomial(c.ungraded);
  c.two_graded_poly = ruling_polynomial(c.two_graded);
  c.z_graded_poly = ruling_polynomial(c.z_graded);
  return c;
}

}  // namespace legruling
