#include "legruling/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace legruling {

LaurentPoly1 coefficient_of_v(const LaurentPoly2& p, int k) {
  LaurentPoly1 out;
  auto it = p.terms().lower_bound(Exp2{k, std::numeric_limits<int>::min()});
  for (; it != p.terms().end() && it->first.v == k; ++it) out.add_term(it->first.z, it->second);
  return out;
}

LaurentPoly1 conway(const LaurentPoly2& p) {
  LaurentPoly1 out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.z, c);
  return out;
}

std::optional<int> min_v_degree(const LaurentPoly2& p) {
  if (p.is_zero()) return std::nullopt;
  return p.terms().begin()->first.v;
}

std::optional<int> max_z_degree(const LaurentPoly2& p) {
  if (p.is_zero()) return std::nullopt;
  int m = std::numeric_limits<int>::min();
  for (const auto& [e, c] : p.terms()) m = std::max(m, e.z);
  return m;
}

std::optional<int> min_degree(const LaurentPoly1& p) {
  if (p.is_zero()) return std::nullopt;
  return p.terms().begin()->first;
}

std::optional<int> max_degree(const LaurentPoly1& p) {
  if (p.is_zero()) return std::nullopt;
  return p.terms().rbegin()->first;
}

HomflyProfile profile(const LaurentPoly2& p) {
  if (p.is_zero()) throw std::invalid_argument("profile of the zero polynomial");
  return profile(p, *min_v_degree(p));
}

HomflyProfile profile(const LaurentPoly2& p, int slice_at) {
  if (p.is_zero()) throw std::invalid_argument("profile of the zero polynomial");
  HomflyProfile out;
  out.e = *min_v_degree(p);
  out.M = *max_degree(coefficient_of_v(p, out.e));
  out.Q = coefficient_of_v(p, slice_at);
  return out;
}

namespace {

void append_monomial(std::ostringstream& os, bool first, const Coefficient& c,
                     const std::string& vars) {
  Coefficient mag = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (vars.empty()) {
    os << mag.get_str();
  } else {
    if (mag != 1) os << mag.get_str() << '*';
    os << vars;
  }
}

std::string power(const std::string& var, int k) {
  if (k == 0) return {};
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace

std::string to_string(const LaurentPoly1& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads most naturally for the z-polynomials
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    append_monomial(os, first, it->second, power(var, it->first));
    first = false;
  }
  return os.str();
}

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string vars = power("v", e.v);
    std::string zs = power("z", e.z);
    if (!vars.empty() && !zs.empty()) vars += '*';
    vars += zs;
    append_monomial(os, first, c, vars);
    first = false;
  }
  return os.str();
}

}  // namespace legruling
