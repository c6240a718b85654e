#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace legruling {

using Coefficient = mpz_class;

/// Exponent of a monomial v^v z^z.
struct Exp2 {
  int v = 0;
  int z = 0;

  friend auto operator<=>(const Exp2&, const Exp2&) = default;
  friend Exp2 operator+(Exp2 a, Exp2 b) { return {a.v + b.v, a.z + b.z}; }
};

/// Sparse Laurent polynomial with exact integer coefficients.
///
/// Terms are kept in canonical form: no stored zero coefficients, so two
/// polynomials are equal iff their term maps are equal. Iteration order is
/// the exponent order (lexicographic for Exp2).
template <class Exponent>
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Coefficient>;

  LaurentPoly() = default;

  static LaurentPoly monomial(Exponent e, const Coefficient& c = 1) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
  }

  static LaurentPoly constant(const Coefficient& c) { return monomial(Exponent{}, c); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Coefficient coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  void add_term(const Exponent& e, const Coefficient& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multiplication by the monomial with exponent `shift`.
  LaurentPoly shifted(const Exponent& shift) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPoly& operator*=(const Coefficient& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Coefficient& k) { return a *= k; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly result = constant(1);
    LaurentPoly base = *this;
    while (n != 0) {
      if (n & 1u) result *= base;
      n >>= 1;
      if (n != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

using LaurentPoly1 = LaurentPoly<int>;
using LaurentPoly2 = LaurentPoly<Exp2>;

/// Convenience constructors for monomials c * v^v z^z and c * z^z.
inline LaurentPoly2 vz(int v, int z, const Coefficient& c = 1) { return LaurentPoly2::monomial({v, z}, c); }
inline LaurentPoly1 zpow(int z, const Coefficient& c = 1) { return LaurentPoly1::monomial(z, c); }

/// The slice of `p` at v^k, as a polynomial in z.
LaurentPoly1 coefficient_of_v(const LaurentPoly2& p, int k);

/// Substitutes v = 1.
LaurentPoly1 conway(const LaurentPoly2& p);

std::optional<int> min_v_degree(const LaurentPoly2& p);
std::optional<int> max_z_degree(const LaurentPoly2& p);
std::optional<int> min_degree(const LaurentPoly1& p);
std::optional<int> max_degree(const LaurentPoly1& p);

struct HomflyProfile {
  int e = 0;       // minimum v-degree
  int M = 0;       // maximum z-degree among monomials containing v^e
  LaurentPoly1 Q;  // slice at the requested v-power (v^e by default)
};

/// Throws std::invalid_argument on the zero polynomial.
HomflyProfile profile(const LaurentPoly2& p);
HomflyProfile profile(const LaurentPoly2& p, int slice_at);

std::string to_string(const LaurentPoly1& p, const std::string& var = "z");
std::string to_string(const LaurentPoly2& p);

}  // namespace legruling
