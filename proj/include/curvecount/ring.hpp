#pragma once

// Truncated cohomology ring of
//   M_n^m = D_1 x D_d x (X^1 x ... x X^m) x (X_1 x ... x X_n),
// generated by the hyperplane pullbacks y1 (lines), yd (degree-d curves),
// b_1..b_m (singular marked points) and a_1..a_n (tangency marked points),
// subject to y1^3 = b_j^3 = a_i^3 = 0 and yd^(delta_d + 1) = 0.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "curvecount/integer.hpp"

namespace curvecount {

/// Ambient space descriptor: curve degree, singular-point count, tangency-point count.
struct SpaceSig {
  static constexpr int kMaxSingularPoints = 2;
  static constexpr int kMaxTangencyPoints = 32;

  int d = 1;
  int m = 0;
  int n = 0;

  /// Dimension d(d+3)/2 of the linear system of degree-d curves.
  long delta() const { return static_cast<long>(d) * (d + 3) / 2; }
  long dim() const { return 2 + delta() + 2L * m + 2L * n; }

  SpaceSig with_n(int new_n) const { return {d, m, new_n}; }
  SpaceSig with_m(int new_m) const { return {d, new_m, n}; }

  /// Throws InputError when out of the supported range.
  void validate() const;

  friend bool operator==(const SpaceSig&, const SpaceSig&) = default;
};

/// Exponent vector over (y1, yd, b_1..b_m, a_1..a_n). Indices are 1-based.
/// Exponents of y1, b_j, a_i take 2 bits each, so values above 3 are not
/// representable; callers go through RingElem, which truncates first.
class Monomial {
 public:
  Monomial() = default;

  int y1() const { return y1_; }
  int yd() const { return yd_; }
  int b(int j) const { return (b_ >> (2 * (j - 1))) & 3; }
  int a(int i) const { return static_cast<int>((a_ >> (2 * (i - 1))) & 3u); }

  Monomial& set_y1(int e);
  Monomial& set_yd(int e);
  Monomial& set_b(int j, int e);
  Monomial& set_a(int i, int e);

  int degree() const;
  /// Largest a-index carrying a nonzero exponent (0 when none).
  int max_a_index() const;
  int max_b_index() const;

  std::string to_string() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint64_t a_ = 0;
  std::uint16_t yd_ = 0;
  std::uint8_t y1_ = 0;
  std::uint8_t b_ = 0;
};

/// Sparse integer combination of monomials. Zero is the empty map; no
/// stored coefficient is ever zero.
class RingElem {
 public:
  using TermMap = std::map<Monomial, Integer>;

  RingElem() = default;

  static RingElem constant(const Integer& c);
  static RingElem one() { return constant(1); }
  static RingElem term(const Monomial& mono, const Integer& c = 1);
  static RingElem y1();
  static RingElem yd();
  static RingElem b(int j);
  static RingElem a(int i);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Integer coefficient(const Monomial& mono) const;
  void add_term(const Monomial& mono, const Integer& c);

  bool is_homogeneous() const;
  /// Degree of a homogeneous nonzero element. Never call on zero.
  int degree() const;

  RingElem& operator+=(const RingElem& rhs);
  RingElem& operator-=(const RingElem& rhs);
  RingElem& operator*=(const Integer& s);

  friend RingElem operator+(RingElem lhs, const RingElem& rhs) { return lhs += rhs; }
  friend RingElem operator-(RingElem lhs, const RingElem& rhs) { return lhs -= rhs; }
  friend RingElem operator*(RingElem lhs, const Integer& s) { return lhs *= s; }
  friend RingElem operator*(const Integer& s, RingElem rhs) { return rhs *= s; }
  RingElem operator-() const { return *this * Integer(-1); }

  friend bool operator==(const RingElem&, const RingElem&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// True when every exponent respects the nilpotency caps of sig and every
/// index is in range.
bool fits(const Monomial& mono, const SpaceSig& sig);

/// Throws InputError if some term references a variable outside sig.
void check_in_space(const RingElem& e, const SpaceSig& sig);

/// y1^r * yd^s * prod b_j^nu_j * prod a_i^eps_i, truncated (zero if past a cap).
RingElem power_product(const SpaceSig& sig, int r, long s, const std::vector<int>& nu,
                       const std::vector<int>& eps);

/// Cup product with eager truncation.
RingElem mul(const RingElem& lhs, const RingElem& rhs, const SpaceSig& sig);
Monomial mul_monomials(const Monomial& x, const Monomial& y, bool& vanishes, const SpaceSig& sig);

/// Coefficient of the top class y1^2 yd^delta prod b_j^2 prod a_i^2.
Integer integrate(const RingElem& e, const SpaceSig& sig);

/// Fiber integration over the last tangency factor X_n: keeps the a_n^2
/// part and drops a_n. The result lives on sig.with_n(n - 1).
RingElem pushforward_last_a(const RingElem& e, const SpaceSig& sig);

/// Diagonal class a_i^2 + a_i a_j + a_j^2 of {x_i = x_j}.
RingElem diagonal(int i, int j, const SpaceSig& sig);
/// Diagonal b_j^2 + b_j a_i + a_i^2 of {p_j = x_i}.
RingElem diagonal_b(int j, int i, const SpaceSig& sig);

/// Collision divisor a_i + a_j - y1.
RingElem collision_divisor(int i, int j, const SpaceSig& sig);
/// Collision divisor b_j + a_i - y1.
RingElem collision_divisor_b(int j, int i, const SpaceSig& sig);

/// Exchanges the exponents of b_j and a_i in every term. An involution; used
/// to move a marked point between the singular and the tangency slots.
RingElem swap_b_a(const RingElem& e, int j, int i);

}  // namespace curvecount
