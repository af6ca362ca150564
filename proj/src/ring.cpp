#include "curvecount/ring.hpp"

#include <sstream>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

constexpr int kPointCap = 2;

void require_a_index(int i, const SpaceSig& sig) {
  if (i < 1 || i > sig.n)
    throw InputError("a-index " + std::to_string(i) + " outside 1.." + std::to_string(sig.n));
}

void require_b_index(int j, const SpaceSig& sig) {
  if (j < 1 || j > sig.m)
    throw InputError("b-index " + std::to_string(j) + " outside 1.." + std::to_string(sig.m));
}

}  // namespace

void SpaceSig::validate() const {
  if (d < 1) throw InputError("curve degree must be positive");
  if (delta() > 0xFFFF) throw InputError("curve degree too large");
  if (m < 0 || m > kMaxSingularPoints) throw InputError("singular point count must be 0..2");
  if (n < 0 || n > kMaxTangencyPoints) throw InputError("tangency point count must be 0..32");
}

// --- Monomial --------------------------------------------------------------

Monomial& Monomial::set_y1(int e) {
  y1_ = static_cast<std::uint8_t>(e);
  return *this;
}

Monomial& Monomial::set_yd(int e) {
  yd_ = static_cast<std::uint16_t>(e);
  return *this;
}

Monomial& Monomial::set_b(int j, int e) {
  const int shift = 2 * (j - 1);
  b_ = static_cast<std::uint8_t>((b_ & ~(3u << shift)) | (static_cast<unsigned>(e & 3) << shift));
  return *this;
}

Monomial& Monomial::set_a(int i, int e) {
  const int shift = 2 * (i - 1);
  a_ = (a_ & ~(std::uint64_t{3} << shift)) | (static_cast<std::uint64_t>(e & 3) << shift);
  return *this;
}

int Monomial::degree() const {
  int deg = y1_ + yd_;
  for (int j = 1; j <= SpaceSig::kMaxSingularPoints; ++j) deg += b(j);
  for (std::uint64_t rest = a_; rest != 0; rest >>= 2) deg += static_cast<int>(rest & 3u);
  return deg;
}

int Monomial::max_a_index() const {
  int idx = 0;
  int i = 1;
  for (std::uint64_t rest = a_; rest != 0; rest >>= 2, ++i)
    if (rest & 3u) idx = i;
  return idx;
}

int Monomial::max_b_index() const {
  for (int j = SpaceSig::kMaxSingularPoints; j >= 1; --j)
    if (b(j) != 0) return j;
  return 0;
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto put = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!first) out << '*';
    first = false;
    out << name;
    if (e > 1) out << '^' << e;
  };
  put("y1", y1_);
  put("yd", yd_);
  for (int j = 1; j <= max_b_index(); ++j) put("b" + std::to_string(j), b(j));
  for (int i = 1; i <= max_a_index(); ++i) put("a" + std::to_string(i), a(i));
  if (first) out << '1';
  return out.str();
}

// --- RingElem --------------------------------------------------------------

RingElem RingElem::constant(const Integer& c) { return term(Monomial{}, c); }

RingElem RingElem::term(const Monomial& mono, const Integer& c) {
  RingElem out;
  out.add_term(mono, c);
  return out;
}

RingElem RingElem::y1() { return term(Monomial{}.set_y1(1)); }
RingElem RingElem::yd() { return term(Monomial{}.set_yd(1)); }
RingElem RingElem::b(int j) { return term(Monomial{}.set_b(j, 1)); }
RingElem RingElem::a(int i) { return term(Monomial{}.set_a(i, 1)); }

Integer RingElem::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Integer(0) : it->second;
}

void RingElem::add_term(const Monomial& mono, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool RingElem::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int deg = terms_.begin()->first.degree();
  for (const auto& [mono, c] : terms_)
    if (mono.degree() != deg) return false;
  return true;
}

int RingElem::degree() const { return terms_.begin()->first.degree(); }

RingElem& RingElem::operator+=(const RingElem& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& rhs) {
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

RingElem& RingElem::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mono == Monomial{};
    if (mag != 1 || unit) {
      out << mag.get_str();
      if (!unit) out << '*';
    }
    if (!unit) out << mono.to_string();
  }
  return out.str();
}

// --- free functions --------------------------------------------------------

bool fits(const Monomial& mono, const SpaceSig& sig) {
  if (mono.y1() > kPointCap || mono.yd() > sig.delta()) return false;
  if (mono.max_b_index() > sig.m || mono.max_a_index() > sig.n) return false;
  for (int j = 1; j <= sig.m; ++j)
    if (mono.b(j) > kPointCap) return false;
  for (int i = 1; i <= sig.n; ++i)
    if (mono.a(i) > kPointCap) return false;
  return true;
}

void check_in_space(const RingElem& e, const SpaceSig& sig) {
  for (const auto& [mono, c] : e) {
    if (mono.max_b_index() > sig.m || mono.max_a_index() > sig.n)
      throw InputError("term " + mono.to_string() + " references a point outside M_" +
                       std::to_string(sig.n) + "^" + std::to_string(sig.m));
    if (!fits(mono, sig))
      throw InputError("term " + mono.to_string() + " exceeds the nilpotency caps");
  }
}

RingElem power_product(const SpaceSig& sig, int r, long s, const std::vector<int>& nu,
                       const std::vector<int>& eps) {
  if (static_cast<int>(nu.size()) > sig.m || static_cast<int>(eps.size()) > sig.n)
    throw InputError("constraint has more point exponents than the space has points");
  if (r < 0 || s < 0) throw InputError("negative exponent in constraint");
  for (int e : nu)
    if (e < 0) throw InputError("negative exponent in constraint");
  for (int e : eps)
    if (e < 0) throw InputError("negative exponent in constraint");
  if (r > kPointCap || s > sig.delta()) return {};
  Monomial mono;
  mono.set_y1(r).set_yd(static_cast<int>(s));
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (nu[j] > kPointCap) return {};
    mono.set_b(static_cast<int>(j) + 1, nu[j]);
  }
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] > kPointCap) return {};
    mono.set_a(static_cast<int>(i) + 1, eps[i]);
  }
  return RingElem::term(mono);
}

Monomial mul_monomials(const Monomial& x, const Monomial& y, bool& vanishes, const SpaceSig& sig) {
  vanishes = false;
  Monomial out;
  const int e_y1 = x.y1() + y.y1();
  const long e_yd = static_cast<long>(x.yd()) + y.yd();
  if (e_y1 > kPointCap || e_yd > sig.delta()) {
    vanishes = true;
    return out;
  }
  out.set_y1(e_y1).set_yd(static_cast<int>(e_yd));
  for (int j = 1; j <= sig.m; ++j) {
    const int e = x.b(j) + y.b(j);
    if (e > kPointCap) {
      vanishes = true;
      return out;
    }
    out.set_b(j, e);
  }
  for (int i = 1; i <= sig.n; ++i) {
    const int e = x.a(i) + y.a(i);
    if (e > kPointCap) {
      vanishes = true;
      return out;
    }
    out.set_a(i, e);
  }
  return out;
}

RingElem mul(const RingElem& lhs, const RingElem& rhs, const SpaceSig& sig) {
  check_in_space(lhs, sig);
  check_in_space(rhs, sig);
  RingElem out;
  for (const auto& [mx, cx] : lhs) {
    for (const auto& [my, cy] : rhs) {
      bool vanishes = false;
      Monomial prod = mul_monomials(mx, my, vanishes, sig);
      if (!vanishes) out.add_term(prod, cx * cy);
    }
  }
  return out;
}

Integer integrate(const RingElem& e, const SpaceSig& sig) {
  Monomial top;
  top.set_y1(kPointCap).set_yd(static_cast<int>(sig.delta()));
  for (int j = 1; j <= sig.m; ++j) top.set_b(j, kPointCap);
  for (int i = 1; i <= sig.n; ++i) top.set_a(i, kPointCap);
  return e.coefficient(top);
}

RingElem pushforward_last_a(const RingElem& e, const SpaceSig& sig) {
  if (sig.n < 1) throw InputError("pushforward needs at least one tangency point");
  RingElem out;
  for (const auto& [mono, c] : e) {
    if (mono.a(sig.n) != kPointCap) continue;
    Monomial down = mono;
    down.set_a(sig.n, 0);
    out.add_term(down, c);
  }
  return out;
}

RingElem diagonal(int i, int j, const SpaceSig& sig) {
  require_a_index(i, sig);
  require_a_index(j, sig);
  if (i == j) throw InputError("diagonal needs two distinct points");
  RingElem out;
  out.add_term(Monomial{}.set_a(i, 2), 1);
  out.add_term(Monomial{}.set_a(i, 1).set_a(j, 1), 1);
  out.add_term(Monomial{}.set_a(j, 2), 1);
  return out;
}

RingElem diagonal_b(int j, int i, const SpaceSig& sig) {
  require_b_index(j, sig);
  require_a_index(i, sig);
  RingElem out;
  out.add_term(Monomial{}.set_b(j, 2), 1);
  out.add_term(Monomial{}.set_b(j, 1).set_a(i, 1), 1);
  out.add_term(Monomial{}.set_a(i, 2), 1);
  return out;
}

RingElem collision_divisor(int i, int j, const SpaceSig& sig) {
  require_a_index(i, sig);
  require_a_index(j, sig);
  if (i == j) throw InputError("collision divisor needs two distinct points");
  return RingElem::a(i) + RingElem::a(j) - RingElem::y1();
}

RingElem collision_divisor_b(int j, int i, const SpaceSig& sig) {
  require_b_index(j, sig);
  require_a_index(i, sig);
  return RingElem::b(j) + RingElem::a(i) - RingElem::y1();
}

RingElem swap_b_a(const RingElem& e, int j, int i) {
  if (j < 1 || j > SpaceSig::kMaxSingularPoints || i < 1 || i > SpaceSig::kMaxTangencyPoints)
    throw InputError("point index out of range");
  RingElem out;
  for (const auto& [mono, c] : e) {
    Monomial moved = mono;
    moved.set_b(j, mono.a(i)).set_a(i, mono.b(j));
    out.add_term(moved, c);
  }
  return out;
}

}  // namespace curvecount
