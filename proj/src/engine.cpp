#include "curvecount/engine.hpp"

#include "curvecount/errors.hpp"

namespace curvecount {

long Head::codim() const {
  switch (kind) {
    case HeadKind::Smooth: return 0;
    case HeadKind::A1F: return 3;
    case HeadKind::PA1: return 4 + r;
    case HeadKind::A2F: return 4;
    case HeadKind::A2L: return 5;
  }
  return 0;
}

std::string Head::name() const {
  switch (kind) {
    case HeadKind::Smooth: return "";
    case HeadKind::A1F: return "A1F";
    case HeadKind::PA1: return "PA1(" + std::to_string(r) + ")";
    case HeadKind::A2F: return "A2F";
    case HeadKind::A2L: return "A2L";
  }
  return "";
}

long profile_codim(const Profile& ks) {
  long total = 0;
  for (int k : ks) total += k + 2;
  return total;
}

RingElem class_T0(int i, const SpaceSig& sig) {
  if (i < 1 || i > sig.n) throw InputError("a-index " + std::to_string(i) + " out of range");
  RingElem line = RingElem::y1() + RingElem::a(i);
  RingElem incidence = RingElem::yd() + Integer(sig.d) * RingElem::a(i);
  return mul(line, incidence, sig);
}

RingElem class_A1F(int d) {
  const Integer dd = d;
  RingElem out;
  out.add_term(Monomial{}.set_yd(1).set_b(1, 2), 3 * dd * dd - 6 * dd + 3);
  out.add_term(Monomial{}.set_yd(2).set_b(1, 1), 3 * dd - 3);
  out.add_term(Monomial{}.set_yd(3), 1);
  return out;
}

RingElem class_A2F(int d) {
  const Integer dd = d;
  RingElem out;
  out.add_term(Monomial{}.set_yd(2).set_b(1, 2), 12 * dd * dd - 36 * dd + 24);
  out.add_term(Monomial{}.set_yd(3).set_b(1, 1), 8 * dd - 12);
  out.add_term(Monomial{}.set_yd(4), 2);
  return out;
}

RingElem beta_collapse(const RingElem& c, const SpaceSig& sig) {
  if (sig.n < 1) throw InputError("beta collapse needs a tangency point");
  if (sig.m < 1) throw InputError("beta collapse needs a singular point");
  RingElem out;
  for (const auto& [mono, coeff] : c) {
    const int e = mono.b(1) + mono.a(sig.n);
    if (e > 2) continue;
    Monomial down = mono;
    down.set_b(1, e).set_a(sig.n, 0);
    out.add_term(down, coeff);
  }
  return out;
}

Evaluator::Evaluator(int d) : d_(d), a1f_(class_A1F(d)), a2f_(class_A2F(d)) {
  SpaceSig{d, 0, 0}.validate();
}

Integer Evaluator::evaluate(const Head& head, const Profile& ks, const RingElem& c) {
  for (int k : ks)
    if (k < 0) throw InputError("tangency orders must be non-negative");
  if (head.kind == HeadKind::PA1 && head.r < 0) throw InputError("PA1 order must be non-negative");
  const SpaceSig sig = space(head, ks.size());
  sig.validate();
  check_in_space(c, sig);
  if (head.kind == HeadKind::A2F || head.kind == HeadKind::A2L)
    for (int k : ks)
      if (k > 1) throw UnsupportedError("cuspidal curves support only first-order tangencies");
  return eval_sum(head, ks, c);
}

Integer Evaluator::eval_sum(const Head& head, const Profile& ks, const RingElem& c) {
  Integer total = 0;
  for (const auto& [mono, coeff] : c) {
    Integer v = eval_mono(head, ks, mono);
    if (v != 0) total += coeff * v;
  }
  return total;
}

Integer Evaluator::eval_mono(const Head& head, const Profile& ks, const Monomial& mono) {
  const SpaceSig sig = space(head, ks.size());
  if (mono.degree() + head.codim() + profile_codim(ks) != sig.dim()) return 0;

  Key key{head, ks, mono};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Integer value;
  if (ks.empty())
    value = base_case(head, mono);
  else if (ks.back() == 0)
    value = drop_transverse(head, ks, mono);
  else
    value = collide(head, ks, mono);

  memo_.emplace(std::move(key), value);
  return value;
}

Integer Evaluator::base_case(const Head& head, const Monomial& mono) {
  const SpaceSig sig = space(head, 0);
  const RingElem c = RingElem::term(mono);
  const RingElem line = RingElem::y1() + RingElem::b(1);
  switch (head.kind) {
    case HeadKind::Smooth:
      return integrate(c, sig);
    case HeadKind::A1F:
      return integrate(mul(a1f_, c, sig), sig);
    case HeadKind::A2F:
      return integrate(mul(a2f_, c, sig), sig);
    case HeadKind::A2L:
      return integrate(mul(mul(a2f_, line, sig), c, sig), sig);
    case HeadKind::PA1:
      break;
  }
  if (head.r == 0) return integrate(mul(mul(a1f_, line, sig), c, sig), sig);

  // Raise the branch order by one: tangency of order r at p is order r-1 at p
  // plus a transverse point x_1 that has run into p along the line.
  const SpaceSig up = sig.with_n(1);
  const RingElem lowered = mul(collision_divisor_b(1, 1, up), c, up);
  return eval_sum(Head::pa1(head.r - 1), Profile{0}, lowered);
}

Integer Evaluator::drop_transverse(const Head& head, const Profile& ks, const Monomial& mono) {
  const SpaceSig sig = space(head, ks.size());
  const int n = sig.n;
  const RingElem c = RingElem::term(mono);

  RingElem q = mul(class_T0(n, sig), c, sig);
  for (int i = 1; i < n; ++i) {
    const Integer weight = ks[i - 1] + 1;
    q -= weight * mul(diagonal(i, n, sig), c, sig);
  }
  long excess = 0;
  if (head.kind == HeadKind::PA1)
    excess = head.r + 2;
  else if (head.kind == HeadKind::A2L)
    excess = 2;
  if (excess != 0) q -= Integer(excess) * mul(diagonal_b(1, n, sig), c, sig);

  const Profile rest(ks.begin(), ks.end() - 1);
  return eval_sum(head, rest, pushforward_last_a(q, sig));
}

Integer Evaluator::collide(const Head& head, const Profile& ks, const Monomial& mono) {
  const SpaceSig sig = space(head, ks.size());
  const int n = sig.n;
  const int k = ks.back();
  const SpaceSig up = sig.with_n(n + 1);

  Profile split(ks.begin(), ks.end() - 1);
  split.push_back(k - 1);
  split.push_back(0);
  Integer value = eval_sum(head, split, mul(collision_divisor(n, n + 1, up), RingElem::term(mono), up));

  const Profile rest(ks.begin(), ks.end() - 1);
  switch (head.kind) {
    case HeadKind::A1F: {
      const Integer mult = k == 1 ? 2 : 1;
      value -= mult * eval_sum(Head::pa1(k - 1), rest, beta_collapse(RingElem::term(mono), sig));
      break;
    }
    case HeadKind::A2F:
      if (k != 1) throw UnsupportedError("cuspidal curves support only first-order tangencies");
      value -= 3 * eval_sum(Head::a2l(), rest, beta_collapse(RingElem::term(mono), sig));
      break;
    case HeadKind::A2L:
      if (k != 1) throw UnsupportedError("cuspidal curves support only first-order tangencies");
      break;
    case HeadKind::Smooth:
    case HeadKind::PA1:
      break;
  }
  return value;
}

}  // namespace curvecount
