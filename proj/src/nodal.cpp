#include "curvecount/nodal.hpp"

#include "curvecount/errors.hpp"
#include "curvecount/tangency.hpp"

namespace curvecount {

namespace {

void warn_bound(CountResult& out, long bound, const std::string& label) {
  if (out.space.d <= bound)
    out.warnings.push_back("d = " + std::to_string(out.space.d) + " is not above " + label + " = " +
                           std::to_string(bound) + "; the recursion is not proven here");
}

}  // namespace

Integer class_A1L_via_euler(Evaluator& ev, const RingElem& c) {
  const SpaceSig sig = ev.space(Head::a1f(), 0);
  check_in_space(c, sig);
  const RingElem euler = RingElem::yd() - RingElem::y1() + Integer(ev.degree() - 1) * RingElem::b(1);
  // The node becomes the T1 point: move b1 onto a1 and drop the singular slot.
  const RingElem moved = swap_b_a(mul(euler, c, sig), 1, 1);
  return ev.evaluate(Head::smooth(), Profile{1}, moved);
}

Integer eval_A1L(Evaluator& ev, const RingElem& c) {
  return ev.evaluate(Head::pa1(0), Profile{}, c);
}

std::array<Integer, 3> derive_A1F_coeffs(int d) {
  if (d < 2) throw InputError("node coefficients need d >= 2");
  Evaluator ev(d);
  const long delta = SpaceSig{d, 1, 0}.delta();
  auto at = [&](int r, long s, int nu) -> Integer {
    return class_A1L_via_euler(ev, RingElem::term(Monomial{}.set_y1(r).set_yd(static_cast<int>(s)).set_b(1, nu)));
  };
  return {at(1, delta - 1, 0), at(2, delta - 2, 0), at(2, delta - 3, 1)};
}

CountResult eval_A1F_T(Evaluator& ev, const Profile& ks, const RingElem& c) {
  const SpaceSig sig = ev.space(Head::a1f(), ks.size());
  CountResult out = make_result(ev.evaluate(Head::a1f(), ks, c), symmetry_factor(ks, c), sig);
  warn_bound(out, static_cast<long>(ks.size()) + total_order(ks), "n + k");
  check_dimension(out, c, Head::a1f().codim() + profile_codim(ks));
  out.provenance.push_back("nodal tangency recursion");
  return out;
}

Integer eval_PA1(Evaluator& ev, int r, const Profile& ks, const RingElem& c) {
  if (r < 0) throw InputError("branch tangency order must be non-negative");
  return ev.evaluate(Head::pa1(r), ks, c);
}

CountResult eval_A1L_T(Evaluator& ev, const Profile& ks, const RingElem& c) {
  const SpaceSig sig = ev.space(Head::pa1(0), ks.size());
  CountResult out = make_result(ev.evaluate(Head::pa1(0), ks, c), symmetry_factor(ks, c), sig);
  warn_bound(out, static_cast<long>(ks.size()) + total_order(ks) + 2, "n + k + 2");
  check_dimension(out, c, Head::pa1(0).codim() + profile_codim(ks));
  out.provenance.push_back("node-on-line tangency recursion");
  return out;
}

}  // namespace curvecount
