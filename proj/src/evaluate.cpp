#include "curvecount/evaluate.hpp"

#include "curvecount/cusp.hpp"
#include "curvecount/errors.hpp"
#include "curvecount/multisingular.hpp"
#include "curvecount/nodal.hpp"
#include "curvecount/tangency.hpp"

namespace curvecount {

namespace {

Integer two_point_symmetry(const RingElem& c) {
  for (const auto& [mono, coeff] : c)
    if (mono.b(1) != 0 || mono.b(2) != 0) return 1;
  return 2;
}

CountResult two_point_result(const Integer& value, const RingElem& c, const SpaceSig& sig, long codim,
                             const std::string& path) {
  CountResult out = make_result(value, two_point_symmetry(c), sig);
  check_dimension(out, c, codim);
  out.provenance.push_back(path);
  return out;
}

CountResult one_point_result(const Integer& value, const RingElem& c, const SpaceSig& sig, long codim,
                             const std::string& path) {
  CountResult out = make_result(value, 1, sig);
  check_dimension(out, c, codim);
  out.provenance.push_back(path);
  return out;
}

[[noreturn]] void unsupported(const ClassExpr& expr) {
  throw UnsupportedError("unsupported class combination " + print(expr));
}

}  // namespace

RingElem constraint_of(const ClassExpr& expr, const SpaceSig& sig) {
  int r = 0;
  long s = 0;
  std::vector<int> nu(sig.m, 0);
  std::vector<int> eps(sig.n, 0);
  for (const Factor& f : expr.factors) {
    switch (f.var) {
      case Var::Y1: r += f.exponent; break;
      case Var::Yd: s += f.exponent; break;
      case Var::B:
        if (f.index > sig.m)
          throw InputError("b" + std::to_string(f.index) + " refers to a singular point the class does not have");
        nu[f.index - 1] += f.exponent;
        break;
      case Var::A:
        if (f.index > sig.n)
          throw InputError("a" + std::to_string(f.index) + " exceeds the tangency arity " + std::to_string(sig.n));
        eps[f.index - 1] += f.exponent;
        break;
    }
  }
  if (r > 2) return {};
  return power_product(sig, r, s, nu, eps);
}

CountResult evaluate(const ClassExpr& expr, Evaluator& ev) {
  const Profile ks = expr.profile();
  std::vector<Atom> singular;
  for (const Atom& a : expr.atoms)
    if (a.kind != AtomKind::T) singular.push_back(a);

  const int d = ev.degree();
  if (singular.empty()) {
    const RingElem c = constraint_of(expr, ev.space(Head::smooth(), ks.size()));
    return eval_T(ev, ks, c);
  }

  if (singular.size() == 2 && singular[0].kind == AtomKind::A1F && singular[1].kind == AtomKind::A1F) {
    if (!ks.empty()) unsupported(expr);
    const SpaceSig sig{d, 2, 0};
    const RingElem c = constraint_of(expr, sig);
    const CoeffTable table = coeff_table_A1FA1F(d);
    return two_point_result(integrate(mul(table.to_class(), c, sig), sig), c, sig, 6, "computed binodal class");
  }
  if (singular.size() != 1) unsupported(expr);

  const Atom head = singular.front();
  const long n = static_cast<long>(ks.size());
  const long k = total_order(ks);
  switch (head.kind) {
    case AtomKind::A1F:
      return eval_A1F_T(ev, ks, constraint_of(expr, ev.space(Head::a1f(), ks.size())));
    case AtomKind::A1L:
      return eval_A1L_T(ev, ks, constraint_of(expr, ev.space(Head::pa1(0), ks.size())));
    case AtomKind::PA1: {
      const Head h = Head::pa1(head.order);
      const SpaceSig sig = ev.space(h, ks.size());
      const RingElem c = constraint_of(expr, sig);
      CountResult out = make_result(eval_PA1(ev, head.order, ks, c), symmetry_factor(ks, c), sig);
      if (d <= n + k + head.order + 2)
        out.warnings.push_back("d = " + std::to_string(d) + " is not above n + k + r + 2 = " +
                               std::to_string(n + k + head.order + 2) + "; the recursion is not proven here");
      check_dimension(out, c, h.codim() + profile_codim(ks));
      out.provenance.push_back("branch-tangency ladder");
      return out;
    }
    case AtomKind::A2F: {
      for (int x : ks)
        if (x != 1) throw UnsupportedError("cuspidal curves support only first-order tangencies");
      return eval_A2F_T1s(ev, static_cast<int>(n), constraint_of(expr, ev.space(Head::a2f(), ks.size())));
    }
    case AtomKind::A2L: {
      for (int x : ks)
        if (x != 1) throw UnsupportedError("cuspidal curves support only first-order tangencies");
      const SpaceSig sig = ev.space(Head::a2l(), ks.size());
      const RingElem c = constraint_of(expr, sig);
      CountResult out = make_result(eval_A2L_T1s(ev, static_cast<int>(n), c), symmetry_factor(ks, c), sig);
      if (d <= 2 * n + 4)
        out.warnings.push_back("d = " + std::to_string(d) + " is not above 2n + 4 = " + std::to_string(2 * n + 4) +
                               "; the recursion is not proven here");
      check_dimension(out, c, Head::a2l().codim() + profile_codim(ks));
      out.provenance.push_back("cusp-on-line recursion");
      return out;
    }
    case AtomKind::A1A1: {
      if (!ks.empty()) unsupported(expr);
      const SpaceSig sig{d, 2, 0};
      const RingElem c = constraint_of(expr, sig);
      CountResult out = two_point_result(eval_A1LA1L(ev, c), c, sig, 8, "two nodes on the line");
      if (d <= 3) out.warnings.push_back("two-node counts are established only for d > 3");
      return out;
    }
    case AtomKind::PA3: {
      if (!ks.empty()) unsupported(expr);
      const SpaceSig sig{d, 1, 0};
      const RingElem c = constraint_of(expr, sig);
      return one_point_result(eval_PA3(ev, c), c, sig, 7, "collision of two nodes on the line");
    }
    case AtomKind::A3F: {
      if (!ks.empty()) unsupported(expr);
      const SpaceSig sig{d, 1, 0};
      const RingElem c = constraint_of(expr, sig);
      const CoeffTable table = coeff_table_A3F(d);
      return one_point_result(integrate(mul(table.to_class(), c, sig), sig), c, sig, 5, "computed tacnode class");
    }
    case AtomKind::T:
      break;
  }
  unsupported(expr);
}

CountResult evaluate(const ClassExpr& expr, int d) {
  Evaluator ev(d);
  return evaluate(expr, ev);
}

}  // namespace curvecount
