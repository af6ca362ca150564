#include "curvecount/cusp.hpp"

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

void require_cusp_degree(const Evaluator& ev, int n) {
  if (ev.degree() < 3) throw InputError("cuspidal curves need d >= 3");
  if (n < 0) throw InputError("number of tangencies must be non-negative");
}

}  // namespace

CountResult eval_A2F_T1s(Evaluator& ev, int n, const RingElem& c) {
  require_cusp_degree(ev, n);
  const Profile ks(n, 1);
  const SpaceSig sig = ev.space(Head::a2f(), ks.size());
  CountResult out = make_result(ev.evaluate(Head::a2f(), ks, c), symmetry_factor(ks, c), sig);
  if (sig.d <= 2L * n + 2)
    out.warnings.push_back("d = " + std::to_string(sig.d) + " is not above 2n + 2 = " +
                           std::to_string(2L * n + 2) + "; the recursion is not proven here");
  check_dimension(out, c, Head::a2f().codim() + profile_codim(ks));
  out.provenance.push_back("cuspidal tangency recursion");
  return out;
}

Integer eval_A2L_T1s(Evaluator& ev, int n, const RingElem& c) {
  require_cusp_degree(ev, n);
  return ev.evaluate(Head::a2l(), Profile(n, 1), c);
}

}  // namespace curvecount
