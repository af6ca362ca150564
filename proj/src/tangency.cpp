#include "curvecount/tangency.hpp"

#include <map>

namespace curvecount {

CountResult make_result(const Integer& ordered, const Integer& symmetry, const SpaceSig& space) {
  CountResult out;
  out.ordered_value = ordered;
  out.symmetry_factor = symmetry;
  out.space = space;
  if (symmetry != 0 && ordered % symmetry == 0) out.unordered_value = ordered / symmetry;
  return out;
}

Integer symmetry_factor(const Profile& ks, const RingElem& c) {
  std::map<int, unsigned long> free_by_order;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    bool mentioned = false;
    for (const auto& [mono, coeff] : c)
      if (mono.a(static_cast<int>(i) + 1) != 0) mentioned = true;
    if (!mentioned) ++free_by_order[ks[i]];
  }
  Integer out = 1;
  for (const auto& [k, count] : free_by_order) out *= factorial(count);
  return out;
}

void check_dimension(CountResult& out, const RingElem& c, long codim) {
  const long dim = out.space.dim();
  for (const auto& [mono, coeff] : c) {
    if (mono.degree() + codim != dim) {
      out.warnings.push_back("dimension mismatch: term " + mono.to_string() + " has degree " +
                             std::to_string(mono.degree()) + ", expected " +
                             std::to_string(dim - codim) + "; it contributes 0");
      return;
    }
  }
}

long total_order(const Profile& ks) {
  long k = 0;
  for (int x : ks) k += x;
  return k;
}

CountResult eval_T(Evaluator& ev, const Profile& ks, const RingElem& c) {
  const SpaceSig sig = ev.space(Head::smooth(), ks.size());
  CountResult out = make_result(ev.evaluate(Head::smooth(), ks, c), symmetry_factor(ks, c), sig);
  const long n = static_cast<long>(ks.size());
  const long k = total_order(ks);
  if (sig.d <= n + k - 1)
    out.warnings.push_back("d = " + std::to_string(sig.d) + " is not above n + k - 1 = " +
                           std::to_string(n + k - 1) + "; the recursion is not proven here");
  check_dimension(out, c, profile_codim(ks));
  out.provenance.push_back("smooth tangency recursion");
  return out;
}

CountResult eval_T(int d, const Profile& ks, const RingElem& c) {
  Evaluator ev(d);
  return eval_T(ev, ks, c);
}

}  // namespace curvecount
