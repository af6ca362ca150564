#pragma once

// [T_k1 ... T_kn] . c for smooth degree-d curves tangent to a line.

#include <vector>

#include "curvecount/count_result.hpp"
#include "curvecount/engine.hpp"
#include "curvecount/ring.hpp"

namespace curvecount {

/// y1^r yd^s b^nu a^eps. Evaluators also take arbitrary ring elements.
struct Constraint {
  int r = 0;
  long s = 0;
  std::vector<int> nu;
  std::vector<int> eps;

  RingElem to_ring(const SpaceSig& sig) const { return power_product(sig, r, s, nu, eps); }
};

long total_order(const Profile& ks);

/// Smooth curves: valid for d > n + k - 1.
CountResult eval_T(Evaluator& ev, const Profile& ks, const RingElem& c);
CountResult eval_T(int d, const Profile& ks, const RingElem& c);

}  // namespace curvecount
