#pragma once

// One cusp with n first-order tangencies. Higher tangency orders are not
// covered and raise UnsupportedError.

#include "curvecount/count_result.hpp"
#include "curvecount/engine.hpp"

namespace curvecount {

/// [A2F T1^n] . c on M_n^1. Valid for d > 2n + 2.
CountResult eval_A2F_T1s(Evaluator& ev, int n, const RingElem& c);

/// [A2L T1^n] . c on M_n^1, the cusp lying on the line.
Integer eval_A2L_T1s(Evaluator& ev, int n, const RingElem& c);

}  // namespace curvecount
