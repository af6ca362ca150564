#pragma once

// One node: free (A1F), on the line (A1L), or on the line with a branch
// tangent to it to order r (PA1(r)).

#include <array>

#include "curvecount/count_result.hpp"
#include "curvecount/engine.hpp"

namespace curvecount {

/// [A1L] . c for c on M_0^1, read off the smooth T1 count through the Euler
/// class yd - y1 + (d-1) b1 of the normal-derivative bundle.
Integer class_A1L_via_euler(Evaluator& ev, const RingElem& c);
/// [A1L] . c as [A1F] (y1 + b1) . c.
Integer eval_A1L(Evaluator& ev, const RingElem& c);

/// (C12, C21, C30) recovered from [A1L]; should reproduce class_A1F(d).
std::array<Integer, 3> derive_A1F_coeffs(int d);

/// Valid for d > n + k + 1.
CountResult eval_A1F_T(Evaluator& ev, const Profile& ks, const RingElem& c);

/// [PA1(r) T_k1 ... T_kn] . c; r = 0 is the node-on-the-line class.
Integer eval_PA1(Evaluator& ev, int r, const Profile& ks, const RingElem& c);

/// [A1L T_k1 ... T_kn] . c, through the PA1(0) recursion.
CountResult eval_A1L_T(Evaluator& ev, const Profile& ks, const RingElem& c);

}  // namespace curvecount
