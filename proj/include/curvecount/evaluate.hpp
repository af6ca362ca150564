#pragma once

#include "curvecount/count_result.hpp"
#include "curvecount/engine.hpp"
#include "curvecount/expr.hpp"

namespace curvecount {

/// Builds the constraint monomial on sig. Indices beyond sig raise InputError;
/// exponents past a cap make the constraint zero.
RingElem constraint_of(const ClassExpr& expr, const SpaceSig& sig);

/// Routes a parsed query to the matching recursion.
CountResult evaluate(const ClassExpr& expr, Evaluator& ev);
CountResult evaluate(const ClassExpr& expr, int d);

}  // namespace curvecount
