#include <doctest.h>

#include "curvecount/cusp.hpp"
#include "curvecount/errors.hpp"

using namespace curvecount;

TEST_CASE("cuspidal Severi degree 12(d-1)(d-2)") {
  for (int d = 3; d <= 7; ++d) {
    Evaluator ev(d);
    const SpaceSig sig = ev.space(Head::a2f(), 0);
    const CountResult r = eval_A2F_T1s(ev, 0, power_product(sig, 2, sig.delta() - 2, {0}, {}));
    CHECK(r.ordered_value == 12 * (d - 1) * (d - 2));
  }
}

TEST_CASE("cuspidal cubics tangent to a line") {
  Evaluator ev(3);
  const SpaceSig sig = ev.space(Head::a2f(), 1);
  CHECK(eval_A2F_T1s(ev, 1, power_product(sig, 2, 6, {0}, {0})).ordered_value == 60);
}

TEST_CASE("cusp on a line through a fixed point") {
  // Line through the cusp and a fixed point: one per cuspidal curve.
  for (int d = 3; d <= 6; ++d) {
    Evaluator ev(d);
    const SpaceSig sig = ev.space(Head::a2l(), 0);
    CHECK(eval_A2L_T1s(ev, 0, power_product(sig, 1, sig.delta() - 2, {0}, {})) == 12 * (d - 1) * (d - 2));
  }
}

TEST_CASE("cusps need degree three") {
  Evaluator ev(2);
  CHECK_THROWS_AS(eval_A2F_T1s(ev, 0, RingElem::one()), InputError);
}

TEST_CASE("higher tangency with a cusp is unsupported") {
  Evaluator ev(5);
  CHECK_THROWS_AS(ev.evaluate(Head::a2f(), {2}, RingElem::one()), UnsupportedError);
}
