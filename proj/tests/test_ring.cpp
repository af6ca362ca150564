#include <doctest.h>

#include "curvecount/errors.hpp"
#include "curvecount/ring.hpp"
#include "properties.hpp"

using namespace curvecount;

TEST_CASE("space dimension counts every factor") {
  CHECK(SpaceSig{3, 0, 0}.dim() == 11);
  CHECK(SpaceSig{7, 1, 3}.dim() == 2 + 35 + 2 + 6);
  CHECK_THROWS_AS(SpaceSig({0, 0, 0}).validate(), InputError);
  CHECK_THROWS_AS(SpaceSig({3, 3, 0}).validate(), InputError);
}

TEST_CASE("nilpotency caps truncate products") {
  const SpaceSig sig{2, 1, 1};
  const RingElem y1 = RingElem::y1();
  CHECK(mul(mul(y1, y1, sig), y1, sig).is_zero());
  const RingElem a = RingElem::a(1);
  CHECK(mul(mul(a, a, sig), a, sig).is_zero());
  RingElem yd_power = RingElem::one();
  for (int i = 0; i < 5; ++i) yd_power = mul(yd_power, RingElem::yd(), sig);
  CHECK_FALSE(yd_power.is_zero());
  CHECK(mul(yd_power, RingElem::yd(), sig).is_zero());
  CHECK(power_product(sig, 3, 0, {0}, {0}).is_zero());
}

TEST_CASE("integration reads the top coefficient") {
  const SpaceSig sig{2, 0, 1};
  CHECK(integrate(power_product(sig, 2, 5, {}, {2}), sig) == 1);
  CHECK(integrate(power_product(sig, 2, 4, {}, {2}), sig) == 0);
  CHECK(integrate(power_product(sig, 2, 5, {}, {2}) * Integer(-3), sig) == -3);
}

TEST_CASE("pushforward keeps the a_n squared part") {
  const SpaceSig sig{2, 0, 2};
  const RingElem e = power_product(sig, 1, 2, {}, {1, 2}) + power_product(sig, 1, 2, {}, {1, 1});
  const RingElem pushed = pushforward_last_a(e, sig);
  CHECK(pushed == power_product(sig.with_n(1), 1, 2, {}, {1}));
}

TEST_CASE("the diagonal restricts to twice the point class") {
  const SpaceSig sig{1, 0, 2};
  const RingElem diag = diagonal(1, 2, sig);
  CHECK(integrate(mul(diag, power_product(sig, 2, 2, {}, {2, 0}), sig), sig) == 1);
  CHECK(integrate(mul(diag, power_product(sig, 2, 2, {}, {1, 1}), sig), sig) == 1);
}

TEST_CASE("swap_b_a is an involution") {
  const SpaceSig sig{3, 2, 2};
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const RingElem e = props::random_elem(rng, sig);
    CHECK(swap_b_a(swap_b_a(e, 2, 1), 2, 1) == e);
  }
}

TEST_CASE("out of range variables are rejected") {
  CHECK_THROWS_AS(check_in_space(RingElem::a(3), SpaceSig{2, 0, 2}), InputError);
  CHECK_THROWS_AS(check_in_space(RingElem::b(1), SpaceSig{2, 0, 2}), InputError);
}

TEST_CASE("ring axioms and projection formula hold on random input") {
  const props::Tally t = props::ring_axioms(60);
  for (const auto& note : t.notes) INFO(note);
  CHECK(t.cases >= 200);
  CHECK(t.failures == 0);
}
