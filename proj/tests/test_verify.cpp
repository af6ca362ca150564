#include <doctest.h>

#include "curvecount/errors.hpp"
#include "curvecount/verify.hpp"

using namespace curvecount;

TEST_CASE("table selection") {
  const VerifyReport r = verify({"table1"});
  CHECK(r.rows.size() == 6);
  CHECK(r.rows.back().expected == 360);
  CHECK(r.passed());
  CHECK_THROWS_AS(verify({"nope"}), InputError);
}

TEST_CASE("flipping the line recursion breaks its rows") {
  const VerifyReport standard = verify({"ch"});
  const VerifyReport flipped = verify({"ch"}, CHOracle::Convention::Flipped);
  CHECK(flipped.failures() > standard.failures());
  CHECK_FALSE(flipped.passed());
}

TEST_CASE("verification is deterministic") {
  const VerifyReport a = verify({"classical", "wdvv"});
  const VerifyReport b = verify({"classical", "wdvv"});
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].computed == b.rows[i].computed);
}
