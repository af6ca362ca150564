#include <doctest.h>

#include "curvecount/errors.hpp"
#include "curvecount/wdvv.hpp"

using namespace curvecount;

TEST_CASE("Kontsevich numbers") {
  CHECK(kontsevich_nd(1) == 1);
  CHECK(kontsevich_nd(2) == 1);
  CHECK(kontsevich_nd(3) == 12);
  CHECK(kontsevich_nd(4) == 620);
  CHECK(kontsevich_nd(5) == 87304);
  CHECK(kontsevich_nd(6) == 26312976);
}

TEST_CASE("rational curves tangent to a line") {
  CHECK(nd_T1(1) == 0);
  CHECK(nd_T1(2) == 2);
  CHECK(nd_T1(3) == 36);
  CHECK(nd_T1(4) == 2184);
  CHECK(nd_T1(5) == 335792);
  CHECK(nd_T1(6) == 106976160);
  CHECK(nd_T1(7) == Integer("61739450304"));
  CHECK(nd_T1(8) == Integer("58749399019136"));
}

TEST_CASE("table memo is consistent with the free functions") {
  GWTable t;
  CHECK(t.nd_T1(8) == nd_T1(8));
  CHECK(t.nd(7) == kontsevich_nd(7));
}

TEST_CASE("nonpositive degree") {
  CHECK_THROWS_AS(kontsevich_nd(0), InputError);
  CHECK_THROWS_AS(nd_T1(-1), InputError);
}
