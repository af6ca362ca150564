#include <doctest.h>

#include "curvecount/errors.hpp"
#include "curvecount/evaluate.hpp"
#include "curvecount/expr.hpp"
#include "curvecount/report.hpp"
#include "properties.hpp"

using namespace curvecount;

TEST_CASE("grammar") {
  const ClassExpr e = parse("[T1 T1 T2] * y1^2 * yd^31");
  REQUIRE(e.atoms.size() == 3);
  CHECK(e.profile() == std::vector<int>{1, 1, 2});
  REQUIRE(e.factors.size() == 2);
  CHECK(e.factors[1].var == Var::Yd);
  CHECK(e.factors[1].exponent == 31);

  const ClassExpr dots = parse(" [ A1F  T1 ] . y1 . yd^8 ");
  CHECK(dots.atoms[0].kind == AtomKind::A1F);
  CHECK(print(dots) == "[A1F T1] * y1 * yd^8");
  CHECK(parse("[PA1( 2 ) T3] * b1^2 * a1").atoms[0].order == 2);
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const char* src) -> std::size_t {
    try {
      parse(src);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("[T1]]") == 4);
  CHECK(offset_of("T1") == 0);
  CHECK(offset_of("[T1") == 3);
  CHECK(offset_of("[]") == 1);
  CHECK(offset_of("[X1]") == 1);
  CHECK(offset_of("[T1] * [T2]") == 7);
  CHECK(offset_of("[T1] * yd^") == 10);
  CHECK(offset_of("[T1] * a0") == 8);
  CHECK(offset_of("[T1] * z") == 7);
}

TEST_CASE("print then parse is the identity") {
  const props::Tally t = props::parse_print_round_trip(150);
  for (const auto& note : t.notes) INFO(note);
  CHECK(t.cases >= 100);
  CHECK(t.failures == 0);
}

TEST_CASE("queries") {
  CHECK(evaluate(parse("[T1] * y1^2 * yd^4"), 2).ordered_value == 2);
  CHECK(evaluate(parse("[A2F T1] * y1^2 * yd^6"), 3).ordered_value == 60);
  CHECK(evaluate(parse("[A1F T1] . y1 . yd^8"), 3).ordered_value == 48);
  const CountResult binodal = evaluate(parse("[A1A1] * yd^12"), 4);
  CHECK(binodal.ordered_value == 450);
  REQUIRE(binodal.unordered_value);
  CHECK(*binodal.unordered_value == 225);
}

TEST_CASE("constraint indices must exist") {
  CHECK_THROWS_AS(evaluate(parse("[T1] * a2"), 3), InputError);
  CHECK_THROWS_AS(evaluate(parse("[T1] * b1"), 3), InputError);
  CHECK_THROWS_AS(evaluate(parse("[A2F T2] * yd"), 3), UnsupportedError);
  CHECK_THROWS_AS(evaluate(parse("[A2F A1F]"), 4), UnsupportedError);
}

TEST_CASE("json output keeps values as strings") {
  const CountResult r = evaluate(parse("[T1 T1 T2] * y1^2 * yd^31"), 7);
  const std::string json = render(r, "q", Format::Json);
  CHECK(json.find("\"ordered_value\": \"72\"") != std::string::npos);
  CHECK(json.find("\"unordered_value\": \"36\"") != std::string::npos);
  CHECK(json.find("\"dim\": 43") != std::string::npos);
  CHECK(json.find("\"query\"") < json.find("\"d\""));
}
