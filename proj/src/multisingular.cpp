#include "curvecount/multisingular.hpp"

#include <sstream>

#include "curvecount/errors.hpp"

namespace curvecount {

namespace {

std::string key_name(const std::vector<int>& key) {
  std::string out = "C";
  for (int x : key) out += std::to_string(x);
  return out;
}

void compare(CoeffTable& table, const std::map<std::vector<int>, Integer>& expected) {
  for (const auto& [key, value] : expected) {
    const Integer got = table.entries.count(key) ? table.entries.at(key) : Integer(0);
    if (got != value)
      table.mismatches.push_back(key_name(key) + " at d=" + std::to_string(table.d) + ": computed " +
                                 got.get_str() + ", closed form " + value.get_str());
  }
}

}  // namespace

Integer CoeffTable::at(std::initializer_list<int> key) const {
  auto it = entries.find(std::vector<int>(key));
  return it == entries.end() ? Integer(0) : it->second;
}

RingElem CoeffTable::to_class() const {
  RingElem out;
  for (const auto& [key, value] : entries) {
    Monomial mono;
    mono.set_yd(key[0]).set_b(1, key[1]);
    if (key.size() > 2) mono.set_b(2, key[2]);
    out.add_term(mono, value);
  }
  return out;
}

void CoeffTable::require_consistent() const {
  if (consistent()) return;
  std::ostringstream msg;
  msg << "coefficient table disagrees with its closed form:";
  for (const auto& m : mismatches) msg << ' ' << m << ';';
  throw ConsistencyError(msg.str());
}

RingElem merge_singular_points(const RingElem& c) {
  RingElem out;
  for (const auto& [mono, coeff] : c) {
    const int e = mono.b(1) + mono.b(2);
    if (e > 2) continue;
    Monomial merged = mono;
    merged.set_b(1, e).set_b(2, 0);
    out.add_term(merged, coeff);
  }
  return out;
}

Integer eval_A1LA1L(Evaluator& ev, const RingElem& c) {
  const int d = ev.degree();
  const SpaceSig two{d, 2, 0};
  check_in_space(c, two);

  // Make p2 a node by killing the normal derivative at a T1 point; the
  // T1 point moves into the tangency slot a1.
  const RingElem euler = RingElem::yd() - RingElem::y1() + Integer(d - 1) * RingElem::b(2);
  const RingElem moved = swap_b_a(mul(euler, c, two), 2, 1);
  Integer value = ev.evaluate(Head::pa1(0), Profile{1}, moved);

  // p2 running into p1 leaves a node with a branch of contact 3 with the line.
  value -= ev.evaluate(Head::pa1(2), Profile{}, merge_singular_points(c));
  return value;
}

std::map<std::vector<int>, Integer> closed_form_A1FA1F(int d) {
  const Integer x = d;
  const Integer c312 = 9 * x * x * x - 27 * x * x - x - 30;
  const Integer c420 = 3 * x * x - 6 * x - 4;
  return {
      {{2, 2, 2}, 9 * x * x * x * x - 36 * x * x * x + 12 * x * x + 81 * x - 66},
      {{3, 1, 2}, c312},
      {{3, 2, 1}, c312},
      {{4, 2, 0}, c420},
      {{4, 0, 2}, c420},
      {{4, 1, 1}, 9 * x * x - 18 * x + 2},
      {{5, 1, 0}, 3 * x - 3},
      {{5, 0, 1}, 3 * x - 3},
      {{6, 0, 0}, Integer(1)},
  };
}

std::map<std::vector<int>, Integer> closed_form_A3F(int d) {
  const Integer x = d;
  return {
      {{3, 2}, 50 * x * x - 192 * x + 168},
      {{4, 1}, 25 * x - 48},
      {{5, 0}, Integer(5)},
  };
}

CoeffTable coeff_table_A1FA1F(int d) {
  if (d < 4) throw UnsupportedError("the binodal class is established only for d >= 4");
  Evaluator ev(d);
  const long delta = SpaceSig{d, 2, 0}.delta();
  CoeffTable table;
  table.d = d;
  for (const auto& [key, expected] : closed_form_A1FA1F(d)) {
    Monomial dual;
    dual.set_yd(static_cast<int>(delta - key[0])).set_b(1, 2 - key[1]).set_b(2, 2 - key[2]);
    table.entries[key] = eval_A1LA1L(ev, RingElem::term(dual));
  }
  compare(table, closed_form_A1FA1F(d));
  return table;
}

Integer eval_PA3(Evaluator& ev, const RingElem& c) {
  if (ev.degree() < 4) throw UnsupportedError("tacnodal counts need d >= 4");
  const int d = ev.degree();
  check_in_space(c, SpaceSig{d, 1, 0});
  const SpaceSig two{d, 2, 0};
  const RingElem collide = RingElem::b(1) + RingElem::b(2) - RingElem::y1();
  return eval_A1LA1L(ev, mul(collide, c, two));
}

CoeffTable coeff_table_A3F(int d) {
  Evaluator ev(d);
  const long delta = SpaceSig{d, 1, 0}.delta();
  CoeffTable table;
  table.d = d;
  for (const auto& [key, expected] : closed_form_A3F(d)) {
    Monomial dual;
    dual.set_yd(static_cast<int>(delta - key[0])).set_b(1, 2 - key[1]);
    table.entries[key] = eval_PA3(ev, RingElem::term(dual));
  }
  compare(table, closed_form_A3F(d));
  return table;
}

}  // namespace curvecount
