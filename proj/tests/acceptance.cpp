// One PASS/FAIL line per acceptance criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "curvecount/verify.hpp"
#include "properties.hpp"

using namespace curvecount;

namespace {

int failed = 0;

void line(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failed;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << title << "  [" << detail << "]\n";
}

void from_tables(int id, const std::string& title, const std::vector<std::string>& tables, std::size_t min_rows = 1) {
  const VerifyReport r = verify(tables);
  std::string detail = std::to_string(r.rows.size() - r.failures()) + "/" + std::to_string(r.rows.size()) + " rows";
  for (const VerifyRow& row : r.rows)
    if (!row.pass())
      detail += "; " + row.query + ": expected " + to_decimal(row.expected) + ", got " + to_decimal(row.computed);
  line(id, title, r.passed() && r.rows.size() >= min_rows, detail);
}

void sweep() {
  const auto cases = ch_sweep(4, 9, 5);
  std::size_t bad = 0, bad_outside = 0;
  for (const SweepCase& c : cases)
    if (!c.pass()) {
      ++bad;
      if (!c.within_bound) ++bad_outside;
    }
  line(4, "evaluator equals line recursion", bad == 0 && cases.size() >= 40,
       std::to_string(cases.size() - bad) + "/" + std::to_string(cases.size()) + " cases; " +
           std::to_string(bad_outside) + " of the failures lie outside the proven degree bound");
}

void properties() {
  const props::Tally suites[] = {props::ring_axioms(60), props::evaluator_linearity_and_symmetry(40),
                                 props::dimension_mismatch(60), props::parse_print_round_trip(150)};
  const int minimum[] = {200, 50, 50, 100};
  const char* names[] = {"ring", "evaluator", "dimension", "round-trip"};
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 4; ++i) {
    ok = ok && suites[i].failures == 0 && suites[i].cases >= minimum[i];
    detail += std::string(i ? ", " : "") + names[i] + " " + std::to_string(suites[i].cases - suites[i].failures) +
              "/" + std::to_string(suites[i].cases);
  }
  line(8, "property suites", ok, detail);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  from_tables(1, "smooth tangency counts", {"table1", "table1-fixed"}, 9);
  from_tables(2, "nodal tangency counts", {"nodal"}, 5);
  from_tables(3, "cuspidal tangency count", {"cusp"}, 1);
  sweep();
  from_tables(5, "closed-form classes", {"classes"});
  from_tables(6, "classical cross-checks", {"classical"});
  from_tables(7, "rational curves tangent to a line", {"wdvv"}, 7);
  properties();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "elapsed " << secs << " s\n";
  return failed == 0 ? 0 : 1;
}
