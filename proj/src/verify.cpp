#include "curvecount/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "curvecount/errors.hpp"
#include "curvecount/evaluate.hpp"
#include "curvecount/multisingular.hpp"
#include "curvecount/nodal.hpp"
#include "curvecount/wdvv.hpp"

namespace curvecount {

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const VerifyRow& r) { return !r.pass(); }));
}

namespace {

using Rows = std::vector<VerifyRow>;

long delta_of(int d) { return static_cast<long>(d) * (d + 3) / 2; }

std::string query_at(const std::string& expr, int d) { return expr + " @ d=" + std::to_string(d); }

Integer unordered(const std::string& expr, int d) {
  const CountResult r = evaluate(parse(expr), d);
  return r.unordered_value ? *r.unordered_value : Integer(-1);
}

Integer ordered(const std::string& expr, int d) { return evaluate(parse(expr), d).ordered_value; }

std::string yd_pow(long s) { return "yd^" + std::to_string(s); }

void table1(Rows& rows, CHOracle::Convention) {
  const long expected[] = {0, 0, 0, 36, 144, 360};
  for (int d = 4; d <= 9; ++d) {
    const std::string q = "[T1 T1 T2] * y1^2 * " + yd_pow(delta_of(d) - 4);
    rows.push_back({"table1", query_at(q, d) + " (unordered)", expected[d - 4], unordered(q, d)});
  }
}

void table1_fixed(Rows& rows, CHOracle::Convention) {
  const long expected[] = {12, 36, 72};
  for (int d = 7; d <= 9; ++d) {
    const std::string q = "[T1 T1 T2] * y1^2 * " + yd_pow(delta_of(d) - 5) + " * a1";
    rows.push_back({"table1-fixed", query_at(q, d), expected[d - 7], ordered(q, d)});
  }
}

void ch_rows(Rows& rows, CHOracle::Convention conv) {
  CHOracle oracle(conv);
  auto add = [&](const std::string& table, CHKey key, long expected) {
    const std::string q = "N^{" + std::to_string(key.d) + "," + std::to_string(key.delta) + "}(" +
                          key.alpha.to_string() + "," + key.beta.to_string() + ")";
    rows.push_back({table, q, expected, oracle.invariant(key)});
  };
  const long smooth[] = {36, 144, 360};
  const long fixed[] = {12, 36, 72};
  for (int d = 7; d <= 9; ++d) {
    add("ch", {d, 0, MultSeq{}, MultSeq({d - 7, 2, 1})}, smooth[d - 7]);
    add("ch", {d, 0, MultSeq({0, 1}), MultSeq({d - 7, 1, 1})}, fixed[d - 7]);
  }
  add("ch", {7, 1, MultSeq{}, MultSeq({0, 2, 1})}, 3420);
  add("ch", {8, 1, MultSeq{}, MultSeq({1, 2, 1})}, 19404);
  add("ch", {8, 1, MultSeq({0, 1}), MultSeq({1, 1, 1})}, 4912);
}

void nodal(Rows& rows, CHOracle::Convention) {
  rows.push_back({"nodal", query_at("[A1F T1 T1 T2] * y1^2 * yd^30", 7) + " (unordered)", 3420,
                  unordered("[A1F T1 T1 T2] * y1^2 * yd^30", 7)});
  rows.push_back({"nodal", query_at("[A1F T1 T1 T2] * y1^2 * yd^39", 8) + " (unordered)", 19404,
                  unordered("[A1F T1 T1 T2] * y1^2 * yd^39", 8)});
  rows.push_back({"nodal", query_at("[A1F T1 T1 T2] * y1^2 * yd^38 * a1", 8), 4912,
                  ordered("[A1F T1 T1 T2] * y1^2 * yd^38 * a1", 8)});
  rows.push_back({"nodal", query_at("[A1F T1] * y1^2 * yd^7", 3), 36, ordered("[A1F T1] * y1^2 * yd^7", 3)});
  rows.push_back({"nodal", query_at("[A1F T1] * y1 * yd^8", 3), 48, ordered("[A1F T1] * y1 * yd^8", 3)});
}

void smooth_intro(Rows& rows, CHOracle::Convention) {
  rows.push_back({"smooth", query_at("[T1] * y1^2 * yd^4", 2), 2, ordered("[T1] * y1^2 * yd^4", 2)});
}

void cusp(Rows& rows, CHOracle::Convention) {
  rows.push_back({"cusp", query_at("[A2F T1] * y1^2 * yd^6", 3), 60, ordered("[A2F T1] * y1^2 * yd^6", 3)});
}

void wdvv(Rows& rows, CHOracle::Convention) {
  const char* expected[] = {"2", "36", "2184", "335792", "106976160", "61739450304", "58749399019136"};
  GWTable table;
  for (int d = 2; d <= 8; ++d)
    rows.push_back({"wdvv", "N_" + std::to_string(d) + "^T1", Integer(expected[d - 2]), table.nd_T1(d)});
  rows.push_back({"wdvv", "n_3", 12, table.nd(3)});
  rows.push_back({"wdvv", "n_4", 620, table.nd(4)});
  rows.push_back({"wdvv", "N_3^T1 vs [A1F T1] * y1^2 * yd^7 @ d=3", table.nd_T1(3), ordered("[A1F T1] * y1^2 * yd^7", 3)});
}

void classes(Rows& rows, CHOracle::Convention) {
  for (int d = 2; d <= 9; ++d) {
    const auto coeffs = derive_A1F_coeffs(d);
    const Integer x = d;
    const Integer expected[] = {3 * x * x - 6 * x + 3, 3 * x - 3, Integer(1)};
    const char* names[] = {"C12", "C21", "C30"};
    for (int i = 0; i < 3; ++i)
      rows.push_back({"classes", std::string("A1F ") + names[i] + " @ d=" + std::to_string(d), expected[i], coeffs[i]});
  }
  for (int d = 4; d <= 7; ++d) {
    const CoeffTable a1a1 = coeff_table_A1FA1F(d);
    for (const auto& [key, value] : closed_form_A1FA1F(d))
      rows.push_back({"classes", "A1F A1F C" + std::to_string(key[0]) + std::to_string(key[1]) + std::to_string(key[2]) +
                                     " @ d=" + std::to_string(d),
                      value, a1a1.at({key[0], key[1], key[2]})});
    const CoeffTable a3 = coeff_table_A3F(d);
    for (const auto& [key, value] : closed_form_A3F(d))
      rows.push_back({"classes", "A3F C" + std::to_string(key[0]) + std::to_string(key[1]) + " @ d=" + std::to_string(d),
                      value, a3.at({key[0], key[1]})});
  }
}

void classical(Rows& rows, CHOracle::Convention conv) {
  CHOracle oracle(conv);
  for (int d = 2; d <= 7; ++d) {
    const Integer expected = 3 * (d - 1) * (d - 1);
    const std::string q = "[A1F] * y1^2 * " + yd_pow(delta_of(d) - 1);
    rows.push_back({"classical", query_at(q, d), expected, ordered(q, d)});
    rows.push_back({"classical", "N^{" + std::to_string(d) + ",1}((0),(" + std::to_string(d) + "))", expected,
                    oracle.invariant({d, 1, MultSeq{}, MultSeq({d})})});
  }
  for (int d = 3; d <= 7; ++d) {
    const Integer expected = 12 * (d - 1) * (d - 2);
    const std::string q = "[A2F] * y1^2 * " + yd_pow(delta_of(d) - 2);
    rows.push_back({"classical", query_at(q, d), expected, ordered(q, d)});
  }
  rows.push_back({"classical", query_at("[A1A1] * yd^12", 4) + " (unordered)", 225, unordered("[A1A1] * yd^12", 4)});
  rows.push_back({"classical", "N^{4,2}((0),(4))", 225, oracle.invariant({4, 2, MultSeq{}, MultSeq({4})})});
  rows.push_back({"classical", query_at("[PA3] * yd^11", 4), 200, ordered("[PA3] * yd^11", 4)});
  rows.push_back({"classical", query_at("[A3F] * y1^2 * yd^11", 4), 200, ordered("[A3F] * y1^2 * yd^11", 4)});
}

void sweep(Rows& rows, CHOracle::Convention conv) {
  for (const SweepCase& c : ch_sweep(4, 9, 5, conv)) {
    std::string q = "d=" + std::to_string(c.d) + " delta=" + std::to_string(c.delta) + " k=(";
    for (std::size_t i = 0; i < c.ks.size(); ++i) q += (i ? "," : "") + std::to_string(c.ks[i]);
    q += ") eps=(";
    for (std::size_t i = 0; i < c.eps.size(); ++i) q += (i ? "," : "") + std::to_string(c.eps[i]);
    q += ")";
    if (!c.within_bound) q += " [outside proven bound]";
    const Integer computed = c.symmetry != 0 && c.ordered % c.symmetry == 0 ? Integer(c.ordered / c.symmetry) : Integer(-1);
    rows.push_back({"ch-sweep", q, c.oracle, computed});
  }
}

using TableFn = std::function<void(Rows&, CHOracle::Convention)>;

const std::vector<std::pair<std::string, TableFn>>& registry() {
  static const std::vector<std::pair<std::string, TableFn>> tables = {
      {"smooth", smooth_intro}, {"table1", table1}, {"table1-fixed", table1_fixed},
      {"nodal", nodal},         {"cusp", cusp},     {"ch", ch_rows},
      {"wdvv", wdvv},           {"classes", classes}, {"classical", classical},
      {"ch-sweep", sweep},
  };
  return tables;
}

}  // namespace

std::vector<SweepCase> ch_sweep(int d_lo, int d_hi, int max_contact, CHOracle::Convention conv) {
  std::vector<SweepCase> out;
  CHOracle oracle(conv);
  for (int d = d_lo; d <= d_hi; ++d) {
    Evaluator ev(d);
    const long delta_d = delta_of(d);
    std::vector<Profile> profiles;
    std::function<void(Profile&, int)> grow = [&](Profile& p, int budget) {
      profiles.push_back(p);
      for (int k = 0; k + 1 <= budget; ++k) {
        p.push_back(k);
        grow(p, budget - k - 1);
        p.pop_back();
      }
    };
    Profile start;
    grow(start, std::min(max_contact, d));

    for (int delta = 0; delta <= 1; ++delta) {
      const Head head = delta == 0 ? Head::smooth() : Head::a1f();
      for (const Profile& ks : profiles) {
        const int n = static_cast<int>(ks.size());
        for (int mask = 0; mask < (1 << n); ++mask) {
          std::vector<int> eps(n);
          bool usable = true;
          long fixed = 0;
          for (int i = 0; i < n; ++i) {
            eps[i] = (mask >> i) & 1;
            fixed += eps[i];
            if (ks[i] == 0 && eps[i] == 0) usable = false;
          }
          if (!usable) continue;
          long k = 0;
          for (int x : ks) k += x;
          const long s = delta_d - delta - k - fixed;
          if (s < 0) continue;

          const SpaceSig sig = ev.space(head, ks.size());
          const RingElem c = power_product(sig, 2, s, std::vector<int>(sig.m, 0), eps);
          SweepCase sc;
          sc.d = d;
          sc.delta = delta;
          sc.ks = ks;
          sc.eps = eps;
          sc.ordered = ev.evaluate(head, ks, c);
          sc.symmetry = symmetry_factor(ks, c);
          sc.oracle = oracle.invariant(ch_from_profile(d, ks, eps, delta).key);
          sc.within_bound = delta == 0 ? d > n + k - 1 : d > n + k;
          out.push_back(std::move(sc));
        }
      }
    }
  }
  return out;
}

const std::vector<std::string>& verify_table_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyReport verify(const std::vector<std::string>& tables, CHOracle::Convention conv) {
  for (const std::string& t : tables) {
    const auto& names = verify_table_names();
    if (std::find(names.begin(), names.end(), t) == names.end()) throw InputError("unknown table '" + t + "'");
  }
  VerifyReport report;
  for (const auto& [name, fn] : registry())
    if (tables.empty() || std::find(tables.begin(), tables.end(), name) != tables.end()) fn(report.rows, conv);
  return report;
}

}  // namespace curvecount
