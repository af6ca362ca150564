// curvecount: command-line front end for the counting library.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvecount/caporaso_harris.hpp"
#include "curvecount/errors.hpp"
#include "curvecount/evaluate.hpp"
#include "curvecount/multisingular.hpp"
#include "curvecount/nodal.hpp"
#include "curvecount/report.hpp"
#include "curvecount/verify.hpp"
#include "curvecount/wdvv.hpp"

using namespace curvecount;

namespace {

struct Options {
  std::string format = "text";
  bool quiet = false;

  int d = 0;
  std::vector<int> tangency;
  std::string singularity = "none";
  int r = 2;
  long s = -1;
  std::vector<int> eps;
  bool unordered = false;

  std::string expr;

  int delta = 0;
  std::vector<int> alpha;
  std::vector<int> beta;

  int max_d = 8;
  std::string class_name;
  std::vector<std::string> tables;
  bool failures_only = false;
};

int emit_count(const CountResult& r, const std::string& query, const Options& o, Format fmt) {
  if (o.quiet || (o.unordered && fmt == Format::Text)) {
    if (o.unordered && !r.unordered_value) throw InputError("ordered count is not divisible by the symmetry factor");
    std::cout << to_decimal(o.unordered ? *r.unordered_value : r.ordered_value) << "\n";
  } else {
    std::cout << render(r, query, fmt);
  }
  return 0;
}

int run_count(const Options& o, Format fmt) {
  ClassExpr e;
  if (o.singularity == "node") e.atoms.push_back({AtomKind::A1F, 0});
  else if (o.singularity == "cusp") e.atoms.push_back({AtomKind::A2F, 0});
  else if (o.singularity != "none") throw InputError("--singularity must be none, node or cusp");
  for (int k : o.tangency) {
    if (k < 0) throw InputError("tangency orders must be nonnegative");
    e.atoms.push_back({AtomKind::T, k});
  }
  if (e.atoms.empty()) throw InputError("nothing to count: give --tangency or --singularity");
  if (o.eps.size() > o.tangency.size()) throw InputError("--eps has more entries than --tangency");
  if (o.r < 0 || o.r > 2) throw InputError("--r must be 0, 1 or 2");
  if (o.r > 0) e.factors.push_back({Var::Y1, 0, o.r});
  for (std::size_t i = 0; i < o.eps.size(); ++i) {
    if (o.eps[i] != 0 && o.eps[i] != 1) throw InputError("--eps entries must be 0 or 1");
    if (o.eps[i]) e.factors.push_back({Var::A, static_cast<int>(i) + 1, 1});
  }
  Evaluator ev(o.d);
  long s = o.s;
  if (s < 0) {
    // Fill the remaining dimension with point conditions.
    const int m = o.singularity == "none" ? 0 : 1;
    const SpaceSig sig{o.d, m, static_cast<int>(o.tangency.size())};
    const Head head = o.singularity == "node" ? Head::a1f() : o.singularity == "cusp" ? Head::a2f() : Head::smooth();
    long used = head.codim() + profile_codim(o.tangency) + o.r;
    for (int x : o.eps) used += x;
    s = sig.dim() - used;
    if (s < 0) throw InputError("no room for point conditions; pass --s explicitly");
  }
  if (s > 0) e.factors.push_back({Var::Yd, 0, static_cast<int>(s)});
  return emit_count(evaluate(e, ev), print(e), o, fmt);
}

int run_ch(const Options& o, Format fmt) {
  for (int x : o.alpha)
    if (x < 0) throw InputError("alpha entries must be nonnegative");
  for (int x : o.beta)
    if (x < 0) throw InputError("beta entries must be nonnegative");
  if (o.d < 1) throw InputError("--d must be at least 1");
  if (o.delta < 0) throw InputError("--delta must be nonnegative");
  const CHKey key{o.d, o.delta, MultSeq(o.alpha), MultSeq(o.beta)};
  const Integer value = ch_invariant(key);
  if (o.quiet) {
    std::cout << to_decimal(value) << "\n";
    return 0;
  }
  Table t{{"d", "delta", "alpha", "beta", "points", "value"},
          {{std::to_string(o.d), std::to_string(o.delta), key.alpha.to_string(), key.beta.to_string(),
            std::to_string(key.points()), to_decimal(value)}}};
  std::cout << render(t, fmt);
  return 0;
}

int run_wdvv(const Options& o, Format fmt) {
  if (o.max_d < 1) throw InputError("--max-d must be at least 1");
  GWTable gw;
  Table t{{"d", "n_d", "N_d^T1"}, {}};
  for (int d = 1; d <= o.max_d; ++d) t.rows.push_back({std::to_string(d), to_decimal(gw.nd(d)), to_decimal(gw.nd_T1(d))});
  if (o.quiet) {
    std::cout << t.rows.back()[2] << "\n";
    return 0;
  }
  std::cout << render(t, fmt);
  return 0;
}

std::string key_label(const std::vector<int>& key) {
  std::string s = "C";
  for (int x : key) s += std::to_string(x);
  return s;
}

int run_class(const Options& o, Format fmt) {
  Table t{{"coefficient", "monomial", "computed", "closed_form"}, {}};
  bool ok = true;
  if (o.class_name == "A1F") {
    const auto c = derive_A1F_coeffs(o.d);
    const Integer d = o.d;
    const Integer closed[] = {3 * d * d - 6 * d + 3, 3 * d - 3, Integer(1)};
    const char* names[] = {"C12", "C21", "C30"};
    const char* monos[] = {"y1 yd^2", "y1^2 yd", "yd^3"};
    for (int i = 0; i < 3; ++i) {
      t.rows.push_back({names[i], monos[i], to_decimal(c[i]), to_decimal(closed[i])});
      ok = ok && c[i] == closed[i];
    }
  } else if (o.class_name == "A2F") {
    if (o.d < 3) throw InputError("the cusp class needs d >= 3");
    t.header = {"monomial", "coefficient"};
    for (const auto& [mono, coeff] : class_A2F(o.d)) t.rows.push_back({mono.to_string(), to_decimal(coeff)});
  } else if (o.class_name == "A1A1" || o.class_name == "A3F") {
    const bool binodal = o.class_name == "A1A1";
    const CoeffTable table = binodal ? coeff_table_A1FA1F(o.d) : coeff_table_A3F(o.d);
    const auto closed = binodal ? closed_form_A1FA1F(o.d) : closed_form_A3F(o.d);
    for (const auto& [key, value] : table.entries) {
      std::string mono = "yd^" + std::to_string(key[0]) + " b1^" + std::to_string(key[1]);
      if (key.size() > 2) mono += " b2^" + std::to_string(key[2]);
      const auto it = closed.find(key);
      t.rows.push_back({key_label(key), mono, to_decimal(value), it == closed.end() ? "" : to_decimal(it->second)});
    }
    ok = table.consistent();
    if (!o.quiet)
      for (const auto& m : table.mismatches) std::cerr << "mismatch: " << m << "\n";
  } else {
    throw InputError("class must be one of A1F, A2F, A1A1, A3F");
  }
  if (!o.quiet) std::cout << render(t, fmt);
  return ok ? 0 : 1;
}

int run_verify(const Options& o, Format fmt) {
  const VerifyReport report = verify(o.tables);
  if (!o.quiet || !report.passed()) std::cout << render(report, fmt, o.quiet || o.failures_only);
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts plane curves with tangency and singularity conditions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--quiet", o.quiet, "print only the value (or only failing rows)");

  auto* count = app.add_subcommand("count", "count curves with tangency conditions to a line");
  count->add_option("--d", o.d, "degree")->required();
  count->add_option("--tangency", o.tangency, "tangency orders k1,k2,...")->delimiter(',');
  count->add_option("--singularity", o.singularity, "none, node or cusp");
  count->add_option("--r", o.r, "power of y1 (2 fixes the line)");
  count->add_option("--s", o.s, "number of point conditions (default: fill the dimension)");
  count->add_option("--eps", o.eps, "per-point fixing flags e1,e2,...")->delimiter(',');
  count->add_flag("--unordered", o.unordered, "divide by the symmetry factor");

  auto* eval = app.add_subcommand("eval", "evaluate a class expression");
  eval->add_option("expr", o.expr, "e.g. \"[A1F T1] * y1 * yd^8\"")->required();
  eval->add_option("--d", o.d, "degree")->required();
  eval->add_flag("--unordered", o.unordered, "print only the unordered value");

  auto* ch = app.add_subcommand("ch", "relative Severi degree N^{d,delta}(alpha,beta)");
  ch->add_option("--d", o.d, "degree")->required();
  ch->add_option("--delta", o.delta, "number of nodes");
  ch->add_option("--alpha", o.alpha, "fixed contact multiplicities a1,a2,...")->delimiter(',');
  ch->add_option("--beta", o.beta, "moving contact multiplicities b1,b2,...")->delimiter(',');

  auto* wdvv = app.add_subcommand("wdvv", "rational curve counts n_d and N_d^T1");
  wdvv->add_option("--max-d", o.max_d, "largest degree");

  auto* cls = app.add_subcommand("class", "coefficient table of a singularity class");
  cls->add_option("name", o.class_name, "A1F, A2F, A1A1 or A3F")->required();
  cls->add_option("--d", o.d, "degree")->required();

  auto* ver = app.add_subcommand("verify", "recompute the reference tables");
  ver->add_option("--tables", o.tables, "comma-separated table names")->delimiter(',');
  ver->add_flag("--failures", o.failures_only, "show failing rows only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(o.format);
    if (*count) return run_count(o, fmt);
    if (*eval) return emit_count(evaluate(parse(o.expr), o.d), o.expr, o, fmt);
    if (*ch) return run_ch(o, fmt);
    if (*wdvv) return run_wdvv(o, fmt);
    if (*cls) return run_class(o, fmt);
    if (*ver) return run_verify(o, fmt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
