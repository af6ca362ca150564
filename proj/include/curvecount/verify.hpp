#pragma once

// Recomputes the published low-degree values and reports row by row.

#include <string>
#include <vector>

#include "curvecount/caporaso_harris.hpp"
#include "curvecount/engine.hpp"
#include "curvecount/integer.hpp"

namespace curvecount {

struct VerifyRow {
  std::string table;
  std::string query;
  Integer expected;
  Integer computed;

  bool pass() const { return expected == computed; }
};

struct VerifyReport {
  std::vector<VerifyRow> rows;

  bool passed() const;
  std::size_t failures() const;
};

/// One evaluator-versus-oracle comparison from the tangency sweep.
struct SweepCase {
  int d = 0;
  int delta = 0;
  Profile ks;
  std::vector<int> eps;
  Integer ordered;
  Integer symmetry;
  Integer oracle;
  /// d above the proven bound of the recursion (n+k-1 smooth, n+k nodal).
  bool within_bound = true;

  bool pass() const { return symmetry != 0 && ordered % symmetry == 0 && ordered / symmetry == oracle; }
};

/// d in [d_lo, d_hi], delta in {0, 1}, every profile with sum(k_i + 1) <= min(max_contact, d),
/// every fixing pattern eps in {0,1}^n (an unfixed slot must have k >= 1).
std::vector<SweepCase> ch_sweep(int d_lo, int d_hi, int max_contact,
                                CHOracle::Convention conv = CHOracle::Convention::Standard);

const std::vector<std::string>& verify_table_names();

/// Empty selection means every table. Unknown names raise InputError.
VerifyReport verify(const std::vector<std::string>& tables,
                    CHOracle::Convention conv = CHOracle::Convention::Standard);

}  // namespace curvecount
