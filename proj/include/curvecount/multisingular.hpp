#pragma once

// Two nodes and the tacnode, both computed on the two-point space M_0^2.

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "curvecount/engine.hpp"
#include "curvecount/integer.hpp"
#include "curvecount/ring.hpp"

namespace curvecount {

/// Coefficients of a class on M_0^m: key (i, j[, k]) stands for yd^i b1^j [b2^k].
struct CoeffTable {
  int d = 0;
  std::map<std::vector<int>, Integer> entries;
  /// Human-readable notes for entries that disagree with the closed form.
  std::vector<std::string> mismatches;

  Integer at(std::initializer_list<int> key) const;
  RingElem to_class() const;
  bool consistent() const { return mismatches.empty(); }
  /// Throws ConsistencyError listing every mismatch.
  void require_consistent() const;
};

/// Adds the b2 exponent onto b1 and drops b2 (the two singular points merged).
RingElem merge_singular_points(const RingElem& c);

/// [A1L A1L] . c for c in y1, yd, b1, b2.
Integer eval_A1LA1L(Evaluator& ev, const RingElem& c);

/// The closed-form coefficients the computed tables are checked against.
std::map<std::vector<int>, Integer> closed_form_A1FA1F(int d);
std::map<std::vector<int>, Integer> closed_form_A3F(int d);

/// All nine C_ijk of [A1F A1F], compared entrywise with the closed form.
CoeffTable coeff_table_A1FA1F(int d);

/// [PA3] . c for c on M_0^1 (tacnode whose distinguished direction is the line).
Integer eval_PA3(Evaluator& ev, const RingElem& c);

/// (C32, C41, C50) of [A3F], compared with the closed form.
CoeffTable coeff_table_A3F(int d);

}  // namespace curvecount
