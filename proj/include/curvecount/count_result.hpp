#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvecount/engine.hpp"
#include "curvecount/integer.hpp"
#include "curvecount/ring.hpp"

namespace curvecount {

struct CountResult {
  Integer ordered_value;
  /// Product of multiplicity! over groups of interchangeable marked points.
  Integer symmetry_factor = 1;
  /// ordered_value / symmetry_factor, present only when the division is exact.
  std::optional<Integer> unordered_value;
  std::vector<std::string> warnings;
  std::vector<std::string> provenance;
  SpaceSig space;
};

CountResult make_result(const Integer& ordered, const Integer& symmetry, const SpaceSig& space);

/// Marked tangency points that no term of c mentions can be permuted freely;
/// points of equal order among them contribute multiplicity! each.
Integer symmetry_factor(const Profile& ks, const RingElem& c);

/// Warns (without failing) when deg(c) + codim differs from the space dimension.
void check_dimension(CountResult& out, const RingElem& c, long codim);

}  // namespace curvecount
