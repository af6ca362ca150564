#pragma once

// Rational plane curves: n_d through 3d-1 points (Kontsevich) and N_d^T1,
// through 3d-2 points and tangent to a fixed line.

#include <vector>

#include "curvecount/integer.hpp"

namespace curvecount {

class GWTable {
 public:
  Integer nd(int d);
  Integer nd_T1(int d);

 private:
  std::vector<Integer> nd_{0, 1};  // index = degree
};

Integer kontsevich_nd(int d);
Integer nd_T1(int d);

}  // namespace curvecount
