#include "curvecount/wdvv.hpp"

#include "curvecount/errors.hpp"

namespace curvecount {

Integer GWTable::nd(int d) {
  if (d <= 0) throw InputError("degree must be positive");
  while (static_cast<int>(nd_.size()) <= d) {
    const long e = static_cast<long>(nd_.size());
    Integer total = 0;
    for (long d1 = 1; d1 < e; ++d1) {
      const long d2 = e - d1;
      const Integer w = Integer(d1 * d1 * d2 * d2) * binomial(3 * e - 4, 3 * d1 - 2) -
                        Integer(d1 * d1 * d1 * d2) * binomial(3 * e - 4, 3 * d1 - 1);
      total += w * nd_[d1] * nd_[d2];
    }
    nd_.push_back(total);
  }
  return nd_[d];
}

Integer GWTable::nd_T1(int d) {
  if (d <= 0) throw InputError("degree must be positive");
  Integer total = 0;
  for (long d1 = 1; d1 < d; ++d1) {
    const long d2 = d - d1;
    const Integer w = binomial(3L * d - 4, 3 * d1 - 2) * (d1 * d2) -
                      binomial(3L * d - 4, 3 * d1 - 1) * (d1 * (d1 - 1));
    total += w * nd(static_cast<int>(d1)) * nd(static_cast<int>(d2)) * (d1 * d2);
  }
  return total;
}

Integer kontsevich_nd(int d) {
  GWTable table;
  return table.nd(d);
}

Integer nd_T1(int d) {
  GWTable table;
  return table.nd_T1(d);
}

}  // namespace curvecount
