#include "elasto/fields.hpp"

#include <cmath>

#include "elasto/error.hpp"

namespace elasto {

void SampledVectorField::validate() const {
  if (nodes.size() != values.size())
    throw Error(ErrorCode::kMeshMismatch, "nodes and values differ in length");
  for (const auto& v : values)
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag()))
        throw Error(ErrorCode::kInvalidParameter, "non-finite field value");
}

RegularGrid RegularGrid::cube(const Vec& lo, double h, int n) {
  RegularGrid g;
  g.origin = lo;
  g.h = h;
  for (int a = 0; a < lo.size(); ++a) g.counts[a] = n;
  return g;
}

}  // namespace elasto
