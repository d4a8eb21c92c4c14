#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "elasto/types.hpp"

namespace elasto {

/// Complex vector samples attached to a list of nodes.
struct SampledVectorField {
  std::vector<Vec> nodes;
  std::vector<CVec> values;
  std::string mesh_ref;

  std::size_t size() const { return nodes.size(); }
  int dim() const { return nodes.empty() ? 0 : static_cast<int>(nodes.front().size()); }

  /// Throws on length mismatch or non-finite values.
  void validate() const;
};

/// Value and Jacobian (gradient(i, j) = d u_i / d x_j) of a field at a point.
struct FieldJet {
  Vec point;
  CVec value;
  CMat gradient;
};

/// Uniform Cartesian grid; node (i, j, k) sits at origin + h * (i, j, k) and
/// the x index runs fastest.
struct RegularGrid {
  Vec origin;
  double h = 0.0;
  std::array<int, 3> counts{1, 1, 1};

  int dim() const { return static_cast<int>(origin.size()); }
  std::size_t size() const {
    std::size_t n = 1;
    for (int a = 0; a < dim(); ++a) n *= static_cast<std::size_t>(counts[a]);
    return n;
  }
  std::size_t index(const std::array<int, 3>& ijk) const {
    std::size_t idx = 0;
    for (int a = dim() - 1; a >= 0; --a) idx = idx * counts[a] + ijk[a];
    return idx;
  }
  std::array<int, 3> multi_index(std::size_t idx) const {
    std::array<int, 3> ijk{0, 0, 0};
    for (int a = 0; a < dim(); ++a) {
      ijk[a] = static_cast<int>(idx % counts[a]);
      idx /= counts[a];
    }
    return ijk;
  }
  Vec node(const std::array<int, 3>& ijk) const {
    Vec x = origin;
    for (int a = 0; a < dim(); ++a) x[a] += h * ijk[a];
    return x;
  }

  /// Grid of n^dim nodes covering the axis-aligned box [lo, lo + (n-1) h].
  static RegularGrid cube(const Vec& lo, double h, int n);
};

struct GridField {
  RegularGrid grid;
  std::vector<CVec> values;
};

template <class F>
GridField sample_on_grid(const RegularGrid& grid, F&& f) {
  GridField out{grid, {}};
  out.values.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) out.values.push_back(f(grid.node(grid.multi_index(k))));
  return out;
}

}  // namespace elasto
