#pragma once

#include <ostream>
#include <vector>

#include "elasto/geometry.hpp"

namespace elasto {

struct QuadratureMesh {
  std::vector<Vec> nodes;
  std::vector<double> weights;
  std::vector<int> component;
  /// Characteristic node spacing.
  double h = 0.0;
  /// Edge length of the square cells for Cartesian meshes; 0 for Gauss rules.
  double cell_size = 0.0;

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
};

struct BoundaryMesh {
  enum Part { kCurved = 0, kLid = 1 };

  std::vector<Vec> nodes;
  std::vector<Vec> normals;
  std::vector<double> weights;
  /// kCurved for disks, ellipses and the graph part of a cap; kLid for the
  /// flat top of a cap.
  std::vector<int> part;
  std::vector<int> component;

  std::size_t size() const { return nodes.size(); }
  double total_weight() const;
};

/// Gauss–Legendre nodes and weights on [lo, hi].
void gauss_legendre(int n, double lo, double hi, std::vector<double>& x, std::vector<double>& w);

/// High-order volume rule (2D): polar Gauss/trapezoid for disks and
/// ellipses, composite tensor Gauss for caps. `h` sets the node spacing.
QuadratureMesh volume_mesh(const DomainGeometry& domain, double h);

/// Midpoint rule on square cells of size h whose centres lie in the domain.
/// The lattice is anchored at the origin so that cell offsets are shared
/// across components.
QuadratureMesh cartesian_mesh(const DomainGeometry& domain, double h);

BoundaryMesh boundary_mesh(const DomainGeometry& domain, double h);

/// CSV with columns x,y,weight (17 significant digits).
void write_mesh_csv(std::ostream& os, const QuadratureMesh& mesh);

}  // namespace elasto
