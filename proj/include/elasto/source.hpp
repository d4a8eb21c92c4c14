#pragma once

#include <ostream>
#include <vector>

#include "elasto/fields.hpp"
#include "elasto/mesh.hpp"
#include "elasto/potential.hpp"

namespace elasto {

/// Force density phi supported in the domain. The paper's standing
/// assumption that phi does not vanish near the boundary is recorded, not
/// enforced.
struct SourceProblem {
  DomainGeometry domain;
  VectorFunction phi;
  LameMedium medium;
  bool phi_nonzero_near_boundary = true;
};

struct FarFieldPattern {
  std::vector<Vec> directions;
  /// Direction quadrature weights (2 pi / N for equispaced circle samples).
  std::vector<double> weights;
  std::vector<Complex> up;
  std::vector<CVec> us;

  std::size_t size() const { return directions.size(); }
  /// Total pattern u_p xhat + u_s at sample k.
  CVec total(std::size_t k) const;
};

/// N equispaced unit vectors on the circle, starting at angle 0.
std::vector<Vec> circle_directions(int n);

/// Outgoing solution u = -int G(x, y) phi(y) dy of L u + omega^2 u = phi at
/// the evaluation points (2D). With a Gauss mesh (cell_size == 0), points
/// inside a component use a polar rule centred at the point and the other
/// components use the mesh; exterior points use the mesh and must keep
/// two node spacings from the boundary. With a Cartesian mesh (cell_size >
/// 0) phi is taken piecewise constant on the cells.
SampledVectorField solve_source(const SourceProblem& problem, const QuadratureMesh& mesh,
                                const std::vector<Vec>& eval_points);

/// Far field of the density f sampled at quadrature nodes:
///   u_p(xhat) = -c_p sum w e^{-i kp xhat.y} xhat.f,
///   u_s(xhat) = -c_s sum w e^{-i ks xhat.y} (I - xhat xhat^T) f.
FarFieldPattern farfield_of_density(const std::vector<Vec>& nodes, const std::vector<double>& weights,
                                    const std::vector<CVec>& f, const LameMedium& medium,
                                    const std::vector<Vec>& directions);

FarFieldPattern farfield_of_source(const SourceProblem& problem, const QuadratureMesh& mesh,
                                   const std::vector<Vec>& directions);

/// sqrt(sum_k w_k (|u_p|^2 + |u_s|^2)).
double farfield_norm(const FarFieldPattern& pattern);

/// Columns: angle, up_re, up_im, us1_re, us1_im, us2_re, us2_im.
void write_farfield_csv(std::ostream& os, const FarFieldPattern& pattern);

}  // namespace elasto
