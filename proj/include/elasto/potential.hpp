#pragma once

#include <functional>

#include "elasto/geometry.hpp"
#include "elasto/medium.hpp"
#include "elasto/types.hpp"

namespace elasto {

using VectorFunction = std::function<CVec(const Vec&)>;

/// Integral of the Kupradze tensor over the square cell of side h centred at
/// c, seen from x (2D). Points inside the cell use a polar rule centred at x,
/// nearby points a subdivided Gauss rule, distant points the midpoint rule.
CMat cell_integral(const Vec& x, const Vec& c, double h, const LameMedium& medium);

/// Number of cell widths (in the max norm) inside which cell_integral uses
/// the subdivided rule instead of the midpoint rule.
inline constexpr double kNearCellRange = 2.5;

struct PolarRule {
  int n_theta = 128;
  int n_radial = 12;  // Gauss points per graded radial panel
};

/// Distance from x (inside the component) to the boundary along direction
/// (cos theta, sin theta).
double ray_exit_distance(const DomainComponent& c, const Vec& x, double theta);

/// int_{component} G(x, y) f(y) dy for x inside the component, by a polar
/// rule centred at x (the log singularity is absorbed by the rho dr
/// Jacobian and graded radial panels).
CVec polar_potential(const DomainComponent& c, const Vec& x, const VectorFunction& f,
                     const LameMedium& medium, const PolarRule& rule);

}  // namespace elasto
