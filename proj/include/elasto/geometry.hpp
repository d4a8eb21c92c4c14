#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elasto/types.hpp"

namespace elasto {

/// Boundary graph x_n = K |x'|^2 + cubic |x'|^3 of a paraboloid cap, closed
/// off by the flat lid x_n = b.
struct CapShape {
  double K = 0.0;
  double cubic = 0.0;
  double b = 0.0;
  double rho = 0.0;
  /// |x'| at which the graph meets the lid.
  double half_width = 0.0;

  double gamma(double s) const;
  /// d gamma / d x_1 along a signed coordinate x_1 (2D profile).
  double gamma_prime(double x1) const;
};

struct DomainComponent {
  enum class Kind { kDisk, kEllipse, kCap };

  Kind kind = Kind::kDisk;
  Vec center;
  double radius = 0.0;
  /// Semi-axes along x and y (ellipse only).
  double semi_a = 0.0;
  double semi_b = 0.0;
  /// Cap parameters; the apex sits at `center` with interior normal e_n.
  CapShape cap;

  int dim() const { return static_cast<int>(center.size()); }

  static DomainComponent disk(const Vec& center, double radius);
  static DomainComponent ellipse(const Vec& center, double semi_a, double semi_b);

  bool contains(const Vec& x) const;
  double signed_distance(const Vec& x) const;
  double diameter() const;
  /// Area (2D) or volume (3D).
  double measure() const;
  /// Perimeter (2D only).
  double boundary_measure() const;
  /// `count` boundary points (2D only), roughly uniform in the shape parameter.
  std::vector<Vec> boundary_samples(int count) const;
  /// Largest distance from `p` to a point of the closed component.
  double farthest_distance(const Vec& p) const;

  DomainComponent translated(const Vec& t) const;
  DomainComponent scaled(double s) const;
  std::string kind_name() const;
};

/// Parameters of an admissible K-curvature point after normalization (the
/// point at the origin, interior normal e_n) together with the measured
/// pinching constants.
struct KCurvatureChart {
  double K = 0.0;
  double K_minus = 0.0;
  double K_plus = 0.0;
  double L = 0.0;
  double M = 1.0;
  double varsigma = 0.0;
  double rho = 0.0;
  double b = 0.0;
  double cubic = 0.0;
  int dim = 2;

  double gamma(double s) const { return K * s * s + cubic * s * s * s; }
};

struct DomainGeometry {
  std::vector<DomainComponent> components;
  int dim = 2;
  std::optional<KCurvatureChart> chart;

  DomainGeometry() = default;
  explicit DomainGeometry(std::vector<DomainComponent> comps);

  bool contains(const Vec& x) const;
  double measure() const;
  DomainGeometry scaled(double s) const;
  DomainGeometry translated(const Vec& t) const;
};

/// Region {|x'| < rho, gamma(x') < x_n < b} with rho = sqrt(M)/K, b = 1/K and
/// gamma = K|x'|^2 + cubic |x'|^3, validated on 201 samples of |x'| in
/// [0, rho]. Throws ChartInvalid when a pinching condition fails.
DomainGeometry make_cap_domain(double K, double L, double M, double varsigma, double cubic = 0.0,
                               int dim = 2);

/// Re-runs the chart checks; returns the list of failed conditions.
std::vector<std::string> validate_chart(const KCurvatureChart& chart);

double diameter(const DomainComponent& component);
double diameter(const DomainGeometry& domain);

struct SeparationReport {
  double distance = 0.0;
  int first = -1;
  int second = -1;
  /// Set when two closures touch or overlap (distance reported as 0).
  bool disjointness_violated = false;
};

SeparationReport component_separation(const DomainGeometry& domain);

/// Negative inside, positive outside, zero on the boundary.
double signed_distance(const DomainGeometry& domain, const Vec& x);

}  // namespace elasto
