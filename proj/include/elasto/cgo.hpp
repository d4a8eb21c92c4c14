#pragma once

#include <cstdint>
#include <string>

#include "elasto/fields.hpp"
#include "elasto/geometry.hpp"
#include "elasto/manufactured.hpp"
#include "elasto/medium.hpp"
#include "elasto/types.hpp"

namespace elasto {

/// u_0 = eta exp(xi . x) with xi = tau d + i sqrt(kappa_s^2 + tau^2) d_perp and
/// eta = -i sqrt(1 + kappa_s^2 / tau^2) d + d_perp.
struct CgoProbe {
  Vec d;
  Vec d_perp;
  double tau = 0.0;
  double kappa_s = 0.0;
  CVec xi;
  CVec eta;
  int dim = 2;

  CVec value(const Vec& x) const;
  /// gradient(i, j) = d u_0i / d x_j = eta_i xi_j exp(xi . x)
  FieldJet jet(const Vec& x) const;
};

CgoProbe make_cgo(const Vec& d, const Vec& d_perp, double tau, const LameMedium& medium);

/// max over interior grid nodes of |L u_0 + omega^2 u_0| / (tau^2 |u_0|), with
/// centered differences of the given order. The grid must carry at least 12
/// points per period of the transversal oscillation.
double cgo_residual(const CgoProbe& probe, const LameMedium& medium, const RegularGrid& grid,
                    int order = 2);

/// int_{x_n > K |x'|^2} exp(xi . x) dx in closed form; needs Re xi_n < 0.
Complex paraboloid_integral_closed(const CVec& xi, double K, int dim);

/// int over {K_- |x'|^2 < x_n < b} minus {K_+ |x'|^2 < x_n < b} of exp(-tau x_n).
double shell_integral(double K_minus, double K_plus, double tau, double b, int dim);

struct TailHolderBounds {
  double tail_bound = 0.0;
  double holder_bound = 0.0;
};

/// Structural right-hand sides of the tail and Hölder-weight estimates with
/// the dimensional constants set to 1.
TailHolderBounds tail_and_holder_bounds(double tau, double b, double K, double alpha, int dim);

struct IdentityBreakdown {
  Complex lhs{0.0};
  Complex I1{0.0};
  Complex I2{0.0};
  Complex I3{0.0};
  Complex I4{0.0};
  double residual = 0.0;
  CVec phi0;
  std::int64_t nodes = 0;
  int panels = 0;
  int order = 0;

  Complex sum() const { return I1 + I2 + I3 + I4; }
};

/// Composite Gauss-Legendre rule used for the region and lid integrals.
struct IdentityQuadrature {
  int panels = 8;
  int order = 12;
  std::int64_t node_budget = 4'000'000;
};

/// Evaluates both sides of the CGO integral identity on a 2D cap with apex at
/// the component centre. `u` must be smooth up to the boundary (no mask) and
/// vanish together with its traction on the curved part.
IdentityBreakdown integral_identity_check(const DomainGeometry& cap, const BumpProfile& u,
                                          const CgoProbe& probe, const LameMedium& medium,
                                          const IdentityQuadrature& quad = {});

/// Right-hand side of the lid-term estimate with C = 1:
/// e^{-tau b} K^{-(beta + (n+1)/2)} (K + tau) norm.
double boundary_term_bound(double tau, double b, double K, double beta, int dim, double c1beta_norm);

/// C^{1,beta} proxy of u over the closed cap: max of |u| + |grad u| over
/// boundary samples plus the sampled Hölder quotient of grad u.
double c1beta_proxy(const DomainGeometry& cap, const BumpProfile& u, double beta, int samples = 256);

/// tau = 4 K zeta ln K.
double select_tau(double K, double zeta);
/// zeta = min(alpha, varsigma)/2, plus 1/6 in 3D.
double paper_zeta(double alpha, double varsigma, int dim);

struct TractionPointVerdict {
  /// Columns: traction at the apex produced by a unit normal derivative of each
  /// displacement component (d_n u_1, ..., d_n u_n).
  Mat matrix;
  double determinant = 0.0;
  bool gradient_vanishes = false;
  std::string reason;
};

/// With u(0) = 0 and vanishing tangential derivatives, T_nu u(0) = 0 is a
/// linear system in the normal derivatives; an invertible matrix forces
/// grad u(0) = 0.
TractionPointVerdict traction_point_solve(bool tangential_zero, const LameMedium& medium, int dim);

}  // namespace elasto
