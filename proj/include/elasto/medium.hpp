#pragma once

#include "elasto/types.hpp"

namespace elasto {

/// Homogeneous isotropic background: Lamé constants, angular frequency and
/// the derived pressure/shear wavenumbers.
struct LameMedium {
  double lambda = 0.0;
  double mu = 1.0;
  double omega = 1.0;
  double kappa_p = 0.0;
  double kappa_s = 0.0;
  int dim = 2;

  double p_modulus() const { return lambda + 2.0 * mu; }
};

/// Validates strong convexity (mu > 0, dim*lambda + 2*mu > 0) and omega > 0.
LameMedium make_medium(double lambda, double mu, double omega, int dim);

}  // namespace elasto
