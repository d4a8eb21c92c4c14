#include "elasto/medium.hpp"

#include <cmath>

#include "elasto/error.hpp"

namespace elasto {

LameMedium make_medium(double lambda, double mu, double omega, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
  if (!(mu > 0.0) || !(dim * lambda + 2.0 * mu > 0.0))
    throw Error(ErrorCode::kStrongConvexityViolated, "need mu > 0 and n*lambda + 2*mu > 0");
  if (!(omega > 0.0)) throw Error(ErrorCode::kInvalidFrequency, "omega must be positive");
  LameMedium m;
  m.lambda = lambda;
  m.mu = mu;
  m.omega = omega;
  m.dim = dim;
  m.kappa_p = omega / std::sqrt(lambda + 2.0 * mu);
  m.kappa_s = omega / std::sqrt(mu);
  // lambda + mu > 0 follows from strong convexity, so kappa_p < kappa_s.
  if (!(m.kappa_p < m.kappa_s))
    throw Error(ErrorCode::kStrongConvexityViolated, "kappa_p must be below kappa_s");
  return m;
}

}  // namespace elasto
