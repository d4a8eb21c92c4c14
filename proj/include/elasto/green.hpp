#pragma once

#include "elasto/medium.hpp"
#include "elasto/types.hpp"

namespace elasto {

/// Outgoing fundamental solution of Delta + kappa^2 (with the sign
/// convention (Delta + kappa^2) Phi = -delta): (i/4) H_0(kappa r) in 2D,
/// e^{i kappa r} / (4 pi r) in 3D.
Complex helmholtz_fundamental(double kappa, const Vec& x, const Vec& y, int dim);

/// Phi and its first two radial derivatives at distance r.
struct RadialDerivatives {
  Complex f, df, d2f;
};
RadialDerivatives helmholtz_radial(double kappa, double r, int dim);

struct TensorKernelValue {
  CMat matrix;
  Vec source;
  Vec target;
};

/// Kupradze tensor G(x, y) = Phi_s I / mu + Hess_x (Phi_s - Phi_p) / omega^2,
/// which satisfies (L + omega^2) G = -delta I with the Kupradze radiation
/// condition.
TensorKernelValue kupradze_tensor(const Vec& x, const Vec& y, const LameMedium& medium);

/// Far-field constants: G(x, y) ~ |x|^{-(n-1)/2} [c_p e^{i kp |x|} e^{-i kp xhat.y} xhat xhat^T
/// + c_s e^{i ks |x|} e^{-i ks xhat.y} (I - xhat xhat^T)].
struct FarFieldConstants {
  Complex c_p;
  Complex c_s;
};
FarFieldConstants farfield_constants(const LameMedium& medium);

struct FarFieldKernels {
  /// Scalar coefficient multiplying xhat xhat^T.
  Complex pressure;
  /// Tangential matrix c_s e^{-i ks xhat.y} (I - xhat xhat^T).
  CMat shear;
};
FarFieldKernels farfield_kernels(const Vec& xhat, const Vec& y, const LameMedium& medium);

}  // namespace elasto
