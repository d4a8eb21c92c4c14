#include "elasto/green.hpp"

#include <cmath>

#include "elasto/error.hpp"
#include "elasto/special.hpp"

namespace elasto {

RadialDerivatives helmholtz_radial(double kappa, double r, int dim) {
  if (!(r > 0.0)) throw Error(ErrorCode::kCoincidentPoints, "source and target coincide");
  if (!(kappa > 0.0)) throw Error(ErrorCode::kInvalidParameter, "kappa must be positive");
  RadialDerivatives d;
  if (dim == 2) {
    const double z = kappa * r;
    const Complex h0 = hankel0_first_kind(z).value;
    const Complex h1 = hankel1_first_kind(z);
    d.f = 0.25 * kI * h0;
    d.df = -0.25 * kI * kappa * h1;
    d.d2f = -0.25 * kI * kappa * kappa * (h0 - h1 / z);
  } else if (dim == 3) {
    const Complex g = std::exp(kI * kappa * r) / (4.0 * kPi * r);
    const Complex a = kI * kappa - 1.0 / r;
    d.f = g;
    d.df = g * a;
    d.d2f = g * (a * a + 1.0 / (r * r));
  } else {
    throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
  }
  return d;
}

Complex helmholtz_fundamental(double kappa, const Vec& x, const Vec& y, int dim) {
  if (x.size() != dim || y.size() != dim)
    throw Error(ErrorCode::kDimensionMismatch, "point dimension differs from dim");
  return helmholtz_radial(kappa, (x - y).norm(), dim).f;
}

TensorKernelValue kupradze_tensor(const Vec& x, const Vec& y, const LameMedium& medium) {
  const int n = medium.dim;
  if (x.size() != n || y.size() != n)
    throw Error(ErrorCode::kDimensionMismatch, "point dimension differs from the medium");
  const Vec d = x - y;
  const double r = d.norm();
  if (!(r > 0.0)) throw Error(ErrorCode::kCoincidentPoints, "source and target coincide");
  const Vec rh = d / r;
  const auto s = helmholtz_radial(medium.kappa_s, r, n);
  const auto p = helmholtz_radial(medium.kappa_p, r, n);
  const Complex f1 = s.df - p.df;
  const Complex f2 = s.d2f - p.d2f;
  const Mat rr = rh * rh.transpose();
  const Mat id = Mat::Identity(n, n);
  const double w2 = medium.omega * medium.omega;
  TensorKernelValue out;
  out.matrix = (s.f / medium.mu) * id.cast<Complex>() +
               (f2 * rr.cast<Complex>() + (f1 / r) * (id - rr).cast<Complex>()) / w2;
  out.source = y;
  out.target = x;
  return out;
}

FarFieldConstants farfield_constants(const LameMedium& medium) {
  const double lp = medium.p_modulus();
  if (medium.dim == 2) {
    const Complex phase = std::exp(kI * kPi / 4.0);
    return {phase / (lp * std::sqrt(8.0 * kPi * medium.kappa_p)),
            phase / (medium.mu * std::sqrt(8.0 * kPi * medium.kappa_s))};
  }
  return {1.0 / (4.0 * kPi * lp), 1.0 / (4.0 * kPi * medium.mu)};
}

FarFieldKernels farfield_kernels(const Vec& xhat, const Vec& y, const LameMedium& medium) {
  const int n = medium.dim;
  if (std::abs(xhat.norm() - 1.0) > 1e-12)
    throw Error(ErrorCode::kInvalidDirection, "xhat must be a unit vector");
  const auto c = farfield_constants(medium);
  const double t = xhat.dot(y);
  FarFieldKernels k;
  k.pressure = c.c_p * std::exp(-kI * medium.kappa_p * t);
  const Mat proj = Mat::Identity(n, n) - xhat * xhat.transpose();
  k.shear = (c.c_s * std::exp(-kI * medium.kappa_s * t)) * proj.cast<Complex>();
  return k;
}

}  // namespace elasto
