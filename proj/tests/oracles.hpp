#pragma once

// Independent numerical oracles shared by the unit and acceptance tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>

namespace oracle {

inline double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                      double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15 * tol) return left + right + (left + right - whole) / 15;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

/// Adaptive Simpson on [a, b].
inline double adaptive(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return simpson(f, a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tol, 50);
}

struct McResult {
  std::complex<double> value;
  double stderr_ = 0.0;
};

/// Monte-Carlo estimate of int_{K|x'|^2 < x_n < T} exp(xi . x) dx with x_n drawn
/// from the truncated density ~ exp(-t x_n), t = -Re xi_n, and x' stratified
/// across the slice (2D: along the segment; 3D: in angle).
inline McResult paraboloid_mc(const std::complex<double>* xi, int dim, double K, std::int64_t samples,
                              std::uint64_t seed, int strata = 64) {
  using C = std::complex<double>;
  const double t = -xi[dim - 1].real();
  const double T = 45.0 / t;
  const double mass = 1.0 - std::exp(-t * T);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  C sum = 0.0;
  double sq = 0.0;
  for (std::int64_t k = 0; k < samples; ++k) {
    const double xn = -std::log(1.0 - U(rng) * mass) / t;
    const double pdf = t * std::exp(-t * xn) / mass;
    const double w = std::sqrt(xn / K);
    const double s = (static_cast<double>(k % strata) + U(rng)) / strata;
    C phase;
    double slice;
    if (dim == 2) {
      const double x1 = w * (2.0 * s - 1.0);
      phase = std::exp(xi[0] * x1 + xi[1] * xn);
      slice = 2.0 * w;
    } else {
      const double th = 2.0 * M_PI * s;
      const double r = w * std::sqrt(U(rng));
      phase = std::exp(xi[0] * (r * std::cos(th)) + xi[1] * (r * std::sin(th)) + xi[2] * xn);
      slice = M_PI * w * w;
    }
    const C f = phase * slice / pdf;
    sum += f;
    sq += std::norm(f);
  }
  const double n = static_cast<double>(samples);
  McResult r;
  r.value = sum / n;
  r.stderr_ = std::sqrt(std::max(0.0, sq / n - std::norm(r.value)) / n);
  return r;
}

}  // namespace oracle
