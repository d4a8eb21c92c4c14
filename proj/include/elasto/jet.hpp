#pragma once

#include <array>
#include <cmath>

#include "elasto/types.hpp"

namespace elasto {

/// Second-order forward-mode jet in two variables: value, gradient and
/// Hessian (xx, xy, yy) of a complex scalar.
struct Jet {
  Complex v{0.0};
  std::array<Complex, 2> g{};
  std::array<Complex, 3> h{};

  Jet() = default;
  Jet(double c) : v(c) {}
  Jet(Complex c) : v(c) {}

  static Jet variable(double x, int axis) {
    Jet j(x);
    j.g[axis] = 1.0;
    return j;
  }

  Complex hess(int a, int b) const { return h[a + b]; }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v + b.v;
  for (int i = 0; i < 2; ++i) r.g[i] = a.g[i] + b.g[i];
  for (int i = 0; i < 3; ++i) r.h[i] = a.h[i] + b.h[i];
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r;
  r.v = -a.v;
  for (int i = 0; i < 2; ++i) r.g[i] = -a.g[i];
  for (int i = 0; i < 3; ++i) r.h[i] = -a.h[i];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.v = a.v * b.v;
  for (int i = 0; i < 2; ++i) r.g[i] = a.g[i] * b.v + a.v * b.g[i];
  r.h[0] = a.h[0] * b.v + 2.0 * a.g[0] * b.g[0] + a.v * b.h[0];
  r.h[1] = a.h[1] * b.v + a.g[0] * b.g[1] + a.g[1] * b.g[0] + a.v * b.h[1];
  r.h[2] = a.h[2] * b.v + 2.0 * a.g[1] * b.g[1] + a.v * b.h[2];
  return r;
}

// Chain rule for a scalar function with derivatives f0, f1, f2 at a.v.
inline Jet compose(const Jet& a, Complex f0, Complex f1, Complex f2) {
  Jet r;
  r.v = f0;
  for (int i = 0; i < 2; ++i) r.g[i] = f1 * a.g[i];
  r.h[0] = f1 * a.h[0] + f2 * a.g[0] * a.g[0];
  r.h[1] = f1 * a.h[1] + f2 * a.g[0] * a.g[1];
  r.h[2] = f1 * a.h[2] + f2 * a.g[1] * a.g[1];
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) {
  const Complex inv = 1.0 / b.v;
  return a * compose(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Jet exp(const Jet& a) {
  const Complex e = std::exp(a.v);
  return compose(a, e, e, e);
}

inline Jet sin(const Jet& a) { return compose(a, std::sin(a.v), std::cos(a.v), -std::sin(a.v)); }
inline Jet cos(const Jet& a) { return compose(a, std::cos(a.v), -std::sin(a.v), -std::cos(a.v)); }

inline Jet sqrt(const Jet& a) {
  const Complex s = std::sqrt(a.v);
  return compose(a, s, 0.5 / s, -0.25 / (s * a.v));
}

inline Jet pow(const Jet& a, double p) {
  if (a.v == Complex(0.0)) {
    // Exact at zero for the integer powers used by the bump profiles.
    const Complex f1 = p == 1.0 ? 1.0 : 0.0;
    const Complex f2 = p == 2.0 ? 2.0 : 0.0;
    return compose(a, p == 0.0 ? 1.0 : 0.0, f1, f2);
  }
  return compose(a, std::pow(a.v, p), p * std::pow(a.v, p - 1.0), p * (p - 1.0) * std::pow(a.v, p - 2.0));
}

/// |a| for real-valued jets with sign(0) = 0.
inline Jet abs(const Jet& a) {
  const double s = a.v.real() > 0.0 ? 1.0 : (a.v.real() < 0.0 ? -1.0 : 0.0);
  return compose(a, std::abs(a.v.real()), s, 0.0);
}

using JetPoint = std::array<Jet, 2>;
using JetField = std::array<Jet, 2>;

inline JetPoint jet_point(const Vec& x) { return {Jet::variable(x[0], 0), Jet::variable(x[1], 1)}; }

}  // namespace elasto
