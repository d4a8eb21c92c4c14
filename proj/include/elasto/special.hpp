#pragma once

#include "elasto/types.hpp"

namespace elasto {

/// Bessel functions of the first and second kind, orders 0 and 1, for real
/// z > 0: power series below z = 12, Hankel asymptotic expansion above.
double bessel_j0(double z);
double bessel_j1(double z);
double bessel_y0(double z);
double bessel_y1(double z);

struct HankelValue {
  Complex value;
  Complex derivative;
};

/// H_0^(1)(z) = J_0 + i Y_0 and its derivative -H_1^(1)(z).
HankelValue hankel0_first_kind(double z);
/// H_1^(1)(z) = J_1 + i Y_1.
Complex hankel1_first_kind(double z);

/// Gamma function for complex argument (Lanczos, g = 7).
Complex gamma_complex(Complex c);

/// gamma(t, c) = int_0^t e^{-x} x^{c-1} dx for t >= 0, Re c > 0.
Complex lower_incomplete_gamma(double t, Complex c);

}  // namespace elasto
