#include "elasto/special.hpp"

#include <cmath>

#include "elasto/error.hpp"

namespace elasto {

namespace {

constexpr double kSeriesLimit = 12.0;
constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

void check_positive(double z) {
  if (!(z > 0.0)) throw Error(ErrorCode::kNonpositiveArgument, "Bessel argument must be positive");
}

// Hankel asymptotic expansion: returns (J_nu, Y_nu) for nu in {0, 1}.
std::pair<double, double> bessel_asymptotic(int nu, double z) {
  const double mu = 4.0 * nu * nu;
  double p = 0.0, q = 0.0;
  double term = 1.0;  // a_k(nu) / z^k
  double prev = 1e300;
  for (int k = 0; k < 60; ++k) {
    if (k > 0) term *= (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (k * 8.0 * z);
    const double mag = std::abs(term);
    if (mag > prev) break;  // asymptotic series starts to diverge
    prev = mag;
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sign * term;
    else
      q += sign * term;
    if (mag < 1e-17 * std::abs(p)) break;
  }
  const double chi = z - (0.5 * nu + 0.25) * kPi;
  const double amp = std::sqrt(2.0 / (kPi * z));
  return {amp * (p * std::cos(chi) - q * std::sin(chi)), amp * (p * std::sin(chi) + q * std::cos(chi))};
}

// Power series for J_0, J_1, Y_0, Y_1 in extended precision.
struct SeriesValues {
  long double j0, j1, y0, y1;
};

SeriesValues bessel_series(double zd) {
  const long double z = zd;
  const long double x = z * z / 4.0L;
  long double j0 = 0, j1 = 0, s0 = 0, s1 = 0;
  long double t0 = 1.0L;      // (-x)^k / (k!)^2
  long double t1 = z / 2.0L;  // (-x)^k (z/2) / (k! (k+1)!)
  long double harm = 0.0L;    // H_k
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      t0 *= -x / (static_cast<long double>(k) * k);
      t1 *= -x / (static_cast<long double>(k) * (k + 1));
      harm += 1.0L / k;
    }
    j0 += t0;
    j1 += t1;
    // Y_0 series: sum (-1)^{k+1} H_k x^k/(k!)^2 = -sum H_k t0
    s0 -= harm * t0;
    // psi(k+1) + psi(k+2) = -2 gamma + 2 H_k + 1/(k+1)
    s1 += (-2.0L * kEulerGamma + 2.0L * harm + 1.0L / (k + 1)) * t1;
    if (k > 5 && std::abs(t0) < 1e-22L && std::abs(t1) < 1e-22L) break;
  }
  const long double lg = std::log(z / 2.0L);
  SeriesValues v;
  v.j0 = j0;
  v.j1 = j1;
  v.y0 = 2.0L / kPiL * ((lg + kEulerGamma) * j0 + s0);
  v.y1 = -2.0L / (kPiL * z) + 2.0L / kPiL * lg * j1 - s1 / kPiL;
  return v;
}

}  // namespace

double bessel_j0(double z) {
  check_positive(z);
  return z < kSeriesLimit ? static_cast<double>(bessel_series(z).j0) : bessel_asymptotic(0, z).first;
}

double bessel_j1(double z) {
  check_positive(z);
  return z < kSeriesLimit ? static_cast<double>(bessel_series(z).j1) : bessel_asymptotic(1, z).first;
}

double bessel_y0(double z) {
  check_positive(z);
  return z < kSeriesLimit ? static_cast<double>(bessel_series(z).y0) : bessel_asymptotic(0, z).second;
}

double bessel_y1(double z) {
  check_positive(z);
  return z < kSeriesLimit ? static_cast<double>(bessel_series(z).y1) : bessel_asymptotic(1, z).second;
}

HankelValue hankel0_first_kind(double z) {
  check_positive(z);
  double j0, y0, j1, y1;
  if (z < kSeriesLimit) {
    const auto s = bessel_series(z);
    j0 = static_cast<double>(s.j0);
    y0 = static_cast<double>(s.y0);
    j1 = static_cast<double>(s.j1);
    y1 = static_cast<double>(s.y1);
  } else {
    std::tie(j0, y0) = bessel_asymptotic(0, z);
    std::tie(j1, y1) = bessel_asymptotic(1, z);
  }
  return {Complex(j0, y0), -Complex(j1, y1)};
}

Complex hankel1_first_kind(double z) {
  check_positive(z);
  if (z < kSeriesLimit) {
    const auto s = bessel_series(z);
    return {static_cast<double>(s.j1), static_cast<double>(s.y1)};
  }
  const auto [j1, y1] = bessel_asymptotic(1, z);
  return {j1, y1};
}

Complex gamma_complex(Complex c) {
  static const double g = 7.0;
  static const double coef[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                 771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                 -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (c.real() < 0.5) return kPi / (std::sin(kPi * c) * gamma_complex(1.0 - c));
  c -= 1.0;
  Complex x = coef[0];
  for (int i = 1; i < 9; ++i) x += coef[i] / (c + static_cast<double>(i));
  const Complex t = c + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, c + 0.5) * std::exp(-t) * x;
}

Complex lower_incomplete_gamma(double t, Complex c) {
  if (!(c.real() > 0.0)) throw Error(ErrorCode::kInvalidParameter, "Re(c) must be positive");
  if (!(t >= 0.0)) throw Error(ErrorCode::kInvalidParameter, "t must be nonnegative");
  if (t == 0.0) return 0.0;
  const Complex prefactor = std::exp(c * std::log(t) - t);
  if (t < c.real() + 40.0) {
    // Series t^c e^{-t} sum_k t^k / (c (c+1) ... (c+k)).
    Complex term = 1.0 / c;
    Complex sum = term;
    for (int k = 1; k < 2000; ++k) {
      term *= t / (c + static_cast<double>(k));
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return prefactor * sum;
  }
  // Complement via the Legendre continued fraction for Gamma(c, t)
  // (modified Lentz).
  const double tiny = 1e-300;
  Complex b = t + 1.0 - c;
  Complex cc = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 10000; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - c);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    cc = b + an / cc;
    if (std::abs(cc) < tiny) cc = tiny;
    d = 1.0 / d;
    const Complex del = d * cc;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return gamma_complex(c) - prefactor * h;
}

}  // namespace elasto
