#include "elasto/potential.hpp"

#include <cmath>
#include <vector>

#include "elasto/error.hpp"
#include "elasto/green.hpp"
#include "elasto/mesh.hpp"

namespace elasto {

namespace {

// Graded radial panels [0, R/64], [R/64, R/16], [R/16, R/4], [R/4, R].
void graded_radial(double R, int n, std::vector<double>& x, std::vector<double>& w) {
  static const double breaks[5] = {0.0, 1.0 / 64, 1.0 / 16, 0.25, 1.0};
  x.clear();
  w.clear();
  std::vector<double> px, pw;
  for (int p = 0; p < 4; ++p) {
    gauss_legendre(n, R * breaks[p], R * breaks[p + 1], px, pw);
    x.insert(x.end(), px.begin(), px.end());
    w.insert(w.end(), pw.begin(), pw.end());
  }
}

// int over the triangle with apex x spanned by the angles [t0, t1], bounded
// by the line at distance d with normal angle tn, of G(x, y) dy.
CMat triangle_integral(const Vec& x, double t0, double t1, double d, double tn, const LameMedium& m,
                       int nt, int nr) {
  std::vector<double> tx, tw, rx, rw;
  gauss_legendre(nt, t0, t1, tx, tw);
  CMat acc = CMat::Zero(2, 2);
  for (int i = 0; i < nt; ++i) {
    const double rmax = d / std::cos(tx[i] - tn);
    graded_radial(rmax, nr, rx, rw);
    const Vec dir = vec2(std::cos(tx[i]), std::sin(tx[i]));
    for (std::size_t k = 0; k < rx.size(); ++k)
      acc += (tw[i] * rw[k] * rx[k]) * kupradze_tensor(x + rx[k] * dir, x, m).matrix;
  }
  return acc;
}

CMat polar_square(const Vec& x, const Vec& c, double h, const LameMedium& m) {
  const double hh = 0.5 * h;
  const Vec corner[4] = {c + vec2(hh, -hh), c + vec2(hh, hh), c + vec2(-hh, hh), c + vec2(-hh, -hh)};
  CMat acc = CMat::Zero(2, 2);
  for (int e = 0; e < 4; ++e) {
    const Vec p = corner[e] - x;
    const Vec q = corner[(e + 1) % 4] - x;
    const double tn = e * 0.5 * kPi;  // outward normals: +x, +y, -x, -y
    const double d = vec2(std::cos(tn), std::sin(tn)).dot(p);
    if (d <= 1e-14 * h) continue;
    double t0 = std::atan2(p[1], p[0]);
    double t1 = std::atan2(q[1], q[0]);
    while (t1 < t0) t1 += 2.0 * kPi;
    // Split at the foot of the perpendicular to keep the integrand smooth.
    double tf = tn;
    while (tf < t0) tf += 2.0 * kPi;
    while (tf > t0 + 2.0 * kPi) tf -= 2.0 * kPi;
    if (tf > t0 && tf < t1) {
      acc += triangle_integral(x, t0, tf, d, tn, m, 12, 10);
      acc += triangle_integral(x, tf, t1, d, tn, m, 12, 10);
    } else {
      acc += triangle_integral(x, t0, t1, d, tn, m, 12, 10);
    }
  }
  return acc;
}

}  // namespace

CMat cell_integral(const Vec& x, const Vec& c, double h, const LameMedium& medium) {
  if (medium.dim != 2) throw Error(ErrorCode::kUnsupportedDimension, "cell integrals are 2D only");
  const double dinf = std::max(std::abs(x[0] - c[0]), std::abs(x[1] - c[1]));
  if (dinf <= 0.5 * h) return polar_square(x, c, h, medium);
  if (dinf < kNearCellRange * h) {
    // Subcells of side h/s with 4x4 Gauss points; finer when x hugs the cell.
    const int s = dinf < 0.75 * h ? 8 : 4;
    std::vector<double> gx, gw;
    gauss_legendre(4, -0.5, 0.5, gx, gw);
    const double hs = h / s;
    CMat acc = CMat::Zero(2, 2);
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) {
        const Vec sc = c + vec2(-0.5 * h + (a + 0.5) * hs, -0.5 * h + (b + 0.5) * hs);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            acc += (gw[i] * gw[j] * hs * hs) *
                   kupradze_tensor(x, sc + vec2(gx[i] * hs, gx[j] * hs), medium).matrix;
      }
    return acc;
  }
  return (h * h) * kupradze_tensor(x, c, medium).matrix;
}

double ray_exit_distance(const DomainComponent& c, const Vec& x, double theta) {
  const Vec dir = vec2(std::cos(theta), std::sin(theta));
  switch (c.kind) {
    case DomainComponent::Kind::kDisk:
    case DomainComponent::Kind::kEllipse: {
      const double ax = c.kind == DomainComponent::Kind::kDisk ? c.radius : c.semi_a;
      const double ay = c.kind == DomainComponent::Kind::kDisk ? c.radius : c.semi_b;
      const Vec p = vec2((x[0] - c.center[0]) / ax, (x[1] - c.center[1]) / ay);
      const Vec q = vec2(dir[0] / ax, dir[1] / ay);
      const double A = q.squaredNorm(), B = p.dot(q), C = p.squaredNorm() - 1.0;
      return (-B + std::sqrt(std::max(0.0, B * B - A * C))) / A;
    }
    case DomainComponent::Kind::kCap: {
      double lo = 0.0, hi = 2.0 * c.diameter();
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        (c.contains(x + mid * dir) ? lo : hi) = mid;
      }
      return 0.5 * (lo + hi);
    }
  }
  return 0.0;
}

CVec polar_potential(const DomainComponent& c, const Vec& x, const VectorFunction& f,
                     const LameMedium& medium, const PolarRule& rule) {
  std::vector<double> tx, tw;
  if (c.kind == DomainComponent::Kind::kCap) {
    // Gauss panels between the directions of the two lid corners, where the
    // exit distance has kinks.
    const Vec rel = x - c.center;
    const double a = c.cap.half_width, b = c.cap.b;
    double t1 = std::atan2(b - rel[1], a - rel[0]);
    double t2 = std::atan2(b - rel[1], -a - rel[0]);
    const double cuts[3] = {t1, t2, t1 + 2.0 * kPi};
    std::vector<double> px, pw;
    for (int s = 0; s < 2; ++s) {
      const double span = cuts[s + 1] - cuts[s];
      const int panels = std::max(1, static_cast<int>(std::ceil(rule.n_theta * span / (2.0 * kPi) / 16.0)));
      for (int p = 0; p < panels; ++p) {
        gauss_legendre(16, cuts[s] + span * p / panels, cuts[s] + span * (p + 1) / panels, px, pw);
        tx.insert(tx.end(), px.begin(), px.end());
        tw.insert(tw.end(), pw.begin(), pw.end());
      }
    }
  } else {
    for (int i = 0; i < rule.n_theta; ++i) {
      tx.push_back(2.0 * kPi * i / rule.n_theta);
      tw.push_back(2.0 * kPi / rule.n_theta);
    }
  }
  CVec acc = CVec::Zero(2);
  std::vector<double> rx, rw;
  for (std::size_t i = 0; i < tx.size(); ++i) {
    const double R = ray_exit_distance(c, x, tx[i]);
    graded_radial(R, rule.n_radial, rx, rw);
    const Vec dir = vec2(std::cos(tx[i]), std::sin(tx[i]));
    for (std::size_t k = 0; k < rx.size(); ++k) {
      const Vec y = x + rx[k] * dir;
      acc += (tw[i] * rw[k] * rx[k]) * (kupradze_tensor(x, y, medium).matrix * f(y));
    }
  }
  return acc;
}

}  // namespace elasto
