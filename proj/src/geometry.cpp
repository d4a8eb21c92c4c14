#include "elasto/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "elasto/error.hpp"

namespace elasto {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Golden-section minimisation of f on [lo, hi]; returns the argmin.
double golden_min(const std::function<double(double)>& f, double lo, double hi) {
  double a = lo, b = hi;
  double c = b - kGolden * (b - a);
  double d = a + kGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGolden * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

// Global minimum of f over [lo, hi] by dense sampling then golden refinement
// of the best bracket.
double dense_min(const std::function<double(double)>& f, double lo, double hi, int samples) {
  int best = 0;
  double fbest = std::numeric_limits<double>::infinity();
  const double step = (hi - lo) / samples;
  for (int k = 0; k <= samples; ++k) {
    const double v = f(lo + k * step);
    if (v < fbest) {
      fbest = v;
      best = k;
    }
  }
  const double a = lo + std::max(0, best - 1) * step;
  const double b = lo + std::min(samples, best + 1) * step;
  const double t = golden_min(f, a, b);
  return std::min(fbest, f(t));
}

// Boundary of a 2D component parametrised by t in [0, 1].
Vec boundary_point(const DomainComponent& c, double t) {
  switch (c.kind) {
    case DomainComponent::Kind::kDisk: {
      const double th = 2.0 * kPi * t;
      return c.center + c.radius * vec2(std::cos(th), std::sin(th));
    }
    case DomainComponent::Kind::kEllipse: {
      const double th = 2.0 * kPi * t;
      return c.center + vec2(c.semi_a * std::cos(th), c.semi_b * std::sin(th));
    }
    case DomainComponent::Kind::kCap: {
      const double a = c.cap.half_width;
      if (t <= 0.5) {
        const double s = -a + 4.0 * a * t;
        return c.center + vec2(s, c.cap.gamma(std::abs(s)));
      }
      const double s = a - 4.0 * a * (t - 0.5);
      return c.center + vec2(s, c.cap.b);
    }
  }
  return c.center;
}

// Distance from the meridian point (r, z), relative to the apex, to the cap
// boundary profile.
double cap_boundary_distance(const CapShape& cap, double r, double z) {
  const double a = cap.half_width;
  auto graph = [&](double s) {
    const double dx = s - r;
    const double dz = cap.gamma(std::abs(s)) - z;
    return dx * dx + dz * dz;
  };
  const double dg = std::sqrt(dense_min(graph, -a, a, 400));
  const double sc = std::clamp(r, -a, a);
  const double dl = std::hypot(sc - r, cap.b - z);
  return std::min(dg, dl);
}

bool cap_contains(const CapShape& cap, double r, double z) {
  return std::abs(r) < cap.half_width && z > cap.gamma(std::abs(r)) && z < cap.b;
}

// Meridian coordinates (signed radial coordinate in 2D) relative to the apex.
std::pair<double, double> meridian(const DomainComponent& c, const Vec& x) {
  const Vec y = x - c.center;
  if (c.dim() == 2) return {y[0], y[1]};
  return {std::hypot(y[0], y[1]), y[2]};
}

}  // namespace

double CapShape::gamma(double s) const { return K * s * s + cubic * s * s * s; }

double CapShape::gamma_prime(double x1) const {
  return 2.0 * K * x1 + 3.0 * cubic * x1 * std::abs(x1);
}

DomainComponent DomainComponent::disk(const Vec& center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::kInvalidParameter, "radius must be positive");
  DomainComponent c;
  c.kind = Kind::kDisk;
  c.center = center;
  c.radius = radius;
  return c;
}

DomainComponent DomainComponent::ellipse(const Vec& center, double semi_a, double semi_b) {
  if (center.size() != 2) throw Error(ErrorCode::kUnsupportedDimension, "ellipses are 2D only");
  if (!(semi_a > 0.0 && semi_b > 0.0))
    throw Error(ErrorCode::kInvalidParameter, "semi-axes must be positive");
  DomainComponent c;
  c.kind = Kind::kEllipse;
  c.center = center;
  c.semi_a = semi_a;
  c.semi_b = semi_b;
  return c;
}

bool DomainComponent::contains(const Vec& x) const {
  switch (kind) {
    case Kind::kDisk: return (x - center).norm() < radius;
    case Kind::kEllipse: {
      const double u = (x[0] - center[0]) / semi_a;
      const double v = (x[1] - center[1]) / semi_b;
      return u * u + v * v < 1.0;
    }
    case Kind::kCap: {
      const auto [r, z] = meridian(*this, x);
      return cap_contains(cap, r, z);
    }
  }
  return false;
}

double DomainComponent::signed_distance(const Vec& x) const {
  double d = 0.0;
  switch (kind) {
    case Kind::kDisk: return (x - center).norm() - radius;
    case Kind::kEllipse: {
      auto f = [&](double t) { return (boundary_point(*this, t) - x).squaredNorm(); };
      d = std::sqrt(dense_min(f, 0.0, 1.0, 720));
      break;
    }
    case Kind::kCap: {
      const auto [r, z] = meridian(*this, x);
      d = cap_boundary_distance(cap, r, z);
      break;
    }
  }
  return contains(x) ? -d : d;
}

double DomainComponent::diameter() const {
  switch (kind) {
    case Kind::kDisk: return 2.0 * radius;
    case Kind::kEllipse: return 2.0 * std::max(semi_a, semi_b);
    case Kind::kCap: {
      // Symmetric convex cap: the widest chord is the lid or joins a lid
      // corner to a point of the opposite half of the graph.
      const double a = cap.half_width;
      auto negdist = [&](double s) {
        return -std::hypot(s + a, cap.gamma(std::abs(s)) - cap.b);
      };
      return std::max(2.0 * a, -dense_min(negdist, -a, a, 400));
    }
  }
  return 0.0;
}

double DomainComponent::measure() const {
  const int n = dim();
  switch (kind) {
    case Kind::kDisk:
      return n == 2 ? kPi * radius * radius : 4.0 / 3.0 * kPi * radius * radius * radius;
    case Kind::kEllipse: return kPi * semi_a * semi_b;
    case Kind::kCap: {
      const double a = cap.half_width, b = cap.b, K = cap.K, c = cap.cubic;
      if (n == 2) return 2.0 * (b * a - K * a * a * a / 3.0 - c * std::pow(a, 4) / 4.0);
      return 2.0 * kPi * (b * a * a / 2.0 - K * std::pow(a, 4) / 4.0 - c * std::pow(a, 5) / 5.0);
    }
  }
  return 0.0;
}

double DomainComponent::boundary_measure() const {
  if (dim() != 2) throw Error(ErrorCode::kUnsupportedDimension, "boundary measure is 2D only");
  switch (kind) {
    case Kind::kDisk: return 2.0 * kPi * radius;
    case Kind::kEllipse: {
      // Periodic trapezoid rule, spectrally accurate.
      const int m = 4096;
      double s = 0.0;
      for (int k = 0; k < m; ++k) {
        const double th = 2.0 * kPi * k / m;
        s += std::hypot(semi_a * std::sin(th), semi_b * std::cos(th));
      }
      return s * 2.0 * kPi / m;
    }
    case Kind::kCap: {
      const double a = cap.half_width;
      const int m = 2000;
      double s = 0.0;
      // Simpson on [0, a], doubled by symmetry.
      for (int k = 0; k <= m; ++k) {
        const double x = a * k / m;
        const double w = (k == 0 || k == m) ? 1.0 : (k % 2 ? 4.0 : 2.0);
        s += w * std::sqrt(1.0 + std::pow(cap.gamma_prime(x), 2));
      }
      return 2.0 * a + 2.0 * s * a / (3.0 * m);
    }
  }
  return 0.0;
}

std::vector<Vec> DomainComponent::boundary_samples(int count) const {
  if (dim() != 2) throw Error(ErrorCode::kUnsupportedDimension, "boundary samples are 2D only");
  std::vector<Vec> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(boundary_point(*this, static_cast<double>(k) / count));
  return out;
}

double DomainComponent::farthest_distance(const Vec& p) const {
  if (kind == Kind::kDisk) return (p - center).norm() + radius;
  if (dim() != 2) {
    // 3D cap: reduce to the meridian plane through p.
    const auto [r, z] = meridian(*this, p);
    DomainComponent planar = *this;
    planar.center = vec2(0.0, 0.0);
    return planar.farthest_distance(vec2(r, z));
  }
  auto f = [&](double t) { return -(boundary_point(*this, t) - p).norm(); };
  return -dense_min(f, 0.0, 1.0, 720);
}

DomainComponent DomainComponent::translated(const Vec& t) const {
  DomainComponent c = *this;
  c.center = center + t;
  return c;
}

DomainComponent DomainComponent::scaled(double s) const {
  DomainComponent c = *this;
  c.center = center * s;
  c.radius = radius * s;
  c.semi_a = semi_a * s;
  c.semi_b = semi_b * s;
  c.cap.K = cap.K / s;
  c.cap.cubic = cap.cubic / (s * s);
  c.cap.b = cap.b * s;
  c.cap.rho = cap.rho * s;
  c.cap.half_width = cap.half_width * s;
  return c;
}

std::string DomainComponent::kind_name() const {
  switch (kind) {
    case Kind::kDisk: return dim() == 2 ? "disk" : "ball";
    case Kind::kEllipse: return "ellipse";
    case Kind::kCap: return "cap";
  }
  return "unknown";
}

DomainGeometry::DomainGeometry(std::vector<DomainComponent> comps) : components(std::move(comps)) {
  if (components.empty()) throw Error(ErrorCode::kInvalidParameter, "domain needs a component");
  dim = components.front().dim();
  for (const auto& c : components)
    if (c.dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "components differ in dimension");
}

bool DomainGeometry::contains(const Vec& x) const {
  return std::any_of(components.begin(), components.end(),
                     [&](const DomainComponent& c) { return c.contains(x); });
}

double DomainGeometry::measure() const {
  double m = 0.0;
  for (const auto& c : components) m += c.measure();
  return m;
}

DomainGeometry DomainGeometry::scaled(double s) const {
  DomainGeometry g = *this;
  for (auto& c : g.components) c = c.scaled(s);
  if (g.chart) {
    g.chart->K /= s;
    g.chart->K_minus /= s;
    g.chart->K_plus /= s;
    g.chart->cubic /= s * s;
    g.chart->rho *= s;
    g.chart->b *= s;
  }
  return g;
}

DomainGeometry DomainGeometry::translated(const Vec& t) const {
  DomainGeometry g = *this;
  for (auto& c : g.components) c = c.translated(t);
  return g;
}

namespace {

struct Pinching {
  double k_minus;
  double k_plus;
  double min_gamma;
  double fit_quadratic;
};

Pinching measure_pinching(const KCurvatureChart& ch) {
  Pinching p{ch.K, ch.K, std::numeric_limits<double>::infinity(), 0.0};
  const int m = 200;
  // Least-squares fit gamma ~ A s^2 + B s^3 on the first tenth of the chart.
  double s44 = 0, s45 = 0, s55 = 0, g2 = 0, g3 = 0;
  for (int k = 0; k <= m; ++k) {
    const double s = ch.rho * k / m;
    const double g = ch.gamma(s);
    p.min_gamma = std::min(p.min_gamma, g);
    if (k == 0) continue;
    const double q = g / (s * s);
    p.k_minus = std::min(p.k_minus, q);
    p.k_plus = std::max(p.k_plus, q);
    if (k <= m / 10) {
      // Scaled monomials keep the normal equations well conditioned.
      const double u = s / ch.rho;
      s44 += std::pow(u, 4);
      s45 += std::pow(u, 5);
      s55 += std::pow(u, 6);
      g2 += g * u * u;
      g3 += g * u * u * u;
    }
  }
  const double det = s44 * s55 - s45 * s45;
  p.fit_quadratic = (g2 * s55 - g3 * s45) / det / (ch.rho * ch.rho);
  return p;
}

}  // namespace

std::vector<std::string> validate_chart(const KCurvatureChart& ch) {
  std::vector<std::string> fails;
  const Pinching p = measure_pinching(ch);
  const double tol = 1e-12;
  if (p.min_gamma < -tol * ch.b) fails.push_back("gamma negative on the chart");
  if (!(p.k_minus > 0.0)) fails.push_back("K_minus not positive");
  if (p.k_minus / ch.K < 1.0 / ch.M - tol || p.k_plus / ch.K > ch.M + tol)
    fails.push_back("K_pm/K outside [1/M, M]");
  if (p.k_plus - p.k_minus > ch.L * std::pow(ch.K, 1.0 - ch.varsigma) * (1.0 + tol))
    fails.push_back("K_plus - K_minus exceeds L K^(1 - varsigma)");
  if (std::abs(p.fit_quadratic - ch.K) > 1e-6 * ch.K) fails.push_back("quadratic fit differs from K");
  if (ch.gamma(ch.rho) < ch.b) fails.push_back("graph does not reach the lid within rho");
  const int m = 200;
  for (int k = 1; k <= m; ++k) {
    const double s = ch.rho * k / m;
    if (ch.gamma(s) >= ch.b) break;
    if (!(2.0 * ch.K * s + 3.0 * ch.cubic * s * s > 0.0)) {
      fails.push_back("graph not increasing below the lid");
      break;
    }
  }
  return fails;
}

DomainGeometry make_cap_domain(double K, double L, double M, double varsigma, double cubic, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
  if (!(K >= std::exp(1.0))) throw Error(ErrorCode::kKTooSmall, "K must be at least e");
  if (!(M >= 1.0)) throw Error(ErrorCode::kInvalidParameter, "M must be at least 1");
  if (!(L > 0.0) || !(varsigma > 0.0))
    throw Error(ErrorCode::kInvalidParameter, "L and varsigma must be positive");
  KCurvatureChart ch;
  ch.K = K;
  ch.L = L;
  ch.M = M;
  ch.varsigma = varsigma;
  ch.rho = std::sqrt(M) / K;
  ch.b = 1.0 / K;
  ch.cubic = cubic;
  ch.dim = dim;
  const auto fails = validate_chart(ch);
  if (!fails.empty()) {
    std::string msg;
    for (const auto& f : fails) msg += (msg.empty() ? "" : "; ") + f;
    throw Error(ErrorCode::kChartInvalid, msg);
  }
  const Pinching p = measure_pinching(ch);
  ch.K_minus = p.k_minus;
  ch.K_plus = p.k_plus;

  CapShape cap{K, cubic, ch.b, ch.rho, 0.0};
  double lo = 0.0, hi = ch.rho;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (cap.gamma(mid) < cap.b ? lo : hi) = mid;
  }
  cap.half_width = 0.5 * (lo + hi);

  DomainComponent c;
  c.kind = DomainComponent::Kind::kCap;
  c.center = Vec::Zero(dim);
  c.cap = cap;
  DomainGeometry g({c});
  g.chart = ch;
  return g;
}

double diameter(const DomainComponent& component) { return component.diameter(); }

double diameter(const DomainGeometry& domain) {
  double d = 0.0;
  const auto& cs = domain.components;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    d = std::max(d, cs[i].diameter());
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const auto& A = cs[i];
      const auto& B = cs[j];
      if (A.kind == DomainComponent::Kind::kDisk && B.kind == DomainComponent::Kind::kDisk) {
        d = std::max(d, (A.center - B.center).norm() + A.radius + B.radius);
        continue;
      }
      if (domain.dim != 2)
        throw Error(ErrorCode::kUnsupportedDimension, "mixed 3D unions are not supported");
      auto f = [&](double t) { return -B.farthest_distance(boundary_point(A, t)); };
      d = std::max(d, -dense_min(f, 0.0, 1.0, 360));
    }
  }
  return d;
}

SeparationReport component_separation(const DomainGeometry& domain) {
  const auto& cs = domain.components;
  if (cs.size() < 2) throw Error(ErrorCode::kSingleComponent, "need at least two components");
  SeparationReport rep;
  rep.distance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const auto& A = cs[i];
      const auto& B = cs[j];
      double dist;
      if (A.kind == DomainComponent::Kind::kDisk && B.kind == DomainComponent::Kind::kDisk) {
        dist = (A.center - B.center).norm() - A.radius - B.radius;
      } else {
        if (domain.dim != 2)
          throw Error(ErrorCode::kUnsupportedDimension, "mixed 3D unions are not supported");
        auto fab = [&](double t) { return B.signed_distance(boundary_point(A, t)); };
        auto fba = [&](double t) { return A.signed_distance(boundary_point(B, t)); };
        dist = std::min(dense_min(fab, 0.0, 1.0, 360), dense_min(fba, 0.0, 1.0, 360));
      }
      if (dist <= 1e-12 * (1.0 + diameter(A) + diameter(B))) {
        dist = 0.0;
        rep.disjointness_violated = true;
      }
      if (dist < rep.distance) {
        rep.distance = dist;
        rep.first = static_cast<int>(i);
        rep.second = static_cast<int>(j);
      }
    }
  }
  return rep;
}

double signed_distance(const DomainGeometry& domain, const Vec& x) {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& c : domain.components) d = std::min(d, c.signed_distance(x));
  return d;
}

}  // namespace elasto
