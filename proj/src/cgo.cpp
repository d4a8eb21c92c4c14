#include "elasto/cgo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "elasto/elastic_core.hpp"
#include "elasto/error.hpp"
#include "elasto/finite_difference.hpp"
#include "elasto/mesh.hpp"
#include "elasto/special.hpp"

namespace elasto {

CVec CgoProbe::value(const Vec& x) const {
  return eta * std::exp((xi.transpose() * x.cast<Complex>())(0, 0));
}

FieldJet CgoProbe::jet(const Vec& x) const {
  const Complex e = std::exp((xi.transpose() * x.cast<Complex>())(0, 0));
  FieldJet j;
  j.point = x;
  j.value = eta * e;
  j.gradient = (eta * xi.transpose()) * e;
  return j;
}

CgoProbe make_cgo(const Vec& d, const Vec& d_perp, double tau, const LameMedium& medium) {
  const int n = static_cast<int>(d.size());
  if (n != 2 && n != 3) throw Error(ErrorCode::kInvalidDimension, "probe dimension must be 2 or 3");
  if (d_perp.size() != n) throw Error(ErrorCode::kDimensionMismatch, "d and d_perp differ in size");
  if (std::abs(d.norm() - 1.0) > 1e-12 || std::abs(d_perp.norm() - 1.0) > 1e-12 ||
      std::abs(d.dot(d_perp)) > 1e-12)
    throw Error(ErrorCode::kNonOrthonormalPair, "d, d_perp must be orthonormal");
  const double ks = medium.kappa_s;
  if (!(tau > ks)) throw Error(ErrorCode::kTauTooSmall, "tau must exceed kappa_s");
  CgoProbe p;
  p.d = d;
  p.d_perp = d_perp;
  p.tau = tau;
  p.kappa_s = ks;
  p.dim = n;
  const double s = std::sqrt(ks * ks + tau * tau);
  p.xi = tau * d.cast<Complex>() + kI * s * d_perp.cast<Complex>();
  // sqrt(1 + ks^2/tau^2) = s / tau
  p.eta = -kI * (s / tau) * d.cast<Complex>() + d_perp.cast<Complex>();
  return p;
}

double cgo_residual(const CgoProbe& probe, const LameMedium& medium, const RegularGrid& grid, int order) {
  if (grid.dim() != probe.dim) throw Error(ErrorCode::kDimensionMismatch, "grid and probe dimensions differ");
  const double period = 2.0 * kPi / std::sqrt(probe.kappa_s * probe.kappa_s + probe.tau * probe.tau);
  if (period / grid.h < 12.0 - 1e-9)
    throw Error(ErrorCode::kGridTooCoarse, "fewer than 12 points per oscillation period");
  const GridField field = sample_on_grid(grid, [&](const Vec& x) { return probe.value(x); });
  const fd::Stencil st(field, order);
  const double w2 = medium.omega * medium.omega;
  double worst = 0.0;
  bool any = false;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto ijk = grid.multi_index(k);
    if (!st.interior(ijk)) continue;
    any = true;
    const CVec& u = field.values[k];
    const CVec r = st.lame(ijk, medium) + w2 * u;
    worst = std::max(worst, r.norm() / (probe.tau * probe.tau * u.norm()));
  }
  if (!any) throw Error(ErrorCode::kInsufficientSamples, "grid has no interior nodes for this stencil");
  return worst;
}

Complex paraboloid_integral_closed(const CVec& xi, double K, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
  if (xi.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "xi has the wrong size");
  if (!(K > 0.0)) throw Error(ErrorCode::kInvalidParameter, "K must be positive");
  const Complex xn = xi[dim - 1];
  if (!(xn.real() < 0.0)) throw Error(ErrorCode::kNonDecaying, "Re xi_n must be negative");
  Complex xp2 = 0.0;
  for (int a = 0; a < dim - 1; ++a) xp2 += xi[a] * xi[a];
  const Complex base = kPi / (-xn * K);
  return -(1.0 / xn) * std::pow(base, 0.5 * (dim - 1)) * std::exp(-xp2 / (4.0 * xn * K));
}

double shell_integral(double K_minus, double K_plus, double tau, double b, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
  if (!(K_minus > 0.0) || !(K_minus <= K_plus))
    throw Error(ErrorCode::kInvalidCurvatures, "need 0 < K_minus <= K_plus");
  if (!(tau > 0.0) || !(b > 0.0)) throw Error(ErrorCode::kNonpositiveArgument, "tau and b must be positive");
  const double sigma = dim == 2 ? 2.0 : 2.0 * kPi;
  const double e = 0.5 * (dim - 1);
  const double c = 0.5 * (dim + 1);
  return sigma / (dim - 1) * (std::pow(K_minus, -e) - std::pow(K_plus, -e)) * std::pow(tau, -c) *
         lower_incomplete_gamma(tau * b, c).real();
}

TailHolderBounds tail_and_holder_bounds(double tau, double b, double K, double alpha, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
  const double n = dim;
  TailHolderBounds r;
  r.tail_bound = (1.0 + std::pow(tau * b, 0.5 * (n - 1))) * std::pow(tau, -0.5 * (n + 1)) *
                 std::pow(K, -0.5 * (n - 1)) * std::exp(-tau * b);
  r.holder_bound = std::pow(b + 1.0 / K, 0.5 * alpha) * std::pow(b, 0.5 * (n + alpha + 1)) *
                   std::pow(K, -0.5 * (n - 1));
  return r;
}

namespace {

struct Rule {
  std::vector<double> x;
  std::vector<double> w;
};

Rule composite(double lo, double hi, int panels, int order) {
  Rule r;
  std::vector<double> px, pw;
  for (int p = 0; p < panels; ++p) {
    gauss_legendre(order, lo + (hi - lo) * p / panels, lo + (hi - lo) * (p + 1) / panels, px, pw);
    r.x.insert(r.x.end(), px.begin(), px.end());
    r.w.insert(r.w.end(), pw.begin(), pw.end());
  }
  return r;
}

Complex dot(const CVec& a, const CVec& b) { return (a.transpose() * b)(0, 0); }

}  // namespace

IdentityBreakdown integral_identity_check(const DomainGeometry& domain, const BumpProfile& u,
                                          const CgoProbe& probe, const LameMedium& medium,
                                          const IdentityQuadrature& quad) {
  if (domain.dim != 2 || probe.dim != 2 || medium.dim != 2)
    throw Error(ErrorCode::kUnsupportedDimension, "the identity check is implemented in 2D");
  if (domain.components.size() != 1 || domain.components[0].kind != DomainComponent::Kind::kCap)
    throw Error(ErrorCode::kInvalidParameter, "expected a single cap component");
  if (quad.panels < 1 || quad.order < 1) throw Error(ErrorCode::kInvalidParameter, "empty quadrature");
  const DomainComponent& comp = domain.components[0];
  const CapShape& cap = comp.cap;
  const Vec& c = comp.center;
  const int m = quad.panels * quad.order;
  const std::int64_t nodes = std::int64_t(m) * m + 6 * std::int64_t(m);
  if (nodes > quad.node_budget)
    throw Error(ErrorCode::kQuadratureBudgetExceeded, "identity quadrature needs " + std::to_string(nodes) + " nodes");

  IdentityBreakdown out;
  out.nodes = nodes;
  out.panels = quad.panels;
  out.order = quad.order;
  out.phi0 = lame_residual(u, c, medium);
  const double scale = std::max(1.0, out.phi0.norm());

  // u and T u must vanish on the curved part.
  for (int k = 0; k <= 64; ++k) {
    const double s = -cap.half_width + 2.0 * cap.half_width * k / 64.0;
    const Vec x = c + vec2(s, cap.gamma(std::abs(s)));
    Vec nu = vec2(cap.gamma_prime(s), -1.0);
    nu /= nu.norm();
    const FieldJet j = bump_jet(u, x);
    if (j.value.norm() > 1e-8 * scale || traction(j, nu, medium).norm() > 1e-8 * scale)
      throw Error(ErrorCode::kBoundaryConditionViolated, "u or T u is nonzero on the graph");
  }

  const Complex x1 = probe.xi[0];
  const Complex x2 = probe.xi[1];
  const Complex pe = dot(out.phi0, probe.eta);
  const double K = cap.K;
  const double b = cap.b;
  // int_m^inf exp(xi_2 t) dt
  auto tail = [&](double t) { return -std::exp(x2 * t) / x2; };

  out.lhs = pe * paraboloid_integral_closed(probe.xi, K, 2);

  // I1: region x_2 > max(b, K x_1^2); inner integral exact.
  const double sb = std::sqrt(b / K);
  {
    Complex s = 0.0;
    const Rule mid = composite(-sb, sb, quad.panels, quad.order);
    for (std::size_t k = 0; k < mid.x.size(); ++k) s += mid.w[k] * std::exp(x1 * mid.x[k]) * tail(b);
    const double a = -x2.real() * K;
    const double beta = std::abs(x1.real());
    const double target = -x2.real() * b + 40.0;
    const double X = std::max(1.01 * sb, (beta + std::sqrt(beta * beta + 4.0 * a * target)) / (2.0 * a));
    const Rule side = composite(sb, X, 2 * quad.panels, quad.order);
    for (std::size_t k = 0; k < side.x.size(); ++k) {
      const double y = side.x[k];
      s += side.w[k] * (std::exp(x1 * y) + std::exp(-x1 * y)) * tail(K * y * y);
    }
    out.I1 = pe * s;
  }

  // I2: paraboloid slab minus the cap; both inner integrals exact, shared node family.
  {
    Complex s = 0.0;
    const Rule ideal = composite(-sb, sb, quad.panels, quad.order);
    for (std::size_t k = 0; k < ideal.x.size(); ++k) {
      const double y = ideal.x[k];
      s += ideal.w[k] * std::exp(x1 * y) * (std::exp(x2 * b) - std::exp(x2 * (K * y * y))) / x2;
    }
    const Rule real = composite(-cap.half_width, cap.half_width, quad.panels, quad.order);
    for (std::size_t k = 0; k < real.x.size(); ++k) {
      const double y = real.x[k];
      s -= real.w[k] * std::exp(x1 * y) * (std::exp(x2 * b) - std::exp(x2 * cap.gamma(std::abs(y)))) / x2;
    }
    out.I2 = pe * s;
  }

  // I3 = -int_cap u_0 . (phi - phi(0))
  {
    Complex s = 0.0;
    const Rule outer = composite(-cap.half_width, cap.half_width, quad.panels, quad.order);
    for (std::size_t i = 0; i < outer.x.size(); ++i) {
      const double y1 = outer.x[i];
      const Rule inner = composite(cap.gamma(std::abs(y1)), b, quad.panels, quad.order);
      for (std::size_t k = 0; k < inner.x.size(); ++k) {
        const Vec y = vec2(y1, inner.x[k]);
        const CVec phi = lame_residual(u, c + y, medium);
        s += outer.w[i] * inner.w[k] * dot(probe.value(y), phi - out.phi0);
      }
    }
    out.I3 = -s;
  }

  // I4 over the lid x_2 = b, outward normal e_2.
  {
    Complex s = 0.0;
    const Vec nu = vec2(0.0, 1.0);
    const Rule lid = composite(-cap.half_width, cap.half_width, quad.panels, quad.order);
    for (std::size_t k = 0; k < lid.x.size(); ++k) {
      const Vec y = vec2(lid.x[k], b);
      const FieldJet ju = bump_jet(u, c + y);
      const FieldJet j0 = probe.jet(y);
      s += lid.w[k] * (dot(j0.value, traction(ju, nu, medium)) - dot(ju.value, traction(j0, nu, medium)));
    }
    out.I4 = s;
  }

  out.residual = std::abs(out.lhs - out.sum());
  return out;
}

double boundary_term_bound(double tau, double b, double K, double beta, int dim, double c1beta_norm) {
  return std::exp(-tau * b) * std::pow(K, -(beta + 0.5 * (dim + 1))) * (K + tau) * c1beta_norm;
}

double c1beta_proxy(const DomainGeometry& domain, const BumpProfile& u, double beta, int samples) {
  std::vector<Vec> pts;
  for (const auto& comp : domain.components) {
    const auto s = comp.boundary_samples(samples);
    pts.insert(pts.end(), s.begin(), s.end());
  }
  std::vector<CMat> grads;
  double sup = 0.0;
  for (const auto& p : pts) {
    const FieldJet j = bump_jet(u, p);
    sup = std::max(sup, j.value.norm() + j.gradient.norm());
    grads.push_back(j.gradient);
  }
  double hq = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t k = i + 1; k < pts.size(); ++k) {
      const double r = (pts[i] - pts[k]).norm();
      if (r > 0.0) hq = std::max(hq, (grads[i] - grads[k]).norm() / std::pow(r, beta));
    }
  return sup + hq;
}

double select_tau(double K, double zeta) {
  if (!(K >= std::exp(1.0))) throw Error(ErrorCode::kKTooSmall, "K must be at least e");
  if (!(zeta > 0.0)) throw Error(ErrorCode::kNonpositiveArgument, "zeta must be positive");
  return 4.0 * K * zeta * std::log(K);
}

double paper_zeta(double alpha, double varsigma, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
  if (!(alpha > 0.0) || !(varsigma > 0.0)) throw Error(ErrorCode::kNonpositiveArgument, "alpha, varsigma > 0");
  return 0.5 * std::min(alpha, varsigma) + (dim == 3 ? 1.0 / 6.0 : 0.0);
}

TractionPointVerdict traction_point_solve(bool tangential_zero, const LameMedium& medium, int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
  TractionPointVerdict v;
  Vec nu = Vec::Zero(dim);
  nu[dim - 1] = -1.0;
  v.matrix = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    FieldJet j;
    j.point = Vec::Zero(dim);
    j.value = CVec::Zero(dim);
    j.gradient = CMat::Zero(dim, dim);
    j.gradient(i, dim - 1) = 1.0;
    v.matrix.col(i) = traction(j, nu, medium).real();
  }
  v.determinant = v.matrix.determinant();
  if (std::abs(v.determinant) < 1e-12)
    throw Error(ErrorCode::kDegenerateModuli, "traction system is singular");
  if (!tangential_zero) {
    v.reason = "tangential derivatives not known to vanish; normal derivatives are not determined alone";
    return v;
  }
  v.gradient_vanishes = true;
  v.reason = "tangential derivatives vanish and the normal-derivative system is invertible";
  return v;
}

}  // namespace elasto
