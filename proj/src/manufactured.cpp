#include "elasto/manufactured.hpp"

#include <random>

#include "elasto/seed.hpp"

#include <cmath>

#include "elasto/error.hpp"

namespace elasto {

ScalarJetFunction disk_defining(const Vec& center, double radius) {
  return [center, radius](const JetPoint& x) {
    const Jet dx = x[0] - center[0];
    const Jet dy = x[1] - center[1];
    return Jet(radius * radius) - dx * dx - dy * dy;
  };
}

ScalarJetFunction ellipse_defining(const Vec& center, double semi_a, double semi_b) {
  return [center, semi_a, semi_b](const JetPoint& x) {
    const Jet u = (x[0] - center[0]) * Jet(1.0 / semi_a);
    const Jet v = (x[1] - center[1]) * Jet(1.0 / semi_b);
    return Jet(1.0) - u * u - v * v;
  };
}

namespace {

Jet cap_gamma(const CapShape& cap, const Jet& s) {
  const Jet a = abs(s);
  return Jet(cap.K) * s * s + Jet(cap.cubic) * a * a * a;
}

}  // namespace

ScalarJetFunction cap_graph_defining(const DomainComponent& cap) {
  if (cap.kind != DomainComponent::Kind::kCap) throw Error(ErrorCode::kInvalidParameter, "not a cap");
  return [c = cap](const JetPoint& x) {
    return (x[1] - c.center[1]) - cap_gamma(c.cap, x[0] - c.center[0]);
  };
}

ScalarJetFunction cap_defining(const DomainComponent& cap) {
  auto graph = cap_graph_defining(cap);
  return [graph, c = cap](const JetPoint& x) { return graph(x) * (Jet(c.center[1] + c.cap.b) - x[1]); };
}

BumpProfile make_bump(ScalarJetFunction d, int power, ScalarJetFunction g, const CVec& amplitude) {
  if (power < 2) throw Error(ErrorCode::kInvalidParameter, "bump power must be at least 2");
  return [d, power, g, amplitude](const JetPoint& x) -> JetField {
    const Jet dv = d(x);
    if (dv.v.real() <= 0.0) return {Jet(0.0), Jet(0.0)};
    Jet p = dv;
    for (int k = 1; k < power; ++k) p = p * dv;
    const Jet s = p * g(x);
    return {s * Jet(amplitude[0]), s * Jet(amplitude[1])};
  };
}

BumpProfile sum_bumps(std::vector<BumpProfile> parts, std::vector<DomainComponent> supports) {
  if (parts.size() != supports.size()) throw Error(ErrorCode::kInvalidParameter, "one support per bump");
  return [parts, supports](const JetPoint& x) -> JetField {
    const Vec p = vec2(x[0].v.real(), x[1].v.real());
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (supports[k].contains(p)) return parts[k](x);
    return {Jet(0.0), Jet(0.0)};
  };
}

FieldJet bump_jet(const BumpProfile& u, const Vec& x) {
  const JetField f = u(jet_point(x));
  FieldJet j;
  j.point = x;
  j.value = CVec(2);
  j.gradient = CMat(2, 2);
  for (int i = 0; i < 2; ++i) {
    j.value[i] = f[i].v;
    for (int a = 0; a < 2; ++a) j.gradient(i, a) = f[i].g[a];
  }
  return j;
}

CVec lame_residual(const BumpProfile& u, const Vec& x, const LameMedium& m) {
  const JetField f = u(jet_point(x));
  CVec r(2);
  for (int i = 0; i < 2; ++i) {
    Complex lap = f[i].hess(0, 0) + f[i].hess(1, 1);
    Complex gd = f[0].hess(i, 0) + f[1].hess(i, 1);
    r[i] = m.mu * lap + (m.lambda + m.mu) * gd + m.omega * m.omega * f[i].v;
  }
  return r;
}

NonradiatingSource make_nonradiating(const DomainGeometry& domain, const BumpProfile& bump,
                                     const LameMedium& medium, const QuadratureMesh& mesh) {
  if (domain.dim != 2 || medium.dim != 2)
    throw Error(ErrorCode::kUnsupportedDimension, "manufactured sources are 2D");
  for (const auto& c : domain.components) {
    for (const auto& p : c.boundary_samples(512)) {
      const FieldJet j = bump_jet(bump, p);
      if (j.value.norm() > 1e-8 || j.gradient.norm() > 1e-8)
        throw Error(ErrorCode::kBumpNotVanishing, "u or grad u is nonzero on the boundary");
    }
  }
  NonradiatingSource s;
  s.phi_fn = [domain, bump, medium](const Vec& x) -> CVec {
    return domain.contains(x) ? lame_residual(bump, x, medium) : CVec(CVec::Zero(2));
  };
  s.u_exact = [domain, bump](const Vec& x) -> CVec {
    return domain.contains(x) ? bump_jet(bump, x).value : CVec(CVec::Zero(2));
  };
  s.grad_exact = [domain, bump](const Vec& x) -> CMat {
    return domain.contains(x) ? bump_jet(bump, x).gradient : CMat(CMat::Zero(2, 2));
  };
  s.phi.nodes = mesh.nodes;
  s.phi.mesh_ref = "volume";
  for (const auto& x : mesh.nodes) s.phi.values.push_back(lame_residual(bump, x, medium));
  return s;
}

NonradiatingCase nonradiating_disk_case(std::uint64_t seed, int index, double eps_lo, double eps_hi) {
  std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
  std::uniform_real_distribution<double> U(0.0, 1.0);
  NonradiatingCase c;
  const double omega = 0.5 * std::pow(8.0, U(rng));
  const double mu = 0.5 + 1.5 * U(rng);
  const double lambda = 0.5 + 2.5 * U(rng);
  c.medium = make_medium(lambda, mu, omega, 2);
  c.epsilon = eps_lo * std::pow(eps_hi / eps_lo, U(rng));
  const double r = 0.5 * c.epsilon / omega;
  const Vec center = vec2(4.0 * U(rng) - 2.0, 4.0 * U(rng) - 2.0) / omega;
  c.domain = DomainGeometry({DomainComponent::disk(center, r)});
  const int kind = static_cast<int>(3 * U(rng)) % 3;
  const double a = 2.0 * U(rng) - 1.0, th = 2.0 * kPi * U(rng);
  ScalarJetFunction g;
  if (kind == 0) {
    g = [](const JetPoint&) { return Jet(1.0); };
  } else if (kind == 1) {
    g = [center, r, a, th](const JetPoint& x) {
      return Jet(1.0) + (a / r) * (std::cos(th) * (x[0] - center[0]) + std::sin(th) * (x[1] - center[1]));
    };
  } else {
    g = [center, r, th](const JetPoint& x) {
      return cos((std::cos(th) * (x[0] - center[0]) + std::sin(th) * (x[1] - center[1])) * (2.0 / r));
    };
  }
  CVec amp(2);
  amp << Complex(2.0 * U(rng) - 1.0, 2.0 * U(rng) - 1.0), Complex(2.0 * U(rng) - 1.0, 2.0 * U(rng) - 1.0);
  // d = r^2 - |x-c|^2 is O(r^2); rescale so that u is O(1).
  const double s = 1.0 / (r * r);
  auto d = disk_defining(center, r);
  c.bump = make_bump([d, s](const JetPoint& x) { return d(x) * s; }, 2, g, amp);
  c.mesh = volume_mesh(c.domain, r / 8.0);
  c.source = make_nonradiating(c.domain, c.bump, c.medium, c.mesh);
  c.label = "disk#" + std::to_string(index) + (kind == 0 ? "/const" : kind == 1 ? "/affine" : "/cos");
  return c;
}

}  // namespace elasto
