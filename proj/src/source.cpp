#include "elasto/source.hpp"

#include <cmath>
#include <iomanip>

#include "elasto/error.hpp"
#include "elasto/green.hpp"

namespace elasto {

CVec FarFieldPattern::total(std::size_t k) const {
  return up[k] * directions[k].cast<Complex>() + us[k];
}

std::vector<Vec> circle_directions(int n) {
  std::vector<Vec> d;
  d.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * k / n;
    d.push_back(vec2(std::cos(t), std::sin(t)));
  }
  return d;
}

namespace {

void check_problem(const SourceProblem& p, const QuadratureMesh& mesh) {
  if (p.medium.dim != 2 || p.domain.dim != 2)
    throw Error(ErrorCode::kUnsupportedDimension, "the volume solve is 2D only");
  if (mesh.size() == 0) throw Error(ErrorCode::kMeshTooCoarse, "empty mesh");
}

}  // namespace

SampledVectorField solve_source(const SourceProblem& problem, const QuadratureMesh& mesh,
                                const std::vector<Vec>& eval_points) {
  check_problem(problem, mesh);
  const auto& m = problem.medium;
  std::vector<CVec> f(mesh.size());
  for (std::size_t k = 0; k < mesh.size(); ++k) f[k] = problem.phi(mesh.nodes[k]);

  SampledVectorField out;
  out.nodes = eval_points;
  out.values.reserve(eval_points.size());
  if (mesh.cell_size > 0.0) {
    for (const auto& x : eval_points) {
      CVec u = CVec::Zero(2);
      for (std::size_t k = 0; k < mesh.size(); ++k) u -= cell_integral(x, mesh.nodes[k], mesh.cell_size, m) * f[k];
      out.values.push_back(u);
    }
    return out;
  }

  const double diam = diameter(problem.domain);
  PolarRule rule;
  rule.n_theta = std::max(64, static_cast<int>(std::ceil(2.0 * kPi * diam / mesh.h)));
  for (const auto& x : eval_points) {
    int inside = -1;
    for (std::size_t c = 0; c < problem.domain.components.size(); ++c)
      if (problem.domain.components[c].contains(x)) inside = static_cast<int>(c);
    if (inside < 0 && signed_distance(problem.domain, x) < 2.0 * mesh.h)
      throw Error(ErrorCode::kMeshTooCoarse, "exterior point within two node spacings of the boundary");
    CVec u = CVec::Zero(2);
    if (inside >= 0) u -= polar_potential(problem.domain.components[inside], x, problem.phi, m, rule);
    for (std::size_t k = 0; k < mesh.size(); ++k) {
      if (mesh.component.size() == mesh.size() && mesh.component[k] == inside) continue;
      u -= mesh.weights[k] * (kupradze_tensor(x, mesh.nodes[k], m).matrix * f[k]);
    }
    out.values.push_back(u);
  }
  return out;
}

FarFieldPattern farfield_of_density(const std::vector<Vec>& nodes, const std::vector<double>& weights,
                                    const std::vector<CVec>& f, const LameMedium& medium,
                                    const std::vector<Vec>& directions) {
  if (medium.dim != 2) throw Error(ErrorCode::kUnsupportedDimension, "far fields are 2D only");
  if (nodes.size() != weights.size() || nodes.size() != f.size())
    throw Error(ErrorCode::kMeshMismatch, "density not sampled on the mesh");
  const auto c = farfield_constants(medium);
  FarFieldPattern pat;
  pat.directions = directions;
  const double w = directions.empty() ? 0.0 : 2.0 * kPi / directions.size();
  for (const auto& xh : directions) {
    if (std::abs(xh.norm() - 1.0) > 1e-12) throw Error(ErrorCode::kInvalidDirection, "non-unit direction");
    Complex up = 0.0;
    CVec fs = CVec::Zero(2);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double t = xh.dot(nodes[k]);
      const Complex xf = xh[0] * f[k][0] + xh[1] * f[k][1];
      up += weights[k] * std::exp(-kI * medium.kappa_p * t) * xf;
      fs += (weights[k] * std::exp(-kI * medium.kappa_s * t)) * f[k];
    }
    // Tangential projection applied once after summation.
    const Complex xfs = xh[0] * fs[0] + xh[1] * fs[1];
    CVec us = fs - xfs * xh.cast<Complex>();
    pat.up.push_back(-c.c_p * up);
    pat.us.push_back(-c.c_s * us);
    pat.weights.push_back(w);
  }
  return pat;
}

FarFieldPattern farfield_of_source(const SourceProblem& problem, const QuadratureMesh& mesh,
                                   const std::vector<Vec>& directions) {
  check_problem(problem, mesh);
  std::vector<CVec> f(mesh.size());
  for (std::size_t k = 0; k < mesh.size(); ++k) f[k] = problem.phi(mesh.nodes[k]);
  return farfield_of_density(mesh.nodes, mesh.weights, f, problem.medium, directions);
}

double farfield_norm(const FarFieldPattern& pattern) {
  double s = 0.0;
  for (std::size_t k = 0; k < pattern.size(); ++k)
    s += pattern.weights[k] * (std::norm(pattern.up[k]) + pattern.us[k].squaredNorm());
  return std::sqrt(s);
}

void write_farfield_csv(std::ostream& os, const FarFieldPattern& p) {
  os << "angle,up_re,up_im,us1_re,us1_im,us2_re,us2_im\n" << std::setprecision(17);
  for (std::size_t k = 0; k < p.size(); ++k) {
    os << std::atan2(p.directions[k][1], p.directions[k][0]) << ',' << p.up[k].real() << ','
       << p.up[k].imag() << ',' << p.us[k][0].real() << ',' << p.us[k][0].imag() << ','
       << p.us[k][1].real() << ',' << p.us[k][1].imag() << '\n';
  }
}

}  // namespace elasto
