#include "elasto/elastic_core.hpp"

#include <cmath>
#include <random>

#include "elasto/error.hpp"
#include "elasto/finite_difference.hpp"

namespace elasto {

CVec traction(const FieldJet& jet, const Vec& normal, const LameMedium& medium) {
  const int n = static_cast<int>(normal.size());
  if (jet.gradient.rows() != n || jet.gradient.cols() != n)
    throw Error(ErrorCode::kDimensionMismatch, "jet and normal dimensions differ");
  if (std::abs(normal.norm() - 1.0) > 1e-12)
    throw Error(ErrorCode::kInvalidParameter, "normal must be a unit vector");
  const CMat& G = jet.gradient;
  const double lam = medium.lambda;
  const double mu = medium.mu;
  const CVec nu = normal.cast<Complex>();
  const Complex div = G.trace();
  CVec t = 2.0 * mu * (G * nu) + lam * div * nu;
  if (n == 2) {
    // mu * nu_perp * (d_2 u_1 - d_1 u_2), nu_perp = (-nu_2, nu_1)
    const Complex rot = G(0, 1) - G(1, 0);
    t[0] += mu * (-nu[1]) * rot;
    t[1] += mu * nu[0] * rot;
  } else {
    CVec curl(3);
    curl[0] = G(2, 1) - G(1, 2);
    curl[1] = G(0, 2) - G(2, 0);
    curl[2] = G(1, 0) - G(0, 1);
    t[0] += mu * (nu[1] * curl[2] - nu[2] * curl[1]);
    t[1] += mu * (nu[2] * curl[0] - nu[0] * curl[2]);
    t[2] += mu * (nu[0] * curl[1] - nu[1] * curl[0]);
  }
  return t;
}

double points_per_shear_wavelength(const RegularGrid& grid, const LameMedium& medium) {
  return 2.0 * kPi / (medium.kappa_s * grid.h);
}

std::pair<SampledVectorField, SampledVectorField> helmholtz_split(const GridField& u,
                                                                  const LameMedium& medium,
                                                                  int order) {
  if (u.grid.dim() != medium.dim)
    throw Error(ErrorCode::kDimensionMismatch, "grid and medium dimensions differ");
  if (points_per_shear_wavelength(u.grid, medium) < 10.0)
    throw Error(ErrorCode::kGridTooCoarse, "fewer than 10 points per shear wavelength");
  fd::Stencil st(u, order);
  SampledVectorField up, us;
  const double kp2 = medium.kappa_p * medium.kappa_p;
  const double ks2 = medium.kappa_s * medium.kappa_s;
  for (std::size_t k = 0; k < u.grid.size(); ++k) {
    const auto ijk = u.grid.multi_index(k);
    if (!st.interior(ijk)) continue;
    const CVec gd = st.grad_div(ijk);
    const CVec lap = st.laplacian(ijk);
    const Vec x = u.grid.node(ijk);
    up.nodes.push_back(x);
    us.nodes.push_back(x);
    up.values.push_back(-gd / kp2);
    us.values.push_back((gd - lap) / ks2);
  }
  up.mesh_ref = us.mesh_ref = "grid-interior";
  return {up, us};
}

double holder_seminorm(const SampledVectorField& field, double delta, std::int64_t pair_budget,
                       std::uint64_t seed) {
  const std::size_t n = field.size();
  if (n < 2 || field.values.size() != n)
    throw Error(ErrorCode::kInsufficientSamples, "need at least two samples");
  const int dim = field.dim();
  const double dmax = dim == 3 ? 0.5 : 1.0;
  if (!(delta > 0.0) || delta > dmax)
    throw Error(ErrorCode::kInvalidExponent, "delta outside the admissible range");
  auto quotient = [&](std::size_t i, std::size_t j) {
    const double r = (field.nodes[i] - field.nodes[j]).norm();
    if (r == 0.0) return 0.0;
    const double num = (field.values[i] - field.values[j]).cwiseAbs().maxCoeff();
    return num / std::pow(r, delta);
  };
  double best = 0.0;
  const double total = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  if (total <= static_cast<double>(pair_budget)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) best = std::max(best, quotient(i, j));
    return best;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::int64_t s = 0; s < pair_budget; ++s) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i != j) best = std::max(best, quotient(i, j));
  }
  return best;
}

FieldNorms field_norms(const SampledVectorField& field, const QuadratureMesh& mesh) {
  if (field.size() != mesh.size() || field.values.size() != mesh.size())
    throw Error(ErrorCode::kMeshMismatch, "field is not sampled on the mesh nodes");
  FieldNorms out;
  double s = 0.0;
  for (std::size_t k = 0; k < mesh.size(); ++k) {
    const double a = field.values[k].norm();
    s += mesh.weights[k] * a * a;
    out.linf = std::max(out.linf, a);
  }
  out.l2 = std::sqrt(s);
  return out;
}

}  // namespace elasto
