#include "elasto/lippmann_schwinger.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "elasto/error.hpp"
#include "elasto/green.hpp"

namespace elasto {

SampledVectorField incident_field(const IncidentWave& wave, const LameMedium& medium,
                                  const std::vector<Vec>& points) {
  SampledVectorField out;
  out.nodes = points;
  const int n = medium.dim;
  if (wave.kind != IncidentWave::Kind::kPointSource) {
    if (wave.direction.size() != n || std::abs(wave.direction.norm() - 1.0) > 1e-12)
      throw Error(ErrorCode::kInvalidDirection, "plane-wave direction must be a unit vector");
    if (wave.kind == IncidentWave::Kind::kShear && n != 2)
      throw Error(ErrorCode::kUnsupportedDimension, "shear plane waves need a polarization in 3D");
  } else if (wave.origin.size() != n || wave.polarization.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "point source origin/polarization dimension");
  }
  for (const auto& x : points) {
    switch (wave.kind) {
      case IncidentWave::Kind::kPressure:
        out.values.push_back(wave.direction.cast<Complex>() *
                             std::exp(kI * medium.kappa_p * wave.direction.dot(x)));
        break;
      case IncidentWave::Kind::kShear:
        out.values.push_back(vec2(-wave.direction[1], wave.direction[0]).cast<Complex>() *
                             std::exp(kI * medium.kappa_s * wave.direction.dot(x)));
        break;
      case IncidentWave::Kind::kPointSource:
        out.values.push_back(kupradze_tensor(x, wave.origin, medium).matrix * wave.polarization);
        break;
    }
  }
  return out;
}

namespace {

struct Lattice {
  std::vector<long> i, j;
  long di_max = 0, dj_max = 0;
};

Lattice lattice_of(const QuadratureMesh& mesh) {
  Lattice L;
  const double h = mesh.cell_size;
  long imin = std::numeric_limits<long>::max(), imax = std::numeric_limits<long>::min();
  long jmin = imin, jmax = imax;
  for (const auto& x : mesh.nodes) {
    const long a = std::lround(x[0] / h - 0.5);
    const long b = std::lround(x[1] / h - 0.5);
    if (std::abs((a + 0.5) * h - x[0]) > 1e-9 * h || std::abs((b + 0.5) * h - x[1]) > 1e-9 * h)
      throw Error(ErrorCode::kMeshMismatch, "mesh nodes are not on the cell lattice");
    L.i.push_back(a);
    L.j.push_back(b);
    imin = std::min(imin, a);
    imax = std::max(imax, a);
    jmin = std::min(jmin, b);
    jmax = std::max(jmax, b);
  }
  L.di_max = imax - imin;
  L.dj_max = jmax - jmin;
  return L;
}

// Cell kernel int_{cell(0)} G(offset h, y) dy for all lattice offsets.
class KernelTable {
 public:
  KernelTable(const Lattice& L, double h, const LameMedium& m) : ni_(L.di_max), nj_(L.dj_max) {
    table_.resize((2 * ni_ + 1) * (2 * nj_ + 1));
    for (long a = -ni_; a <= ni_; ++a)
      for (long b = -nj_; b <= nj_; ++b)
        table_[slot(a, b)] = cell_integral(vec2(a * h, b * h), vec2(0, 0), h, m);
  }
  const CMat& operator()(long a, long b) const { return table_[slot(a, b)]; }

 private:
  std::size_t slot(long a, long b) const { return (a + ni_) * (2 * nj_ + 1) + (b + nj_); }
  long ni_, nj_;
  std::vector<CMat> table_;
};

// y = omega^2 A (V x), stacked as 2N complex vectors.
Eigen::VectorXcd apply_operator(const KernelTable& K, const Lattice& L, const std::vector<Complex>& V,
                                double w2, const Eigen::VectorXcd& x) {
  const std::size_t n = V.size();
  Eigen::VectorXcd vx(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    vx[2 * k] = V[k] * x[2 * k];
    vx[2 * k + 1] = V[k] * x[2 * k + 1];
  }
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(2 * n);
  for (std::size_t p = 0; p < n; ++p) {
    Complex s0 = 0.0, s1 = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
      if (V[q] == Complex(0.0)) continue;
      const CMat& g = K(L.i[p] - L.i[q], L.j[p] - L.j[q]);
      s0 += g(0, 0) * vx[2 * q] + g(0, 1) * vx[2 * q + 1];
      s1 += g(1, 0) * vx[2 * q] + g(1, 1) * vx[2 * q + 1];
    }
    y[2 * p] = w2 * s0;
    y[2 * p + 1] = w2 * s1;
  }
  return y;
}

}  // namespace

MediumSolve solve_medium(const MediumScatterer& sc, const IncidentWave& incident, const QuadratureMesh& mesh,
                         SolveMode mode, const std::vector<Vec>& directions, double tolerance, int max_terms) {
  const auto& m = sc.medium;
  if (m.dim != 2) throw Error(ErrorCode::kUnsupportedDimension, "medium solve is 2D only");
  if (!(mesh.cell_size > 0.0)) throw Error(ErrorCode::kMeshMismatch, "medium solve needs a Cartesian mesh");
  const std::size_t n = mesh.size();
  const Lattice L = lattice_of(mesh);
  const KernelTable K(L, mesh.cell_size, m);
  std::vector<Complex> V(n);
  for (std::size_t k = 0; k < n; ++k) V[k] = sc.V(mesh.nodes[k]);
  const double w2 = m.omega * m.omega;

  MediumSolve out;
  out.u_incident = incident_field(incident, m, mesh.nodes);
  Eigen::VectorXcd ui(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    ui[2 * k] = out.u_incident.values[k][0];
    ui[2 * k + 1] = out.u_incident.values[k][1];
  }
  Eigen::VectorXcd ut;
  if (mode == SolveMode::kNeumannSeries) {
    // u_{k+1} = u_i + omega^2 A V u_k with A = int G; corrections are
    // successive powers of the operator applied to u_i.
    ut = ui;
    Eigen::VectorXcd term = ui;
    out.series_terms_used = 1;
    const double base = ui.norm();
    double prev = base;
    while (true) {
      term = apply_operator(K, L, V, w2, term);
      const double tn = term.norm();
      out.corrections.push_back(tn);
      if (tn <= tolerance * base) break;
      const double ratio = tn / prev;
      out.contraction_estimate = std::max(out.contraction_estimate, ratio);
      if (out.series_terms_used >= 3 && ratio >= 1.0)
        throw Error(ErrorCode::kSeriesDiverges, "Neumann series contraction factor >= 1");
      if (out.series_terms_used >= max_terms)
        throw Error(ErrorCode::kSeriesDiverges, "Neumann series did not converge");
      ut += term;
      ++out.series_terms_used;
      prev = tn;
    }
  } else {
    Eigen::MatrixXcd A(2 * n, 2 * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const CMat& g = K(L.i[p] - L.i[q], L.j[p] - L.j[q]);
        A.block<2, 2>(2 * p, 2 * q) = (-w2 * V[q]) * g;
      }
    A += Eigen::MatrixXcd::Identity(2 * n, 2 * n);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    if (!(lu.rcond() > 1e-13)) throw Error(ErrorCode::kSingularSystem, "collocation matrix is singular");
    ut = lu.solve(ui);
    out.series_terms_used = 0;
  }

  out.u_total.nodes = out.u_scattered.nodes = mesh.nodes;
  out.u_total.mesh_ref = out.u_scattered.mesh_ref = "cartesian";
  std::vector<CVec> f(n);
  for (std::size_t k = 0; k < n; ++k) {
    CVec t(2);
    t << ut[2 * k], ut[2 * k + 1];
    out.u_total.values.push_back(t);
    out.u_scattered.values.push_back(t - out.u_incident.values[k]);
    f[k] = -w2 * V[k] * t;
  }
  out.farfield = farfield_of_density(mesh.nodes, mesh.weights, f, m, directions);
  return out;
}

SampledVectorField evaluate_total_field(const MediumScatterer& sc, const IncidentWave& incident,
                                        const QuadratureMesh& mesh, const MediumSolve& solve,
                                        const std::vector<Vec>& points) {
  const auto& m = sc.medium;
  const double w2 = m.omega * m.omega;
  SampledVectorField out = incident_field(incident, m, points);
  std::vector<CVec> vu(mesh.size());
  for (std::size_t k = 0; k < mesh.size(); ++k) vu[k] = sc.V(mesh.nodes[k]) * solve.u_total.values[k];
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t k = 0; k < mesh.size(); ++k) {
      if (vu[k].norm() == 0.0) continue;
      out.values[p] += w2 * (cell_integral(points[p], mesh.nodes[k], mesh.cell_size, m) * vu[k]);
    }
  return out;
}

double upsilon(double epsilon, double v_norm, double s) {
  const double ev = epsilon * v_norm;
  return ev / (s - ev);
}

ContractionReport contraction_report(double epsilon, double v_norm, double s) {
  ContractionReport r;
  r.epsilon = epsilon;
  r.v_norm = v_norm;
  const double ev = epsilon * v_norm;
  r.out_of_regime = !(ev < s);
  r.upsilon = upsilon(epsilon, v_norm, s);
  r.bound_u = r.upsilon;
  r.bound_ut = s / (s - ev);
  return r;
}

ContractionReport contraction_report(const MediumScatterer& sc, double s) {
  double feature = std::numeric_limits<double>::infinity();
  for (const auto& c : sc.domain.components)
    feature = std::min(feature, c.kind == DomainComponent::Kind::kDisk ? c.radius
                                : c.kind == DomainComponent::Kind::kEllipse ? std::min(c.semi_a, c.semi_b)
                                                                            : c.cap.b);
  const auto probe = cartesian_mesh(sc.domain, feature / 40.0);
  double vmax = 0.0;
  for (const auto& x : probe.nodes) vmax = std::max(vmax, std::abs(sc.V(x)));
  return contraction_report(diameter(sc.domain) * sc.medium.omega, vmax, s);
}

}  // namespace elasto
