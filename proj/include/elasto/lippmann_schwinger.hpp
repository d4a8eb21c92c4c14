#pragma once

#include <functional>
#include <vector>

#include "elasto/fields.hpp"
#include "elasto/mesh.hpp"
#include "elasto/source.hpp"

namespace elasto {

/// Density contrast V on the domain; (1 + V) is the medium density.
struct MediumScatterer {
  DomainGeometry domain;
  std::function<Complex(const Vec&)> V;
  LameMedium medium;
};

struct IncidentWave {
  enum class Kind { kPressure, kShear, kPointSource };
  Kind kind = Kind::kPressure;
  /// Propagation direction for plane waves (unit).
  Vec direction;
  /// Source location and force vector for the point source.
  Vec origin;
  CVec polarization;
};

/// Pressure d e^{i kp d.x}, shear d_perp e^{i ks d.x} with d_perp = (-d2, d1),
/// or the Green column G(x, origin) polarization.
SampledVectorField incident_field(const IncidentWave& wave, const LameMedium& medium,
                                  const std::vector<Vec>& points);

enum class SolveMode { kNeumannSeries, kDirectDense };

struct MediumSolve {
  SampledVectorField u_total;
  SampledVectorField u_scattered;
  SampledVectorField u_incident;
  FarFieldPattern farfield;
  int series_terms_used = 0;
  double contraction_estimate = 0.0;
  /// Norms of successive Neumann corrections (empty in direct mode).
  std::vector<double> corrections;
};

/// Collocation solve of (I + omega^2 Pot(V .)) u_t = u_i on the cell centres
/// of a Cartesian mesh, where Pot f = -int G f is the outgoing solution
/// operator of L + omega^2. The cell kernel depends only on the lattice
/// offset, so it is tabulated once.
MediumSolve solve_medium(const MediumScatterer& scatterer, const IncidentWave& incident,
                         const QuadratureMesh& mesh, SolveMode mode, const std::vector<Vec>& directions,
                         double tolerance = 1e-13, int max_terms = 400);

/// u_t(x) = u_i(x) + omega^2 sum_j int_{cell j} G(x, y) dy V_j u_t,j at arbitrary points.
SampledVectorField evaluate_total_field(const MediumScatterer& scatterer, const IncidentWave& incident,
                                        const QuadratureMesh& mesh, const MediumSolve& solve,
                                        const std::vector<Vec>& points);

/// Upsilon(eps, V) = eps V / (s - eps V).
double upsilon(double epsilon, double v_norm, double s);

struct ContractionReport {
  double epsilon = 0.0;
  double v_norm = 0.0;
  double upsilon = 0.0;
  double bound_u = 0.0;
  double bound_ut = 0.0;
  bool out_of_regime = false;
};

ContractionReport contraction_report(double epsilon, double v_norm, double s);
/// epsilon = d(Omega) omega and ||V||_inf sampled on a fine lattice.
ContractionReport contraction_report(const MediumScatterer& scatterer, double s);

}  // namespace elasto
