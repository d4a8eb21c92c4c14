#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elasto/geometry.hpp"
#include "elasto/mesh.hpp"
#include "elasto/potential.hpp"

namespace elasto {

enum class Regime { kRadiatingAsserted, kNonRadiatingConsistent, kIndeterminate };

const char* to_string(Regime r);

/// Three-valued verdict; ratios within +-10% of the fitted constant are
/// indeterminate.
Regime classify(double ratio, double c_fit);

struct CriterionReport {
  std::string name;
  double lhs = 0.0;
  double rhs_structural = 0.0;
  double ratio = 0.0;
  double c_fit = 1.0;
  Regime regime = Regime::kIndeterminate;
  std::map<std::string, double> inputs_echo;
};

struct CalibrationResult {
  double constant_fit = 0.0;
  int violations = 0;
  int sweep_size = 0;
  std::string fit_method;
};

// Structural right-hand sides (constants set to 1).

/// eps^delta (1 + (1 + eps) eps^{n/2})
double small_support_rhs(double epsilon, double delta, int dim);
/// eps^delta (1 + (1 + upsilon)(1 + eps) eps^{n/2})
double medium_small_rhs(double epsilon, double delta, int dim, double upsilon);
/// (ln K)^{(n+1)/2} K^{-min(alpha, varsigma)/2}, with +1/6 on the exponent in 3D.
double kpoint_rhs(double K, double alpha, double varsigma, int dim);

/// Hölder exponent range for the small-support results: (0, 1] in 2D, (0, 1/2] in 3D.
bool small_exponent_legal(double delta, int dim);
/// Exponent range for the K-curvature results: alpha in (0, 1) in 2D; in 3D
/// alpha and min(alpha, varsigma) in (1/3, 1).
bool kpoint_exponent_legal(double alpha, double varsigma, int dim);

/// Inputs of the small-support lhs for one component: sup of |phi| over the
/// boundary (sampled just inside it, as a limit from the interior), the
/// sampled Hölder seminorm and the sup norm over mesh nodes plus boundary
/// samples.
struct IntensityStats {
  double sup_boundary = 0.0;
  double holder = 0.0;
  double linf = 0.0;
};

IntensityStats intensity_stats(const VectorFunction& phi, const DomainComponent& component,
                               const QuadratureMesh& mesh, double delta, int boundary_samples = 256,
                               std::int64_t pair_budget = 200000, std::uint64_t seed = 1);

CriterionReport small_support_criterion(double sup_boundary_phi, double holder_seminorm_phi, double linf_phi,
                                        double delta, double epsilon, double omega, int dim, double c_fit = 1.0);

/// min(1, (c_fit * lhs_ratio)^{1/delta}) / omega
double diameter_lower_bound(double lhs_ratio, double delta, double omega, double c_fit);

CriterionReport kpoint_criterion(double phi_at_q, double norm_max, double K, double alpha, double varsigma,
                                 int dim, double c_fit = 1.0);

CriterionReport medium_small_criterion(double v_ui_sup, double v_norm, double ui_norm, double delta,
                                       double epsilon, double eps_max, double v_max, double s_fit, int dim,
                                       double c_fit = 1.0);

CriterionReport medium_kpoint_criterion(double v_ui_at_q, double K, double alpha, double varsigma, int dim,
                                        double c_fit = 1.0);

struct TransmissionInputs {
  enum class Kind { kSmall, kKPoint };
  Kind kind = Kind::kSmall;
  int dim = 2;
  /// kSmall: ||V|| and inf over the boundary of |V|.
  double v_norm = 0.0;
  double v_inf_boundary = 0.0;
  double epsilon = 0.0;
  double delta = 1.0;
  /// kKPoint: |V(q)| and the curvature data.
  double v_at_q = 0.0;
  double K = 0.0;
  double alpha = 0.5;
  double varsigma = 1.0;
  /// sup |w| on the boundary (kSmall) or |w(q)| (kKPoint), when supplied.
  std::optional<double> w_measure;
};

/// Upper bound on the transmission eigenfunction; lhs is the supplied w data
/// (0 when absent).
CriterionReport transmission_bounds(const TransmissionInputs& in, double c_fit = 1.0);

/// Solves c_fit * small_support_rhs(eps) = target by bisection on (0, eps_hi].
double epsilon_min_solve(double target_lhs, double delta, int dim, double c_fit, double eps_hi = 1e3);

/// Largest ratio lhs / rhs over the sweep.
CalibrationResult calibrate_constant(const std::vector<std::pair<double, double>>& sweep,
                                     const std::string& fit_method = "max lhs/rhs");

/// One measured configuration for the Lippmann-Schwinger bounds.
struct ContractionSample {
  double epsilon = 0.0;
  double v_norm = 0.0;
  /// ||u|| / ||u_i|| and ||u_t|| / ||u_i||
  double ratio_u = 0.0;
  double ratio_ut = 0.0;
};

/// Largest s with r_u <= eps V / (s - eps V) and r_ut <= s / (s - eps V) for
/// every sample. Throws NoRoot when no s above max eps V works.
CalibrationResult calibrate_s(const std::vector<ContractionSample>& samples);

enum class AdmissibleClass { kA, kB, kAPrime, kBPrime };

const char* to_string(AdmissibleClass c);

struct AdmissibleInputs {
  AdmissibleClass cls = AdmissibleClass::kA;
  int dim = 2;
  /// alpha (classes B, B') or delta (A, A').
  std::optional<double> exponent;
  std::optional<double> varsigma;
  /// Item (b): criterion ratio lhs / rhs_structural and the threshold constant.
  std::optional<double> criterion_ratio;
  std::optional<double> threshold;
  /// B: max(||phi||_{C^alpha}, ||phi||_{H^1}) against Xi_M. B': same for V against Xi.
  std::optional<double> norm_max;
  std::optional<double> norm_bound;
  /// A': inf_{boundary} |V| >= M_min and ||V|| <= M_max.
  std::optional<double> v_inf_boundary;
  std::optional<double> m_min;
  std::optional<double> v_norm;
  std::optional<double> m_max;
  /// Collections (A, A'): separation and the epsilon_min scale.
  int components = 1;
  std::optional<SeparationReport> separation;
  std::optional<double> epsilon_min;
  std::optional<double> omega;
};

struct AdmissibleItem {
  std::string name;
  bool pass = false;
  std::string reason;
};

struct AdmissibleVerdict {
  bool admissible = false;
  std::vector<AdmissibleItem> items;
};

/// Conjunction of the class items, each reported. Throws IncompleteInputs
/// when an item needs data that is missing.
AdmissibleVerdict admissible_class_check(const AdmissibleInputs& in);

}  // namespace elasto
