#include "elasto/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elasto/elastic_core.hpp"
#include "elasto/error.hpp"
#include "elasto/lippmann_schwinger.hpp"

namespace elasto {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::kRadiatingAsserted: return "radiating-asserted";
    case Regime::kNonRadiatingConsistent: return "non-radiating-consistent";
    case Regime::kIndeterminate: return "indeterminate";
  }
  return "?";
}

Regime classify(double ratio, double c_fit) {
  if (ratio > 1.1 * c_fit) return Regime::kRadiatingAsserted;
  if (ratio < 0.9 * c_fit) return Regime::kNonRadiatingConsistent;
  return Regime::kIndeterminate;
}

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::kInvalidDimension, "dim must be 2 or 3");
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw Error(ErrorCode::kNonpositiveArgument, std::string(what) + " must be positive");
}

CriterionReport finish(CriterionReport r) {
  if (!(r.rhs_structural > 0.0) || !std::isfinite(r.rhs_structural))
    throw Error(ErrorCode::kInvalidParameter, r.name + ": structural rhs is not positive");
  r.ratio = r.lhs / r.rhs_structural;
  if (!std::isfinite(r.ratio)) throw Error(ErrorCode::kInvalidParameter, r.name + ": ratio is not finite");
  r.regime = classify(r.ratio, r.c_fit);
  return r;
}

}  // namespace

double small_support_rhs(double epsilon, double delta, int dim) {
  return medium_small_rhs(epsilon, delta, dim, 0.0);
}

double medium_small_rhs(double epsilon, double delta, int dim, double upsilon) {
  check_dim(dim);
  return std::pow(epsilon, delta) * (1.0 + (1.0 + upsilon) * (1.0 + epsilon) * std::pow(epsilon, 0.5 * dim));
}

double kpoint_rhs(double K, double alpha, double varsigma, int dim) {
  check_dim(dim);
  if (!(K >= std::exp(1.0))) throw Error(ErrorCode::kKTooSmall, "K must be at least e");
  const double e = -0.5 * std::min(alpha, varsigma) + (dim == 3 ? 1.0 / 6.0 : 0.0);
  return std::pow(std::log(K), 0.5 * (dim + 1)) * std::pow(K, e);
}

bool small_exponent_legal(double delta, int dim) {
  return delta > 0.0 && delta <= (dim == 2 ? 1.0 : 0.5);
}

bool kpoint_exponent_legal(double alpha, double varsigma, int dim) {
  if (dim == 2) return alpha > 0.0 && alpha < 1.0;
  const double m = std::min(alpha, varsigma);
  return alpha > 1.0 / 3.0 && alpha < 1.0 && m > 1.0 / 3.0 && m < 1.0;
}

IntensityStats intensity_stats(const VectorFunction& phi, const DomainComponent& c, const QuadratureMesh& mesh,
                               double delta, int boundary_samples, std::int64_t pair_budget, std::uint64_t seed) {
  if (c.dim() != 2) throw Error(ErrorCode::kUnsupportedDimension, "intensity statistics are 2D");
  Vec ref = c.center;
  if (c.kind == DomainComponent::Kind::kCap) ref[1] += 0.5 * c.cap.b;
  const double nudge = 1e-9 * c.diameter();
  IntensityStats s;
  SampledVectorField f;
  for (const auto& p : c.boundary_samples(boundary_samples)) {
    const Vec dir = ref - p;
    const Vec x = dir.norm() > 0.0 ? Vec(p + nudge * dir / dir.norm()) : p;
    const CVec v = phi(x);
    s.sup_boundary = std::max(s.sup_boundary, v.norm());
    f.nodes.push_back(x);
    f.values.push_back(v);
  }
  for (const auto& x : mesh.nodes) {
    if (!c.contains(x)) continue;
    f.nodes.push_back(x);
    f.values.push_back(phi(x));
  }
  for (const auto& v : f.values) s.linf = std::max(s.linf, v.norm());
  s.holder = holder_seminorm(f, delta, pair_budget, seed);
  return s;
}

CriterionReport small_support_criterion(double sup_boundary_phi, double holder_seminorm_phi, double linf_phi,
                                        double delta, double epsilon, double omega, int dim, double c_fit) {
  check_dim(dim);
  if (!small_exponent_legal(delta, dim))
    throw Error(ErrorCode::kInvalidExponent, "delta outside (0,1] (n=2) or (0,1/2] (n=3)");
  check_positive(epsilon, "epsilon");
  check_positive(omega, "omega");
  const double den = std::pow(omega, -delta) * holder_seminorm_phi + linf_phi;
  CriterionReport r;
  r.name = "small_support";
  r.c_fit = c_fit;
  r.lhs = den > 0.0 ? sup_boundary_phi / den : 0.0;
  r.rhs_structural = small_support_rhs(epsilon, delta, dim);
  r.inputs_echo = {{"sup_boundary_phi", sup_boundary_phi}, {"holder_seminorm", holder_seminorm_phi},
                   {"linf", linf_phi}, {"delta", delta}, {"epsilon", epsilon}, {"omega", omega},
                   {"dim", double(dim)}};
  return finish(r);
}

double diameter_lower_bound(double lhs_ratio, double delta, double omega, double c_fit) {
  check_positive(delta, "delta");
  check_positive(omega, "omega");
  if (lhs_ratio <= 0.0) return 0.0;
  return std::min(1.0, std::pow(c_fit * lhs_ratio, 1.0 / delta)) / omega;
}

CriterionReport kpoint_criterion(double phi_at_q, double norm_max, double K, double alpha, double varsigma,
                                 int dim, double c_fit) {
  check_dim(dim);
  if (!kpoint_exponent_legal(alpha, varsigma, dim))
    throw Error(ErrorCode::kExponentOutOfRange, "alpha / min(alpha, varsigma) outside the legal range");
  CriterionReport r;
  r.name = "kpoint";
  r.c_fit = c_fit;
  r.lhs = std::abs(phi_at_q) / std::max(1.0, norm_max);
  r.rhs_structural = kpoint_rhs(K, alpha, varsigma, dim);
  r.inputs_echo = {{"phi_at_q", phi_at_q}, {"norm_max", norm_max}, {"K", K}, {"alpha", alpha},
                   {"varsigma", varsigma}, {"dim", double(dim)}};
  return finish(r);
}

CriterionReport medium_small_criterion(double v_ui_sup, double v_norm, double ui_norm, double delta,
                                       double epsilon, double eps_max, double v_max, double s_fit, int dim,
                                       double c_fit) {
  check_dim(dim);
  if (!small_exponent_legal(delta, dim))
    throw Error(ErrorCode::kInvalidExponent, "delta outside (0,1] (n=2) or (0,1/2] (n=3)");
  check_positive(epsilon, "epsilon");
  if (epsilon > eps_max) throw Error(ErrorCode::kInvalidParameter, "epsilon exceeds eps_max");
  if (!(eps_max * v_max < s_fit)) throw Error(ErrorCode::kOutOfRegime, "eps_max * V_max >= s_fit");
  check_positive(v_norm, "||V||");
  check_positive(ui_norm, "||u_i||");
  CriterionReport r;
  r.name = "medium_small";
  r.c_fit = c_fit;
  r.lhs = v_ui_sup / (v_norm * ui_norm);
  const double ups = upsilon(eps_max, v_max, s_fit);
  r.rhs_structural = medium_small_rhs(epsilon, delta, dim, ups);
  r.inputs_echo = {{"v_ui_sup", v_ui_sup}, {"v_norm", v_norm}, {"ui_norm", ui_norm}, {"delta", delta},
                   {"epsilon", epsilon}, {"eps_max", eps_max}, {"v_max", v_max}, {"s_fit", s_fit},
                   {"upsilon", ups}, {"dim", double(dim)}};
  return finish(r);
}

CriterionReport medium_kpoint_criterion(double v_ui_at_q, double K, double alpha, double varsigma, int dim,
                                        double c_fit) {
  check_dim(dim);
  if (!kpoint_exponent_legal(alpha, varsigma, dim))
    throw Error(ErrorCode::kExponentOutOfRange, "alpha / min(alpha, varsigma) outside the legal range");
  CriterionReport r;
  r.name = "medium_kpoint";
  r.c_fit = c_fit;
  r.lhs = std::abs(v_ui_at_q);
  r.rhs_structural = kpoint_rhs(K, alpha, varsigma, dim);
  r.inputs_echo = {{"v_ui_at_q", v_ui_at_q}, {"K", K}, {"alpha", alpha}, {"varsigma", varsigma},
                   {"dim", double(dim)}};
  return finish(r);
}

CriterionReport transmission_bounds(const TransmissionInputs& in, double c_fit) {
  check_dim(in.dim);
  CriterionReport r;
  r.c_fit = c_fit;
  r.lhs = in.w_measure.value_or(0.0);
  if (in.kind == TransmissionInputs::Kind::kSmall) {
    if (!(in.v_inf_boundary > 0.0)) throw Error(ErrorCode::kDegenerateContrast, "inf |V| on the boundary is 0");
    if (!small_exponent_legal(in.delta, in.dim))
      throw Error(ErrorCode::kInvalidExponent, "delta outside (0,1] (n=2) or (0,1/2] (n=3)");
    check_positive(in.epsilon, "epsilon");
    r.name = "transmission_small";
    r.rhs_structural = in.v_norm / in.v_inf_boundary * small_support_rhs(in.epsilon, in.delta, in.dim);
    r.inputs_echo = {{"v_norm", in.v_norm}, {"v_inf_boundary", in.v_inf_boundary}, {"epsilon", in.epsilon},
                     {"delta", in.delta}, {"dim", double(in.dim)}};
  } else {
    if (!(std::abs(in.v_at_q) > 0.0)) throw Error(ErrorCode::kDegenerateContrast, "V(q) is 0");
    if (!kpoint_exponent_legal(in.alpha, in.varsigma, in.dim))
      throw Error(ErrorCode::kExponentOutOfRange, "alpha / min(alpha, varsigma) outside the legal range");
    r.name = "transmission_kpoint";
    r.rhs_structural = kpoint_rhs(in.K, in.alpha, in.varsigma, in.dim);
    r.inputs_echo = {{"v_at_q", in.v_at_q}, {"K", in.K}, {"alpha", in.alpha}, {"varsigma", in.varsigma},
                     {"dim", double(in.dim)}};
  }
  if (in.w_measure) r.inputs_echo["w_measure"] = *in.w_measure;
  r = finish(r);
  // An upper bound: data below C * rhs is consistent, above it contradicts.
  return r;
}

double epsilon_min_solve(double target_lhs, double delta, int dim, double c_fit, double eps_hi) {
  check_dim(dim);
  check_positive(target_lhs, "target");
  check_positive(delta, "delta");
  check_positive(c_fit, "c_fit");
  auto f = [&](double e) { return c_fit * small_support_rhs(e, delta, dim) - target_lhs; };
  if (f(eps_hi) < 0.0) throw Error(ErrorCode::kNoRoot, "target exceeds the bracket");
  double lo = 0.0, hi = eps_hi;
  for (int it = 0; it < 2000 && hi > lo; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::abs(f(lo)) < std::abs(f(hi)) ? lo : hi;
}

CalibrationResult calibrate_constant(const std::vector<std::pair<double, double>>& sweep,
                                     const std::string& fit_method) {
  if (sweep.empty()) throw Error(ErrorCode::kEmptySweep, "calibration sweep is empty");
  CalibrationResult c;
  c.sweep_size = static_cast<int>(sweep.size());
  c.fit_method = fit_method;
  for (const auto& [lhs, rhs] : sweep) {
    if (!(rhs > 0.0)) throw Error(ErrorCode::kInvalidParameter, "rhs must be positive");
    c.constant_fit = std::max(c.constant_fit, lhs / rhs);
  }
  for (const auto& [lhs, rhs] : sweep) c.violations += lhs > c.constant_fit * rhs;
  return c;
}

CalibrationResult calibrate_s(const std::vector<ContractionSample>& samples) {
  if (samples.empty()) throw Error(ErrorCode::kEmptySweep, "calibration sweep is empty");
  double s = std::numeric_limits<double>::infinity();
  double floor = 0.0;
  for (const auto& m : samples) {
    const double ev = m.epsilon * m.v_norm;
    floor = std::max(floor, ev);
    if (m.ratio_u > 0.0) s = std::min(s, ev * (1.0 + m.ratio_u) / m.ratio_u);
    if (m.ratio_ut > 1.0) s = std::min(s, ev * m.ratio_ut / (m.ratio_ut - 1.0));
  }
  if (!std::isfinite(s)) throw Error(ErrorCode::kNoRoot, "the sweep does not constrain s");
  if (!(s > floor)) throw Error(ErrorCode::kNoRoot, "no s above max eps ||V|| satisfies the bounds");
  CalibrationResult c;
  c.constant_fit = s;
  c.sweep_size = static_cast<int>(samples.size());
  c.fit_method = "largest s with r_u <= eV/(s-eV) and r_ut <= s/(s-eV)";
  for (const auto& m : samples) {
    const double ev = m.epsilon * m.v_norm;
    const double bu = ev / (s - ev), bt = s / (s - ev);
    c.violations += (m.ratio_u > bu * (1 + 1e-12)) || (m.ratio_ut > bt * (1 + 1e-12));
  }
  return c;
}

const char* to_string(AdmissibleClass c) {
  switch (c) {
    case AdmissibleClass::kA: return "A";
    case AdmissibleClass::kB: return "B";
    case AdmissibleClass::kAPrime: return "A-prime";
    case AdmissibleClass::kBPrime: return "B-prime";
  }
  return "?";
}

namespace {

template <class T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw Error(ErrorCode::kIncompleteInputs, std::string("missing input: ") + what);
  return *v;
}

AdmissibleItem item(const std::string& name, bool pass, const std::string& reason) {
  return {name, pass, pass ? "" : reason};
}

}  // namespace

AdmissibleVerdict admissible_class_check(const AdmissibleInputs& in) {
  check_dim(in.dim);
  AdmissibleVerdict v;
  const bool small_kind = in.cls == AdmissibleClass::kA || in.cls == AdmissibleClass::kAPrime;
  const double e = need(in.exponent, "exponent");

  // Item (a)
  if (small_kind) {
    v.items.push_back(item("exponent", small_exponent_legal(e, in.dim), "exponent range"));
  } else {
    const double vs = in.dim == 3 ? need(in.varsigma, "varsigma") : in.varsigma.value_or(1.0);
    v.items.push_back(item("exponent", kpoint_exponent_legal(e, vs, in.dim), "exponent range"));
  }
  if (in.cls == AdmissibleClass::kB) {
    v.items.push_back(item("norm", need(in.norm_max, "norm_max") < need(in.norm_bound, "norm_bound"),
                           "norm bound"));
  } else if (in.cls == AdmissibleClass::kBPrime) {
    v.items.push_back(item("norm", need(in.norm_max, "norm_max") <= need(in.norm_bound, "norm_bound"),
                           "norm bound"));
  } else if (in.cls == AdmissibleClass::kAPrime) {
    v.items.push_back(item("contrast", need(in.v_inf_boundary, "v_inf_boundary") >= need(in.m_min, "m_min"),
                           "contrast lower bound"));
    v.items.push_back(item("contrast_norm", need(in.v_norm, "v_norm") <= need(in.m_max, "m_max"),
                           "contrast norm bound"));
  }

  // Item (b)
  const double ratio = need(in.criterion_ratio, "criterion_ratio");
  const double thr = need(in.threshold, "threshold");
  const bool strict = in.cls == AdmissibleClass::kA;
  v.items.push_back(item("criterion", strict ? ratio > thr : ratio >= thr, "criterion"));

  // Collections of small components.
  if (small_kind && in.components > 1) {
    const SeparationReport& s = need(in.separation, "separation");
    v.items.push_back(item("disjoint", !s.disjointness_violated, "components not disjoint"));
    const double gap = 2.0 * need(in.epsilon_min, "epsilon_min") / need(in.omega, "omega");
    v.items.push_back(item("separation", s.distance > gap, "separation"));
  }

  v.admissible = std::all_of(v.items.begin(), v.items.end(), [](const AdmissibleItem& i) { return i.pass; });
  return v;
}

}  // namespace elasto
