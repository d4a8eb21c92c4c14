#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "elasto/cgo.hpp"
#include "elasto/criteria.hpp"
#include "elasto/elastic_core.hpp"
#include "elasto/error.hpp"
#include "elasto/geometry.hpp"
#include "elasto/lippmann_schwinger.hpp"
#include "elasto/manufactured.hpp"
#include "elasto/seed.hpp"
#include "elasto/source.hpp"

namespace elasto::cli {

namespace {

// ---------------------------------------------------------------- schemas

const char* kMediumSchema = R"({
  "type": "object",
  "properties": {
    "lambda": {"type": "number"},
    "mu": {"type": "number", "exclusiveMinimum": 0},
    "omega": {"type": "number", "exclusiveMinimum": 0}
  },
  "required": ["lambda", "mu", "omega"],
  "additionalProperties": false
})";

const char* kMeshSchema = R"({
  "type": "object",
  "properties": {
    "points_per_radius": {"type": "integer", "minimum": 3, "maximum": 200},
    "directions": {"type": "integer", "minimum": 8, "maximum": 4096},
    "self_check_tol": {"type": "number", "exclusiveMinimum": 0}
  },
  "additionalProperties": false
})";

const char* kPositiveList = R"({"type": "array", "minItems": 1, "items": {"type": "number", "exclusiveMinimum": 0}})";
const char* kRange = R"({"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "number", "exclusiveMinimum": 0}})";
const char* kDelta = R"({"type": "number", "exclusiveMinimum": 0, "maximum": 1})";
const char* kPositive = R"({"type": "number", "exclusiveMinimum": 0})";

json sweep_schema(const std::string& e) {
  json p = json::object();
  std::vector<std::string> req;
  const json pos = json::parse(kPositive), list = json::parse(kPositiveList), range = json::parse(kRange),
             delta = json::parse(kDelta);
  const json num = {{"type", "number"}};
  auto integer = [](int lo) { return json{{"type", "integer"}, {"minimum", lo}}; };
  if (e == "sweep-small") {
    p = {{"epsilon", list},
         {"intensity", {{"type", "array"}, {"minItems", 1}, {"items", num}}},
         {"delta", delta},
         {"c_fit", pos}};
    req = {"epsilon"};
  } else if (e == "nonradiating-audit") {
    p = {{"calibration_members", integer(1)}, {"holdout_members", integer(0)}, {"epsilon_range", range},
         {"delta", delta}, {"nullity_tol", pos}};
    req = {"calibration_members", "holdout_members"};
  } else if (e == "cgo-verify") {
    p = {{"probes", integer(1)},
         {"tau_ratios", {{"type", "array"}, {"minItems", 1}, {"items", {{"type", "number"}, {"exclusiveMinimum", 1}}}}},
         {"ppw", {{"type", "number"}, {"minimum", 12}}},
         {"stencil_order", {{"type", "integer"}, {"minimum", 2}, {"maximum", 12}}},
         {"paraboloid",
          {{"type", "object"},
           {"properties",
            {{"K", list},
             {"tau", list},
             {"dims", {{"type", "array"}, {"minItems", 1}, {"items", {{"enum", {2, 3}}}}}},
             {"samples", integer(1000)}}},
           {"required", json::array({"K", "tau"})},
           {"additionalProperties", false}}}};
    req = {"tau_ratios"};
  } else if (e == "identity-check" || e == "kpoint-decay") {
    p = {{"K", {{"type", "array"}, {"minItems", 1}, {"items", {{"type", "number"}, {"minimum", 2.718281828459045}}}}},
         {"zeta", list},
         {"L", pos},
         {"M", {{"type", "number"}, {"minimum", 1}}},
         {"varsigma", pos},
         {"cubic", {{"type", "number"}, {"minimum", 0}}},
         {"panels", integer(1)},
         {"order", integer(2)}};
    req = {"K", "zeta"};
    if (e == "identity-check") {
      p["refinement_panels"] = integer(1);
    } else {
      p["alpha"] = {{"type", "number"}, {"exclusiveMinimum", 0}, {"exclusiveMaximum", 1}};
      p["beta"] = delta;
      p["calibration_K"] = pos;
    }
  } else if (e == "medium-demo") {
    p = {{"calibration",
          {{"type", "object"},
           {"properties", {{"epsilon", list}, {"contrast", list}, {"angle", {{"type", "array"}, {"items", num}}}}},
           {"required", json::array({"epsilon", "contrast"})},
           {"additionalProperties", false}}},
         {"holdout",
          {{"type", "object"},
           {"properties", {{"count", integer(0)}, {"epsilon_range", range}, {"contrast_range", range}}},
           {"required", json::array({"count", "epsilon_range", "contrast_range"})},
           {"additionalProperties", false}}},
         {"delta", delta},
         {"c_fit", pos},
         {"agreement_tol", pos}};
    req = {"calibration", "holdout"};
  } else if (e == "distinguish") {
    p = {{"radius", pos},
         {"separation", pos},
         {"intensities", {{"type", "array"}, {"minItems", 2}, {"maxItems", 2}, {"items", num}}},
         {"delta", delta},
         {"c_fit", pos},
         {"margin_factor", pos}};
    req = {"radius", "separation"};
  }
  return {{"type", "object"}, {"properties", p}, {"required", req}, {"additionalProperties", false}};
}

bool needs_medium(const std::string& e) { return e != "nonradiating-audit"; }

// Draft-07 subset: type, const, enum, properties, required,
// additionalProperties = false, items, min/maxItems, (exclusive) bounds.
void check(const json& v, const json& s, const std::string& path) {
  auto fail = [&](const std::string& what) { throw ConfigError(path + ": " + what); };
  if (s.contains("const") && v != s["const"]) fail("must equal " + s["const"].dump());
  if (s.contains("enum")) {
    bool hit = false;
    for (const auto& e : s["enum"]) hit |= v == e;
    if (!hit) fail("must be one of " + s["enum"].dump());
  }
  if (s.contains("type")) {
    const std::string t = s["type"];
    const bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
                    (t == "string" && v.is_string()) || (t == "boolean" && v.is_boolean()) ||
                    (t == "number" && v.is_number()) || (t == "integer" && v.is_number_integer());
    if (!ok) fail("expected " + t);
  }
  if (v.is_number()) {
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail("must be finite");
    if (s.contains("minimum") && x < s["minimum"].get<double>()) fail("below minimum " + s["minimum"].dump());
    if (s.contains("maximum") && x > s["maximum"].get<double>()) fail("above maximum " + s["maximum"].dump());
    if (s.contains("exclusiveMinimum") && x <= s["exclusiveMinimum"].get<double>())
      fail("must exceed " + s["exclusiveMinimum"].dump());
    if (s.contains("exclusiveMaximum") && x >= s["exclusiveMaximum"].get<double>())
      fail("must be below " + s["exclusiveMaximum"].dump());
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) fail("too few items");
    if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>()) fail("too many items");
    if (s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) check(v[i], s["items"], path + "[" + std::to_string(i) + "]");
  }
  if (v.is_object()) {
    const json props = s.value("properties", json::object());
    for (const auto& r : s.value("required", json::array()))
      if (!v.contains(r.get<std::string>())) fail("missing required key '" + r.get<std::string>() + "'");
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (props.contains(it.key()))
        check(it.value(), props[it.key()], path + "." + it.key());
      else if (s.contains("additionalProperties") && !s["additionalProperties"].get<bool>())
        fail("unknown key '" + it.key() + "'");
    }
  }
}

// ---------------------------------------------------------------- helpers

template <class R>
std::vector<R> parallel_map(std::size_t n, int workers, const std::function<R(std::size_t)>& f) {
  std::vector<std::optional<R>> out(n);
  std::vector<std::exception_ptr> err(n);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto work = [&] {
    for (;;) {
      if (stop) return;
      const std::size_t i = next++;
      if (i >= n) return;
      try {
        out[i] = f(i);
      } catch (...) {
        err[i] = std::current_exception();
        stop = true;
      }
    }
  };
  const int k = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int t = 1; t < k; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  // Every index below a failing one was claimed before it, so the lowest
  // failing index is the same for any worker count.
  for (std::size_t i = 0; i < n; ++i)
    if (err[i]) std::rethrow_exception(err[i]);
  std::vector<R> r;
  r.reserve(n);
  for (auto& o : out) r.push_back(std::move(*o));
  return r;
}

double l2(const std::vector<CVec>& v, const QuadratureMesh& mesh) {
  double s = 0;
  for (std::size_t k = 0; k < mesh.size(); ++k) s += mesh.weights[k] * v[k].squaredNorm();
  return std::sqrt(s);
}

std::vector<CVec> sample(const VectorFunction& f, const std::vector<Vec>& nodes) {
  std::vector<CVec> out;
  out.reserve(nodes.size());
  for (const auto& x : nodes) out.push_back(f(x));
  return out;
}

double pattern_difference(const FarFieldPattern& a, const FarFieldPattern& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a.weights[k] * (a.total(k) - b.total(k)).squaredNorm();
  return std::sqrt(s);
}

LameMedium medium_of(const json& cfg, int dim = 2) {
  const json& m = cfg.at("medium");
  return make_medium(m.at("lambda").get<double>(), m.at("mu").get<double>(), m.at("omega").get<double>(), dim);
}

json mesh_of(const json& cfg) { return cfg.value("mesh", json::object()); }

std::vector<double> doubles(const json& j) { return j.get<std::vector<double>>(); }

Complex cdot(const CVec& a, const CVec& b) { return (a.transpose() * b)(0, 0); }

json report_json(const CriterionReport& r) {
  return {{"name", r.name},       {"lhs", r.lhs},       {"rhs_structural", r.rhs_structural},
          {"ratio", r.ratio},     {"c_fit", r.c_fit},   {"regime", to_string(r.regime)},
          {"inputs_echo", r.inputs_echo}};
}

json calibration_json(const std::string& name, const CalibrationResult& c) {
  return {{"name", name},
          {"constant_fit", c.constant_fit},
          {"violations", c.violations},
          {"sweep_size", c.sweep_size},
          {"fit_method", c.fit_method}};
}

// (x2 - gamma(x1))^2 e1 without a mask, so phi is smooth up to the graph.
BumpProfile graph_square(const CapShape& cap) {
  return [cap](const JetPoint& x) {
    const Jet ax = abs(x[0]);
    const Jet d = x[1] - (cap.K * ax * ax + cap.cubic * ax * ax * ax);
    return JetField{d * d, Jet(0.0)};
  };
}

// Monte-Carlo estimate of the paraboloid integral int_{K|x'|^2 < x_n} e^{xi.x}
// with x_n drawn from the truncated density ~ e^{-t x_n}, t = -Re xi_n.
std::pair<Complex, double> paraboloid_mc(const CVec& xi, int dim, double K, std::int64_t samples,
                                         std::uint64_t seed) {
  const double t = -xi[dim - 1].real();
  const double T = 45.0 / t;
  const double mass = 1.0 - std::exp(-t * T);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const int strata = 64;
  Complex sum = 0.0;
  double sq = 0.0;
  for (std::int64_t k = 0; k < samples; ++k) {
    const double xn = -std::log(1.0 - U(rng) * mass) / t;
    const double pdf = t * std::exp(-t * xn) / mass;
    const double w = std::sqrt(xn / K);
    const double s = (static_cast<double>(k % strata) + U(rng)) / strata;
    Complex phase;
    double slice;
    if (dim == 2) {
      phase = std::exp(xi[0] * (w * (2.0 * s - 1.0)) + xi[1] * xn);
      slice = 2.0 * w;
    } else {
      const double th = 2.0 * kPi * s, r = w * std::sqrt(U(rng));
      phase = std::exp(xi[0] * (r * std::cos(th)) + xi[1] * (r * std::sin(th)) + xi[2] * xn);
      slice = kPi * w * w;
    }
    const Complex f = phase * slice / pdf;
    sum += f;
    sq += std::norm(f);
  }
  const double n = static_cast<double>(samples);
  const Complex mean = sum / n;
  return {mean, std::sqrt(std::max(0.0, sq / n - std::norm(mean)) / n)};
}

// ---------------------------------------------------------------- sweep-small

RunOutput sweep_small(const json& cfg, std::uint64_t seed, int workers) {
  const LameMedium m = medium_of(cfg);
  const json& sw = cfg.at("sweep");
  const json mesh_cfg = mesh_of(cfg);
  const int ppr = mesh_cfg.value("points_per_radius", 10);
  const int ndir = mesh_cfg.value("directions", 64);
  const double tol = mesh_cfg.value("self_check_tol", 1e-6);
  const double delta = sw.value("delta", 0.5);
  const double c_fit = sw.value("c_fit", 1.0);
  const auto eps = doubles(sw.at("epsilon"));
  const auto amps = sw.contains("intensity") ? doubles(sw.at("intensity")) : std::vector<double>{1.0};
  const auto dirs = circle_directions(ndir);

  struct Point {
    double eps, amp, r, phi_l2, ff, noise, margin;
    CriterionReport crit;
  };
  const std::size_t n = eps.size() * amps.size();
  auto pts = parallel_map<Point>(n, workers, [&](std::size_t i) {
    Point p{};
    p.eps = eps[i / amps.size()];
    p.amp = amps[i % amps.size()];
    p.r = 0.5 * p.eps / m.omega;
    DomainGeometry d({DomainComponent::disk(vec2(0, 0), p.r)});
    const double a = p.amp;
    VectorFunction phi = [d, a](const Vec& x) -> CVec {
      CVec v = CVec::Zero(2);
      if (d.contains(x)) v[0] = a;
      return v;
    };
    auto mesh = volume_mesh(d, p.r / ppr);
    auto fine = volume_mesh(d, 0.5 * p.r / ppr);
    SourceProblem sp{d, phi, m, true};
    const auto pat = farfield_of_source(sp, mesh, dirs);
    const auto pat2 = farfield_of_source(sp, fine, dirs);
    p.ff = farfield_norm(pat);
    p.phi_l2 = l2(sample(phi, mesh.nodes), mesh);
    const double refine = pattern_difference(pat, pat2);
    if (refine > tol * std::max(p.ff, 1e-300) && p.ff > 0)
      throw ValidationFailure("sweep-small: mesh self-check failed at epsilon " + format_number(p.eps));
    // Quadrature floor: far field of a non-radiating source on the same mesh,
    // scaled to the same L2 intensity.
    ScalarJetFunction one = [](const JetPoint&) { return Jet(1.0); };
    auto nr = make_nonradiating(d, make_bump(disk_defining(vec2(0, 0), p.r), 2, one, vec2(1, 0).cast<Complex>()), m,
                                mesh);
    const double nr_l2 = l2(nr.phi.values, mesh);
    const double floor =
        farfield_norm(farfield_of_source(SourceProblem{d, nr.phi_fn, m, false}, mesh, dirs)) / nr_l2 * p.phi_l2;
    p.noise = std::max(refine, floor);
    p.margin = p.noise > 0 ? p.ff / p.noise : (p.ff > 0 ? INFINITY : 0.0);
    auto st = intensity_stats(phi, d.components[0], mesh, delta, 256, 200000, derive_seed(seed, i));
    p.crit = small_support_criterion(st.sup_boundary, st.holder, st.linf, delta, p.eps, m.omega, 2, c_fit);
    return p;
  });

  RunOutput out;
  Table t{"points",
          {"epsilon", "intensity", "radius", "phi_l2", "farfield_norm", "quadrature_noise", "margin", "lhs",
           "rhs_structural", "ratio", "regime"},
          {}};
  json rows = json::array();
  for (const auto& p : pts) {
    t.rows.push_back({p.eps, p.amp, p.r, p.phi_l2, p.ff, p.noise, p.margin, p.crit.lhs, p.crit.rhs_structural,
                      p.crit.ratio, to_string(p.crit.regime)});
    rows.push_back({{"epsilon", p.eps}, {"intensity", p.amp}, {"farfield_norm", p.ff}, {"quadrature_noise", p.noise},
                    {"criterion", report_json(p.crit)}});
    if (p.amp != 0.0 && !(p.ff >= 10.0 * p.noise))
      out.failures.push_back("far field below 10x quadrature noise at epsilon " + format_number(p.eps));
    if (p.amp == 0.0 && p.ff != 0.0) out.failures.push_back("zero source radiates");
  }
  out.tables.push_back(std::move(t));
  out.report["points"] = rows;
  return out;
}

// ---------------------------------------------------------------- nonradiating-audit

RunOutput nonradiating_audit(const json& cfg, std::uint64_t seed, int workers) {
  const json& sw = cfg.at("sweep");
  const int ncal = sw.at("calibration_members");
  const int nhold = sw.at("holdout_members");
  const double delta = sw.value("delta", 0.5);
  const double ntol = sw.value("nullity_tol", 1e-6);
  const auto range = sw.contains("epsilon_range") ? doubles(sw.at("epsilon_range")) : std::vector<double>{0.05, 1.0};
  if (range[0] >= range[1]) throw ConfigError("$.sweep.epsilon_range: must be increasing");
  const int ndir = mesh_of(cfg).value("directions", 64);

  struct Point {
    std::string label;
    double omega, lambda, mu, eps, diam, phi_l2, ff;
    IntensityStats st;
    CriterionReport crit;
  };
  auto pts = parallel_map<Point>(ncal + nhold, workers, [&](std::size_t i) {
    auto c = nonradiating_disk_case(seed, static_cast<int>(i), range[0], range[1]);
    Point p{};
    p.label = c.label;
    p.omega = c.medium.omega, p.lambda = c.medium.lambda, p.mu = c.medium.mu;
    p.eps = c.epsilon;
    p.diam = diameter(c.domain);
    p.phi_l2 = l2(c.source.phi.values, c.mesh);
    p.ff = farfield_norm(
        farfield_of_source(SourceProblem{c.domain, c.source.phi_fn, c.medium, false}, c.mesh, circle_directions(ndir)));
    if (!(p.ff < ntol * p.phi_l2))
      throw ValidationFailure("nonradiating-audit: far field not null for member " + std::to_string(i));
    p.st = intensity_stats(c.source.phi_fn, c.domain.components[0], c.mesh, delta, 256, 200000, derive_seed(seed, i));
    p.crit = small_support_criterion(p.st.sup_boundary, p.st.holder, p.st.linf, delta, p.eps, p.omega, 2);
    return p;
  });

  std::vector<std::pair<double, double>> sweep;
  for (int i = 0; i < ncal; ++i) sweep.emplace_back(pts[i].crit.lhs, pts[i].crit.rhs_structural);
  const CalibrationResult cal = calibrate_constant(sweep);
  const double C = cal.constant_fit;
  // For eps <= 1 the bracket of the rhs is at most 3; a ratio that is not
  // asserted is at most 1.1 C, hence d omega >= (lhs / (3.3 C))^{1/delta}.
  const double c_diam = 1.0 / (3.3 * C);

  RunOutput out;
  Table t{"members",
          {"index", "role", "label", "omega", "lambda", "mu", "epsilon", "diameter", "phi_l2", "farfield_norm",
           "nullity", "sup_boundary", "holder", "linf", "lhs", "rhs_structural", "ratio", "regime",
           "diameter_bound", "diameter_ok"},
          {}};
  int asserted = 0, diam_viol = 0;
  for (int i = 0; i < ncal + nhold; ++i) {
    const auto& p = pts[i];
    const Regime g = classify(p.crit.ratio, C);
    const double bound = diameter_lower_bound(p.crit.lhs, delta, p.omega, c_diam);
    const bool hold = i >= ncal;
    if (hold && g == Regime::kRadiatingAsserted) ++asserted;
    if (p.diam < bound) ++diam_viol;
    t.rows.push_back({i, hold ? "holdout" : "calibration", p.label, p.omega, p.lambda, p.mu, p.eps, p.diam, p.phi_l2,
                      p.ff, p.ff / p.phi_l2, p.st.sup_boundary, p.st.holder, p.st.linf, p.crit.lhs,
                      p.crit.rhs_structural, p.crit.ratio, to_string(g), bound, p.diam >= bound});
  }
  CalibrationResult dcal;
  dcal.constant_fit = c_diam;
  dcal.violations = diam_viol;
  dcal.sweep_size = ncal + nhold;
  dcal.fit_method = "1 / (3.3 C_fit) from the small-support calibration";
  out.report["calibration"] = {calibration_json("small_support", cal), calibration_json("diameter_lower_bound", dcal)};
  out.report["holdout"] = {{"size", nhold}, {"radiating_asserted", asserted}};
  if (asserted) out.failures.push_back(std::to_string(asserted) + " holdout members radiating-asserted");
  if (diam_viol) out.failures.push_back(std::to_string(diam_viol) + " diameter bound violations");
  out.tables.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------- cgo-verify

RegularGrid probe_grid(const CgoProbe& p, double ppw, int n) {
  const double h = 2.0 * kPi / std::sqrt(p.kappa_s * p.kappa_s + p.tau * p.tau) / ppw;
  return RegularGrid::cube(Vec::Constant(p.dim, -0.5 * h * (n - 1)), h, n);
}

RunOutput cgo_verify(const json& cfg, std::uint64_t seed, int workers) {
  const json& sw = cfg.at("sweep");
  const LameMedium m2 = medium_of(cfg, 2);
  const int probes = sw.value("probes", 1000);
  const double ppw = sw.value("ppw", 12.0);
  const int order = sw.value("stencil_order", 10);
  if (order % 2) throw ConfigError("$.sweep.stencil_order: must be even");
  RunOutput out;

  // Algebra on random probes, tau / kappa_s in (1, 10], kappa_s in [0.5, 2].
  Table alg{"algebra", {"dim", "probes", "max_abs_xi_xi_plus_ks2", "max_abs_xi_eta"}, {}};
  for (int dim : {2, 3}) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(dim)));
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double e1 = 0, e2 = 0;
    for (int k = 0; k < probes; ++k) {
      const double ks = 0.5 + 1.5 * U(rng);
      const LameMedium m = make_medium(2.0 / (ks * ks), 1.0 / (ks * ks), 1.0, dim);
      Vec d(dim), e(dim);
      for (int a = 0; a < dim; ++a) d[a] = 2 * U(rng) - 1, e[a] = 2 * U(rng) - 1;
      d.normalize();
      for (int pass = 0; pass < 2; ++pass) {
        e -= e.dot(d) * d;
        e.normalize();
      }
      const double tau = ks * (1.0 + 9.0 * U(rng)) * 1.000001;
      const CgoProbe p = make_cgo(d, e, tau, m);
      e1 = std::max(e1, std::abs(cdot(p.xi, p.xi) + ks * ks));
      e2 = std::max(e2, std::abs(cdot(p.xi, p.eta)));
    }
    alg.rows.push_back({dim, probes, e1, e2});
    if (e1 > 1e-12 || e2 > 1e-12) out.failures.push_back("CGO algebra above 1e-12 in dim " + std::to_string(dim));
  }
  out.tables.push_back(std::move(alg));

  // PDE residual at the requested order, and the order-2 slope.
  Table res{"residual", {"tau_over_kappa_s", "ppw", "stencil_order", "relative_residual"}, {}};
  const auto ratios = doubles(sw.at("tau_ratios"));
  for (double r : ratios) {
    const CgoProbe p = make_cgo(vec2(0, -1), vec2(1, 0), r * m2.kappa_s, m2);
    const double v = cgo_residual(p, m2, probe_grid(p, ppw, order + 11), order);
    res.rows.push_back({r, ppw, order, v});
    if (!(v < 1e-6)) out.failures.push_back("CGO residual above 1e-6 at tau/kappa_s " + format_number(r));
  }
  {
    const CgoProbe p = make_cgo(vec2(0.6, -0.8), vec2(0.8, 0.6), ratios[0] * m2.kappa_s, m2);
    const double a = cgo_residual(p, m2, probe_grid(p, 2 * ppw, 9), 2);
    const double b = cgo_residual(p, m2, probe_grid(p, 4 * ppw, 9), 2);
    res.rows.push_back({ratios[0], 2 * ppw, 2, a});
    res.rows.push_back({ratios[0], 4 * ppw, 2, b});
    const double slope = std::log2(a / b);
    out.report["order2_slope"] = slope;
    if (std::abs(slope - 2.0) > 0.1) out.failures.push_back("order-2 slope " + format_number(slope));
  }
  out.tables.push_back(std::move(res));

  // Closed-form paraboloid integral against Monte Carlo.
  if (sw.contains("paraboloid")) {
    const json& pc = sw.at("paraboloid");
    const auto Ks = doubles(pc.at("K")), taus = doubles(pc.at("tau"));
    const auto dims = pc.value("dims", std::vector<int>{2, 3});
    const std::int64_t samples = pc.value("samples", 1000000);
    struct Job {
      int dim;
      double K, tau;
    };
    std::vector<Job> jobs;
    for (int dim : dims)
      for (double K : Ks)
        for (double tau : taus) jobs.push_back({dim, K, tau});
    struct Row {
      Complex closed, mc;
      double se;
    };
    auto rows = parallel_map<Row>(jobs.size(), workers, [&](std::size_t i) {
      const Job& j = jobs[i];
      const LameMedium m = medium_of(cfg, j.dim);
      Vec d = Vec::Zero(j.dim), e = Vec::Zero(j.dim);
      d[j.dim - 1] = -1;
      e[0] = 1;
      const CgoProbe p = make_cgo(d, e, j.tau, m);
      const auto [mc, se] = paraboloid_mc(p.xi, j.dim, j.K, samples, derive_seed(seed, 1000 + i));
      return Row{paraboloid_integral_closed(p.xi, j.K, j.dim), mc, se};
    });
    Table pt{"paraboloid",
             {"dim", "K", "tau", "closed_re", "closed_im", "mc_re", "mc_im", "mc_stderr", "relative_error",
              "stderr_multiple", "pass"},
             {}};
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      const auto& r = rows[i];
      const double err = std::abs(r.mc - r.closed);
      const double rel = err / std::abs(r.closed);
      const double ns = r.se > 0 ? err / r.se : 0.0;
      const bool pass = rel < 0.02 && ns < 3.0;
      pt.rows.push_back({jobs[i].dim, jobs[i].K, jobs[i].tau, r.closed.real(), r.closed.imag(), r.mc.real(),
                         r.mc.imag(), r.se, rel, ns, pass});
      if (!pass)
        out.failures.push_back("paraboloid Monte Carlo disagreement at dim " + std::to_string(jobs[i].dim) + ", K " +
                               format_number(jobs[i].K) + ", tau " + format_number(jobs[i].tau) + ": relative " +
                               format_number(rel) + ", " + format_number(ns) + " stderr");
    }
    out.tables.push_back(std::move(pt));
  }
  return out;
}

// ---------------------------------------------------------------- cap sweeps

struct CapSweep {
  std::vector<double> K, zeta;
  double L, M, varsigma, cubic;
  IdentityQuadrature quad;
};

CapSweep cap_sweep(const json& sw) {
  CapSweep s;
  s.K = doubles(sw.at("K"));
  s.zeta = doubles(sw.at("zeta"));
  s.L = sw.value("L", 1.0);
  s.M = sw.value("M", 4.0);
  s.varsigma = sw.value("varsigma", 1.0);
  s.cubic = sw.value("cubic", 0.0);
  s.quad.panels = sw.value("panels", 8);
  s.quad.order = sw.value("order", 12);
  return s;
}

RunOutput identity_check(const json& cfg, std::uint64_t, int workers) {
  const LameMedium m = medium_of(cfg);
  const json& sw = cfg.at("sweep");
  const CapSweep cs = cap_sweep(sw);
  const int rp = sw.value("refinement_panels", 2);
  struct Job {
    double K, zeta;
  };
  std::vector<Job> jobs;
  for (double K : cs.K)
    for (double z : cs.zeta) jobs.push_back({K, z});
  struct Row {
    double tau;
    IdentityBreakdown r;
    double coarse, fine;
  };
  auto rows = parallel_map<Row>(jobs.size(), workers, [&](std::size_t i) {
    const DomainGeometry cap = make_cap_domain(jobs[i].K, cs.L, cs.M, cs.varsigma, cs.cubic);
    const BumpProfile u = graph_square(cap.components[0].cap);
    Row row;
    row.tau = select_tau(jobs[i].K, jobs[i].zeta);
    const CgoProbe p = make_cgo(vec2(0, -1), vec2(1, 0), row.tau, m);
    row.r = integral_identity_check(cap, u, p, m, cs.quad);
    row.coarse = integral_identity_check(cap, u, p, m, {rp, 3}).residual;
    row.fine = integral_identity_check(cap, u, p, m, {2 * rp, 3}).residual;
    return row;
  });
  RunOutput out;
  Table t{"identity",
          {"K", "zeta", "tau", "lhs_re", "lhs_im", "I1_abs", "I2_abs", "I3_abs", "I4_abs", "residual",
           "relative_residual", "coarse_residual", "refined_residual", "pass"},
          {}};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& w = rows[i];
    const double rel = w.r.residual / std::abs(w.r.lhs);
    const bool pass = rel < 1e-3 && w.fine < w.coarse;
    t.rows.push_back({jobs[i].K, jobs[i].zeta, w.tau, w.r.lhs.real(), w.r.lhs.imag(), std::abs(w.r.I1),
                      std::abs(w.r.I2), std::abs(w.r.I3), std::abs(w.r.I4), w.r.residual, rel, w.coarse, w.fine,
                      pass});
    if (!pass) out.failures.push_back("identity check failed at K " + format_number(jobs[i].K));
  }
  out.tables.push_back(std::move(t));
  return out;
}

RunOutput kpoint_decay(const json& cfg, std::uint64_t seed, int workers) {
  const LameMedium m = medium_of(cfg);
  const json& sw = cfg.at("sweep");
  const CapSweep cs = cap_sweep(sw);
  const double alpha = sw.value("alpha", 0.5);
  const double beta = sw.value("beta", 1.0);
  const double Kcal = sw.value("calibration_K", cs.K.front());
  const double h_over_b = 1.0 / mesh_of(cfg).value("points_per_radius", 10);
  struct Job {
    double K, zeta;
  };
  std::vector<Job> jobs;
  for (double K : cs.K)
    for (double z : cs.zeta) jobs.push_back({K, z});
  if (std::none_of(jobs.begin(), jobs.end(), [&](const Job& j) { return j.K == Kcal; }))
    throw ConfigError("$.sweep.calibration_K: not among the K values");
  struct Row {
    double tau, b, i1, tail, i2, shell, i3, holder, i4, lid;
  };
  auto rows = parallel_map<Row>(jobs.size(), workers, [&](std::size_t i) {
    const double K = jobs[i].K;
    const DomainGeometry cap = make_cap_domain(K, cs.L, cs.M, cs.varsigma, cs.cubic);
    const CapShape& sh = cap.components[0].cap;
    const BumpProfile u = graph_square(sh);
    Row w{};
    w.tau = select_tau(K, jobs[i].zeta);
    w.b = sh.b;
    const CgoProbe p = make_cgo(vec2(0, -1), vec2(1, 0), w.tau, m);
    const IdentityBreakdown r = integral_identity_check(cap, u, p, m, cs.quad);
    const double pe = std::abs(cdot(r.phi0, p.eta));
    const double eta = p.eta.norm();
    const TailHolderBounds th = tail_and_holder_bounds(w.tau, sh.b, K, alpha, 2);
    w.i1 = std::abs(r.I1);
    w.tail = pe * th.tail_bound;
    w.i2 = std::abs(r.I2);
    w.shell = pe * shell_integral(cap.chart->K_minus, cap.chart->K_plus, w.tau, sh.b, 2);
    // Hölder seminorm of phi on the cap, sampled on a mesh.
    const QuadratureMesh mesh = volume_mesh(cap, h_over_b * sh.b);
    SampledVectorField phi;
    phi.nodes = mesh.nodes;
    for (const auto& x : mesh.nodes) phi.values.push_back(lame_residual(u, x, m));
    w.i3 = std::abs(r.I3);
    w.holder = eta * holder_seminorm(phi, alpha, 200000, derive_seed(seed, i)) * th.holder_bound;
    w.i4 = std::abs(r.I4);
    w.lid = boundary_term_bound(w.tau, sh.b, K, beta, 2, c1beta_proxy(cap, u, beta));
    return w;
  });

  RunOutput out;
  Table t{"terms",
          {"K", "zeta", "tau", "b", "I1_abs", "tail_bound", "I2_abs", "shell_bound", "I3_abs", "holder_bound",
           "I4_abs", "lid_bound"},
          {}};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& w = rows[i];
    t.rows.push_back({jobs[i].K, jobs[i].zeta, w.tau, w.b, w.i1, w.tail, w.i2, w.shell, w.i3, w.holder, w.i4, w.lid});
  }
  out.tables.push_back(std::move(t));
  // Fit each constant on the calibration curvature, count violations everywhere.
  json cals = json::array();
  const std::vector<std::pair<std::string, std::function<std::pair<double, double>(const Row&)>>> terms = {
      {"I1_tail", [](const Row& w) { return std::pair{w.i1, w.tail}; }},
      {"I2_shell", [](const Row& w) { return std::pair{w.i2, w.shell}; }},
      {"I3_holder", [](const Row& w) { return std::pair{w.i3, w.holder}; }},
      {"I4_lid", [](const Row& w) { return std::pair{w.i4, w.lid}; }}};
  for (const auto& [name, get] : terms) {
    std::vector<std::pair<double, double>> fit;
    for (std::size_t i = 0; i < jobs.size(); ++i)
      if (jobs[i].K == Kcal) fit.push_back(get(rows[i]));
    CalibrationResult c = calibrate_constant(fit, "max |I| / bound over K = " + format_number(Kcal));
    c.violations = 0;
    c.sweep_size = static_cast<int>(jobs.size());
    for (const auto& w : rows) {
      const auto [v, b] = get(w);
      c.violations += v > c.constant_fit * b * (1 + 1e-12);
    }
    cals.push_back(calibration_json(name, c));
    if (c.violations && name != "I1_tail")
      out.failures.push_back(name + ": " + std::to_string(c.violations) + " violations");
  }
  out.report["calibration"] = cals;
  return out;
}

// ---------------------------------------------------------------- medium-demo

RunOutput medium_demo(const json& cfg, std::uint64_t seed, int workers) {
  const LameMedium m = medium_of(cfg);
  const json& sw = cfg.at("sweep");
  const int ppr = mesh_of(cfg).value("points_per_radius", 10);
  const int ndir = mesh_of(cfg).value("directions", 64);
  const double delta = sw.value("delta", 0.5);
  const double c_fit = sw.value("c_fit", 1.0);
  const double agree = sw.value("agreement_tol", 1e-8);
  struct Job {
    bool hold;
    double eps;
    Complex v;
    double angle;
  };
  std::vector<Job> jobs;
  const json& cal = sw.at("calibration");
  const auto angles = cal.contains("angle") ? doubles(cal.at("angle")) : std::vector<double>{0.3};
  for (double e : doubles(cal.at("epsilon")))
    for (double v : doubles(cal.at("contrast")))
      for (double a : angles) jobs.push_back({false, e, v, a});
  const json& ho = sw.at("holdout");
  const auto er = doubles(ho.at("epsilon_range")), vr = doubles(ho.at("contrast_range"));
  {
    std::mt19937_64 rng(derive_seed(seed, 0));
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int k = 0; k < ho.at("count").get<int>(); ++k) {
      const double e = er[0] + (er[1] - er[0]) * U(rng);
      const double v = vr[0] + (vr[1] - vr[0]) * U(rng);
      const double a = 2 * kPi * U(rng), ph = kPi * U(rng);
      jobs.push_back({true, e, std::polar(v, ph), a});
    }
  }
  struct Row {
    double ru, rt, ff, agreement, ui_norm, sup_vui;
    int terms;
  };
  auto rows = parallel_map<Row>(jobs.size(), workers, [&](std::size_t i) {
    const Job& j = jobs[i];
    const double r = 0.5 * j.eps / m.omega;
    DomainGeometry d({DomainComponent::disk(vec2(0.01, -0.02) * r, r)});
    const Complex vc = j.v;
    MediumScatterer sc{d, [d, vc](const Vec& x) { return d.contains(x) ? vc : Complex(0.0); }, m};
    auto mesh = cartesian_mesh(d, r / ppr);
    IncidentWave w{IncidentWave::Kind::kPressure, vec2(std::cos(j.angle), std::sin(j.angle)), Vec(), CVec()};
    const auto dirs = circle_directions(ndir);
    auto dd = solve_medium(sc, w, mesh, SolveMode::kDirectDense, dirs);
    Row row{};
    const double ui = l2(dd.u_incident.values, mesh);
    row.ru = l2(dd.u_scattered.values, mesh) / ui;
    row.rt = l2(dd.u_total.values, mesh) / ui;
    row.ff = farfield_norm(dd.farfield);
    row.agreement = NAN;
    row.terms = 0;
    if (j.hold) {
      auto ns = solve_medium(sc, w, mesh, SolveMode::kNeumannSeries, dirs);
      double num = 0, den = 0;
      for (std::size_t k = 0; k < mesh.size(); ++k) {
        num += (ns.u_total.values[k] - dd.u_total.values[k]).squaredNorm();
        den += dd.u_total.values[k].squaredNorm();
      }
      row.agreement = std::sqrt(num / den);
      row.terms = ns.series_terms_used;
    }
    double sup = 0;
    for (const auto& x : d.components[0].boundary_samples(128))
      sup = std::max(sup, std::abs(vc) * incident_field(w, m, {x}).values[0].norm());
    row.sup_vui = sup;
    double inf = 0;
    for (const auto& u : dd.u_incident.values) inf = std::max(inf, u.norm());
    row.ui_norm = inf + std::pow(m.omega, -delta) * holder_seminorm(dd.u_incident, delta, 200000, derive_seed(seed, i));
    return row;
  });

  std::vector<ContractionSample> cal_samples;
  double eps_max = 0, v_max = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!jobs[i].hold) cal_samples.push_back({jobs[i].eps, std::abs(jobs[i].v), rows[i].ru, rows[i].rt});
    eps_max = std::max(eps_max, jobs[i].eps);
    v_max = std::max(v_max, std::abs(jobs[i].v));
  }
  const CalibrationResult s = calibrate_s(cal_samples);
  RunOutput out;
  Table t{"configurations",
          {"role", "epsilon", "contrast_re", "contrast_im", "angle", "ratio_u", "ratio_ut", "bound_u", "bound_ut",
           "bounds_hold", "neumann_direct_rel", "series_terms", "farfield_norm", "lhs", "rhs_structural", "ratio",
           "regime"},
          {}};
  int viol = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& j = jobs[i];
    const auto& w = rows[i];
    const auto rep = contraction_report(j.eps, std::abs(j.v), s.constant_fit);
    const bool ok = w.ru <= rep.bound_u && w.rt <= rep.bound_ut;
    if (j.hold && !ok) ++viol;
    if (j.hold && !(w.agreement <= agree))
      out.failures.push_back("Neumann and direct solves disagree at holdout row " + std::to_string(i));
    const auto crit = medium_small_criterion(w.sup_vui, std::abs(j.v), w.ui_norm, delta, j.eps, eps_max, v_max,
                                             s.constant_fit, 2, c_fit);
    t.rows.push_back({j.hold ? "holdout" : "calibration", j.eps, j.v.real(), j.v.imag(), j.angle, w.ru, w.rt,
                      rep.bound_u, rep.bound_ut, ok, j.hold ? json(w.agreement) : json(nullptr), w.terms, w.ff,
                      crit.lhs, crit.rhs_structural, crit.ratio, to_string(crit.regime)});
  }
  if (viol) out.failures.push_back(std::to_string(viol) + " holdout bound violations");
  if (s.violations) out.failures.push_back("s calibration has violations");
  out.report["calibration"] = {calibration_json("s", s)};
  out.report["regime"] = {{"eps_max", eps_max}, {"v_max", v_max}, {"eps_v_max_over_s", eps_max * v_max / s.constant_fit}};
  out.tables.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------- distinguish

RunOutput distinguish(const json& cfg, std::uint64_t, int) {
  const LameMedium m = medium_of(cfg);
  const json& sw = cfg.at("sweep");
  const json mc = mesh_of(cfg);
  const int ppr = mc.value("points_per_radius", 10);
  const int ndir = mc.value("directions", 64);
  const double tol = mc.value("self_check_tol", 1e-6);
  const double r = sw.at("radius").get<double>() / m.omega;
  const double gap = sw.at("separation").get<double>() / m.omega;
  const auto amps = sw.contains("intensities") ? doubles(sw.at("intensities")) : std::vector<double>{1.0, 1.0};
  const double delta = sw.value("delta", 0.5);
  const double c_fit = sw.value("c_fit", 1.0);
  const double factor = sw.value("margin_factor", 10.0);
  const auto dirs = circle_directions(ndir);

  const Vec c1 = vec2(-(0.5 * gap + r), 0.0), c2 = vec2(0.5 * gap + r, 0.0);
  const DomainGeometry both({DomainComponent::disk(c1, r), DomainComponent::disk(c2, r)});
  const SeparationReport sep = component_separation(both);
  auto pattern = [&](int which, double h) {
    const Vec c = which == 0 ? c1 : c2;
    const double a = amps[which];
    DomainGeometry d({DomainComponent::disk(c, r)});
    VectorFunction phi = [d, a](const Vec& x) -> CVec {
      CVec v = CVec::Zero(2);
      if (d.contains(x)) v[0] = a;
      return v;
    };
    return farfield_of_source(SourceProblem{d, phi, m, true}, volume_mesh(d, h), dirs);
  };
  const double h = r / ppr;
  const auto p1 = pattern(0, h), p2 = pattern(1, h);
  const auto q1 = pattern(0, 0.5 * h), q2 = pattern(1, 0.5 * h);
  const double n1 = farfield_norm(p1), n2 = farfield_norm(p2);
  const double diff = pattern_difference(p1, p2);
  const double noise = std::max(pattern_difference(p1, q1), pattern_difference(p2, q2));
  if (noise > tol * std::max(n1, n2)) throw ValidationFailure("distinguish: mesh self-check failed");
  // Machine floor of the pattern evaluation.
  const double floor = 1e-15 * (n1 + n2);
  const double noise_est = std::max(noise, floor);
  const double margin = diff / noise_est;

  // Corollary hypothesis: gap > 2 eps_min / omega, eps_min from the constant-intensity lhs = 1.
  const double eps_min = epsilon_min_solve(1.0, delta, 2, c_fit);
  const bool hypothesis = sep.distance > 2.0 * eps_min / m.omega;

  RunOutput out;
  Table t{"difference",
          {"omega", "radius", "gap", "farfield_norm_1", "farfield_norm_2", "difference_norm", "quadrature_noise",
           "margin", "epsilon_min", "separation_hypothesis"},
          {{m.omega, r, sep.distance, n1, n2, diff, noise_est, margin, eps_min, hypothesis}}};
  out.tables.push_back(std::move(t));
  out.report["margin"] = margin;
  if (!(margin > factor)) out.failures.push_back("far-field difference below the noise margin");
  return out;
}

bool config_class(ErrorCode c) {
  switch (c) {
    case ErrorCode::kStrongConvexityViolated:
    case ErrorCode::kInvalidFrequency:
    case ErrorCode::kInvalidDimension:
    case ErrorCode::kChartInvalid:
    case ErrorCode::kTauTooSmall:
    case ErrorCode::kKTooSmall:
    case ErrorCode::kInvalidExponent:
    case ErrorCode::kExponentOutOfRange:
    case ErrorCode::kNonpositiveArgument:
    case ErrorCode::kInvalidParameter:
    case ErrorCode::kOutOfRegime:
    case ErrorCode::kQuadratureBudgetExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> n = {"sweep-small",    "nonradiating-audit", "cgo-verify", "identity-check",
                                             "kpoint-decay",   "medium-demo",        "distinguish"};
  return n;
}

json config_schema(const std::string& e) {
  if (std::find(experiment_names().begin(), experiment_names().end(), e) == experiment_names().end())
    throw ConfigError("unknown experiment '" + e + "'");
  json props = {{"schema_version", {{"const", kSchemaVersion}}},
                {"experiment", {{"const", e}}},
                {"seed", {{"type", "integer"}, {"minimum", 0}}},
                {"output", {{"type", "string"}}},
                {"medium", json::parse(kMediumSchema)},
                {"mesh", json::parse(kMeshSchema)},
                {"sweep", sweep_schema(e)}};
  json req = {"schema_version", "experiment", "sweep"};
  if (needs_medium(e)) req.push_back("medium");
  return {{"$schema", "http://json-schema.org/draft-07/schema#"},
          {"title", "elasto_cli " + e + " config"},
          {"type", "object"},
          {"properties", props},
          {"required", req},
          {"additionalProperties", false}};
}

void validate_config(const json& config, const std::string& experiment) {
  check(config, config_schema(experiment), "$");
}

RunOutput run_experiment(const std::string& e, const json& cfg, std::uint64_t seed, int workers) {
  validate_config(cfg, e);
  RunOutput out;
  if (e == "sweep-small") out = sweep_small(cfg, seed, workers);
  else if (e == "nonradiating-audit") out = nonradiating_audit(cfg, seed, workers);
  else if (e == "cgo-verify") out = cgo_verify(cfg, seed, workers);
  else if (e == "identity-check") out = identity_check(cfg, seed, workers);
  else if (e == "kpoint-decay") out = kpoint_decay(cfg, seed, workers);
  else if (e == "medium-demo") out = medium_demo(cfg, seed, workers);
  else out = distinguish(cfg, seed, workers);
  json head = {{"artifact", "elasto"}, {"version", kArtifactVersion}, {"experiment", e},
               {"seed", seed},        {"config", cfg}};
  if (out.report.is_object()) head.update(out.report);
  head["validation"] = {{"passed", out.failures.empty()}, {"failures", out.failures}};
  out.report = head;
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_cell(const json& c) {
  if (c.is_null()) return "";
  if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
  if (c.is_number_integer()) return std::to_string(c.get<std::int64_t>());
  if (c.is_number()) return format_number(c.get<double>());
  const std::string s = c.is_string() ? c.get<std::string>() : c.dump();
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_cell(t.columns[i]);
  os << "\r\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
    os << "\r\n";
  }
}

std::vector<std::string> write_outputs(const std::string& prefix, const RunOutput& out) {
  namespace fs = std::filesystem;
  std::vector<std::pair<std::string, std::string>> files;  // temp, final
  std::vector<std::string> done;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& f : files) fs::remove(f.first, ec);
    for (const auto& f : done) fs::remove(f, ec);
  };
  try {
    json report = out.report;
    json names = json::array();
    for (const auto& t : out.tables) names.push_back(fs::path(prefix + "_" + t.name + ".csv").filename().string());
    report["tables"] = names;
    for (const auto& t : out.tables) {
      const std::string fin = prefix + "_" + t.name + ".csv";
      files.emplace_back(fin + ".tmp", fin);
      std::ofstream os(files.back().first, std::ios::binary);
      write_csv(os, t);
      if (!os) throw std::runtime_error("cannot write " + fin);
    }
    files.emplace_back(prefix + ".json.tmp", prefix + ".json");
    {
      std::ofstream os(files.back().first, std::ios::binary);
      os << report.dump(2) << "\n";
      if (!os) throw std::runtime_error("cannot write " + prefix + ".json");
    }
    for (const auto& [tmp, fin] : files) {
      fs::rename(tmp, fin);
      done.push_back(fin);
    }
    return done;
  } catch (...) {
    cleanup();
    throw;
  }
}

int run_command(const std::string& experiment, const std::string& config_path, const std::string& out_prefix,
                int workers, const std::int64_t* seed_override, std::ostream& log) {
  json cfg;
  try {
    std::ifstream is(config_path);
    if (!is) throw ConfigError("cannot open " + config_path);
    try {
      cfg = json::parse(is);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    validate_config(cfg, experiment);
    if (workers < 1) throw ConfigError("--workers must be at least 1");
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return 2;
  }
  const std::uint64_t seed =
      seed_override ? static_cast<std::uint64_t>(*seed_override) : cfg.value("seed", std::uint64_t{0});
  std::string prefix = out_prefix.empty() ? cfg.value("output", std::string()) : out_prefix;
  if (prefix.empty()) prefix = experiment;
  const auto t0 = std::chrono::steady_clock::now();
  RunOutput out;
  try {
    out = run_experiment(experiment, cfg, seed, workers);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationFailure& e) {
    log << "validation failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    log << (config_class(e.code()) ? "config error: " : "numerical error: ") << e.what() << "\n";
    return config_class(e.code()) ? 2 : 3;
  } catch (const json::exception& e) {
    log << "config error: " << e.what() << "\n";
    return 2;
  }
  out.report["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!out.failures.empty()) {
    for (const auto& f : out.failures) log << "validation failure: " << f << "\n";
    return 3;
  }
  try {
    for (const auto& f : write_outputs(prefix, out)) log << "wrote " << f << "\n";
  } catch (const std::exception& e) {
    log << "output error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace elasto::cli
