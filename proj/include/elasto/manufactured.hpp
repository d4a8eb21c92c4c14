#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "elasto/fields.hpp"
#include "elasto/geometry.hpp"
#include "elasto/jet.hpp"
#include "elasto/medium.hpp"
#include "elasto/mesh.hpp"
#include "elasto/potential.hpp"

namespace elasto {

/// A 2D displacement profile evaluated on jets.
using BumpProfile = std::function<JetField(const JetPoint&)>;
using ScalarJetFunction = std::function<Jet(const JetPoint&)>;

/// Defining functions: positive inside, zero on (part of) the boundary.
ScalarJetFunction disk_defining(const Vec& center, double radius);
ScalarJetFunction ellipse_defining(const Vec& center, double semi_a, double semi_b);
/// (x2 - gamma(x1)) (b - x2): vanishes on the graph and on the lid.
ScalarJetFunction cap_defining(const DomainComponent& cap);
/// x2 - gamma(x1): vanishes on the graph part only.
ScalarJetFunction cap_graph_defining(const DomainComponent& cap);

/// u = d^power * g * amplitude, and zero wherever d <= 0. power >= 2 gives
/// u = grad u = 0 where d vanishes; power 3 is C^2 across the zero set.
BumpProfile make_bump(ScalarJetFunction d, int power, ScalarJetFunction g, const CVec& amplitude);

/// One term per component; each factor is supported on its own component.
BumpProfile sum_bumps(std::vector<BumpProfile> parts, std::vector<DomainComponent> supports);

FieldJet bump_jet(const BumpProfile& u, const Vec& x);

/// L u + omega^2 u with (L u)_i = mu sum_j d_jj u_i + (lambda + mu) sum_j d_ij u_j.
CVec lame_residual(const BumpProfile& u, const Vec& x, const LameMedium& medium);

struct NonradiatingSource {
  SampledVectorField phi;
  VectorFunction phi_fn;
  VectorFunction u_exact;
  std::function<CMat(const Vec&)> grad_exact;
};

/// phi = L u + omega^2 u inside the domain and 0 outside. Throws
/// BumpNotVanishing when u or grad u exceeds 1e-8 at boundary samples.
NonradiatingSource make_nonradiating(const DomainGeometry& domain, const BumpProfile& bump,
                                     const LameMedium& medium, const QuadratureMesh& mesh);

/// One member of the disk family used for calibration sweeps.
struct NonradiatingCase {
  DomainGeometry domain;
  LameMedium medium;
  BumpProfile bump;
  NonradiatingSource source;
  QuadratureMesh mesh;
  double epsilon = 0.0;
  std::string label;
};

/// Deterministic member `index` of a family of non-radiating disk sources:
/// omega in [0.5, 4], Lamé constants, epsilon = d(Omega) omega in
/// [eps_lo, eps_hi], centre, profile g in {1, affine, cosine} and a complex
/// amplitude, all drawn from a stream seeded by (seed, index). The bump is
/// d^2 g with d = r^2 - |x - c|^2.
NonradiatingCase nonradiating_disk_case(std::uint64_t seed, int index, double eps_lo = 0.05,
                                        double eps_hi = 1.0);

}  // namespace elasto
