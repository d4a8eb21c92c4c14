#pragma once

#include <cstdint>
#include <utility>

#include "elasto/fields.hpp"
#include "elasto/medium.hpp"
#include "elasto/mesh.hpp"

namespace elasto {

/// Traction T_nu u = 2 mu du/dnu + lambda nu div u + mu (rotation term),
/// evaluated from the jet's gradient. The normal must be a unit vector.
CVec traction(const FieldJet& jet, const Vec& normal, const LameMedium& medium);

/// Pressure/shear split u_p = -grad div u / kappa_p^2 and
/// u_s = (grad div u - Laplacian u) / kappa_s^2 (equal to curl curl u /
/// kappa_s^2), by centered differences of the given order. Only nodes with
/// full stencil support are returned.
std::pair<SampledVectorField, SampledVectorField> helmholtz_split(const GridField& u,
                                                                  const LameMedium& medium,
                                                                  int order = 6);

/// Points per shear wavelength on the grid.
double points_per_shear_wavelength(const RegularGrid& grid, const LameMedium& medium);

/// Sampled-pair lower bound of the componentwise Hölder seminorm
///   max_i sup |phi_i(x) - phi_i(y)| / |x - y|^delta.
/// All pairs are visited when there are at most `pair_budget` of them;
/// otherwise `pair_budget` pairs are drawn from a stream seeded by `seed`, so
/// a larger budget always extends a smaller one.
double holder_seminorm(const SampledVectorField& field, double delta, std::int64_t pair_budget,
                       std::uint64_t seed);

struct FieldNorms {
  double l2 = 0.0;
  double linf = 0.0;
};

FieldNorms field_norms(const SampledVectorField& field, const QuadratureMesh& mesh);

}  // namespace elasto
