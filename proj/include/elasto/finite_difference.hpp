#pragma once

#include <vector>

#include "elasto/fields.hpp"
#include "elasto/medium.hpp"

namespace elasto::fd {

/// Centered weights on offsets -p..p for the given derivative (1 or 2) and
/// even accuracy order 2p, from Fornberg's recursion.
std::vector<double> centered_weights(int derivative, int order);

/// Applies the centered difference operators at grid node `ijk`; the caller
/// guarantees `order / 2` nodes of clearance in every direction.
class Stencil {
 public:
  Stencil(const GridField& field, int order);

  int half_width() const { return half_; }
  bool interior(const std::array<int, 3>& ijk) const;

  /// d u_comp / d x_a
  Complex d1(const std::array<int, 3>& ijk, int comp, int a) const;
  /// d^2 u_comp / (d x_a d x_b)
  Complex d2(const std::array<int, 3>& ijk, int comp, int a, int b) const;

  CVec laplacian(const std::array<int, 3>& ijk) const;
  CVec grad_div(const std::array<int, 3>& ijk) const;
  /// mu * Laplacian + (lambda + mu) * grad div
  CVec lame(const std::array<int, 3>& ijk, const LameMedium& medium) const;
  Complex divergence(const std::array<int, 3>& ijk) const;
  /// Scalar curl in 2D, vector curl in 3D.
  CVec curl(const std::array<int, 3>& ijk) const;

 private:
  const CVec& at(std::array<int, 3> ijk, int a, int offset) const;

  const GridField& field_;
  int half_;
  std::vector<double> w1_;
  std::vector<double> w2_;
};

}  // namespace elasto::fd
