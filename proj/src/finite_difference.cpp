#include "elasto/finite_difference.hpp"

#include "elasto/error.hpp"

namespace elasto::fd {

std::vector<double> centered_weights(int derivative, int order) {
  if (order < 2 || order % 2 != 0 || order > 12)
    throw Error(ErrorCode::kInvalidParameter, "stencil order must be even, 2..12");
  if (derivative < 0 || derivative > 2)
    throw Error(ErrorCode::kInvalidParameter, "derivative must be 0, 1 or 2");
  const int p = order / 2;
  const int n = 2 * p + 1;
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) x[k] = k - p;
  // Fornberg (1988): c[k][m] weight of node k for derivative m at 0.
  const int md = derivative;
  std::vector<std::vector<double>> c(n, std::vector<double>(md + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, md);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int k = 0; k < n; ++k) w[k] = c[k][md];
  return w;
}

Stencil::Stencil(const GridField& field, int order)
    : field_(field), half_(order / 2), w1_(centered_weights(1, order)), w2_(centered_weights(2, order)) {
  if (field.values.size() != field.grid.size())
    throw Error(ErrorCode::kMeshMismatch, "grid field size does not match grid");
}

bool Stencil::interior(const std::array<int, 3>& ijk) const {
  for (int a = 0; a < field_.grid.dim(); ++a)
    if (ijk[a] < half_ || ijk[a] >= field_.grid.counts[a] - half_) return false;
  return true;
}

const CVec& Stencil::at(std::array<int, 3> ijk, int a, int offset) const {
  ijk[a] += offset;
  return field_.values[field_.grid.index(ijk)];
}

Complex Stencil::d1(const std::array<int, 3>& ijk, int comp, int a) const {
  Complex s = 0.0;
  for (int k = -half_; k <= half_; ++k)
    if (k != 0) s += w1_[k + half_] * at(ijk, a, k)[comp];
  return s / field_.grid.h;
}

Complex Stencil::d2(const std::array<int, 3>& ijk, int comp, int a, int b) const {
  const double h = field_.grid.h;
  if (a == b) {
    Complex s = 0.0;
    for (int k = -half_; k <= half_; ++k) s += w2_[k + half_] * at(ijk, a, k)[comp];
    return s / (h * h);
  }
  // Tensor product of two first-derivative stencils.
  Complex s = 0.0;
  for (int k = -half_; k <= half_; ++k) {
    if (k == 0) continue;
    std::array<int, 3> shifted = ijk;
    shifted[a] += k;
    Complex inner = 0.0;
    for (int l = -half_; l <= half_; ++l)
      if (l != 0) inner += w1_[l + half_] * at(shifted, b, l)[comp];
    s += w1_[k + half_] * inner;
  }
  return s / (h * h);
}

CVec Stencil::laplacian(const std::array<int, 3>& ijk) const {
  const int n = field_.grid.dim();
  CVec out = CVec::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) out[i] += d2(ijk, i, a, a);
  return out;
}

CVec Stencil::grad_div(const std::array<int, 3>& ijk) const {
  const int n = field_.grid.dim();
  CVec out = CVec::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += d2(ijk, j, i, j);
  return out;
}

CVec Stencil::lame(const std::array<int, 3>& ijk, const LameMedium& medium) const {
  return medium.mu * laplacian(ijk) + (medium.lambda + medium.mu) * grad_div(ijk);
}

Complex Stencil::divergence(const std::array<int, 3>& ijk) const {
  Complex s = 0.0;
  for (int a = 0; a < field_.grid.dim(); ++a) s += d1(ijk, a, a);
  return s;
}

CVec Stencil::curl(const std::array<int, 3>& ijk) const {
  if (field_.grid.dim() == 2) {
    CVec c(1);
    c[0] = d1(ijk, 1, 0) - d1(ijk, 0, 1);
    return c;
  }
  CVec c(3);
  c[0] = d1(ijk, 2, 1) - d1(ijk, 1, 2);
  c[1] = d1(ijk, 0, 2) - d1(ijk, 2, 0);
  c[2] = d1(ijk, 1, 0) - d1(ijk, 0, 1);
  return c;
}

}  // namespace elasto::fd
