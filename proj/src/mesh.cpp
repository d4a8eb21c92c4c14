#include "elasto/mesh.hpp"

#include <cmath>
#include <iomanip>

#include "elasto/error.hpp"

namespace elasto {

double QuadratureMesh::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

double BoundaryMesh::total_weight() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

void gauss_legendre(int n, double lo, double hi, std::vector<double>& x, std::vector<double>& w) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "need at least one Gauss node");
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
    }
    const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
    x[i] = mid - half * z;
    x[n - 1 - i] = mid + half * z;
    w[i] = w[n - 1 - i] = half * wi;
  }
}

namespace {

constexpr int kPanelOrder = 8;

// Composite Gauss rule with panels of kPanelOrder points no wider than
// kPanelOrder * h.
void composite_gauss(double lo, double hi, double h, std::vector<double>& x, std::vector<double>& w) {
  x.clear();
  w.clear();
  const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / (kPanelOrder * h))));
  std::vector<double> px, pw;
  for (int p = 0; p < panels; ++p) {
    gauss_legendre(kPanelOrder, lo + (hi - lo) * p / panels, lo + (hi - lo) * (p + 1) / panels, px, pw);
    x.insert(x.end(), px.begin(), px.end());
    w.insert(w.end(), pw.begin(), pw.end());
  }
}

double feature_size(const DomainComponent& c) {
  switch (c.kind) {
    case DomainComponent::Kind::kDisk: return c.radius;
    case DomainComponent::Kind::kEllipse: return std::min(c.semi_a, c.semi_b);
    case DomainComponent::Kind::kCap: return c.cap.b;
  }
  return 0.0;
}

void check_mesh_request(const DomainGeometry& domain, double h) {
  if (domain.dim != 2) throw Error(ErrorCode::kUnsupportedDimension, "meshes are 2D only");
  if (!(h > 0.0)) throw Error(ErrorCode::kInvalidParameter, "h must be positive");
  for (const auto& c : domain.components)
    if (h >= feature_size(c)) throw Error(ErrorCode::kMeshTooCoarse, "h exceeds the feature size");
}

}  // namespace

QuadratureMesh volume_mesh(const DomainGeometry& domain, double h) {
  check_mesh_request(domain, h);
  QuadratureMesh m;
  m.h = h;
  std::vector<double> rx, rw, sx, sw, zx, zw;
  for (std::size_t ci = 0; ci < domain.components.size(); ++ci) {
    const auto& c = domain.components[ci];
    auto push = [&](const Vec& x, double w) {
      m.nodes.push_back(x);
      m.weights.push_back(w);
      m.component.push_back(static_cast<int>(ci));
    };
    if (c.kind == DomainComponent::Kind::kCap) {
      const double a = c.cap.half_width;
      for (int side = 0; side < 2; ++side) {
        // Split at the apex where the cubic term is not smooth.
        composite_gauss(side == 0 ? -a : 0.0, side == 0 ? 0.0 : a, h, sx, sw);
        for (std::size_t i = 0; i < sx.size(); ++i) {
          const double g = c.cap.gamma(std::abs(sx[i]));
          composite_gauss(g, c.cap.b, h, zx, zw);
          for (std::size_t j = 0; j < zx.size(); ++j)
            push(c.center + vec2(sx[i], zx[j]), sw[i] * zw[j]);
        }
      }
      continue;
    }
    const double ax = c.kind == DomainComponent::Kind::kDisk ? c.radius : c.semi_a;
    const double ay = c.kind == DomainComponent::Kind::kDisk ? c.radius : c.semi_b;
    const double big = std::max(ax, ay);
    const int nr = std::max(4, static_cast<int>(std::ceil(big / h)));
    const int nt = std::max(16, static_cast<int>(std::ceil(2.0 * kPi * big / h)));
    gauss_legendre(nr, 0.0, 1.0, rx, rw);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nt; ++j) {
        const double th = 2.0 * kPi * (j + 0.5) / nt;
        push(c.center + vec2(ax * rx[i] * std::cos(th), ay * rx[i] * std::sin(th)),
             ax * ay * rx[i] * rw[i] * 2.0 * kPi / nt);
      }
  }
  return m;
}

QuadratureMesh cartesian_mesh(const DomainGeometry& domain, double h) {
  check_mesh_request(domain, h);
  QuadratureMesh m;
  m.h = h;
  m.cell_size = h;
  for (std::size_t ci = 0; ci < domain.components.size(); ++ci) {
    const auto& c = domain.components[ci];
    double lo[2], hi[2];
    if (c.kind == DomainComponent::Kind::kCap) {
      lo[0] = c.center[0] - c.cap.half_width;
      hi[0] = c.center[0] + c.cap.half_width;
      lo[1] = c.center[1];
      hi[1] = c.center[1] + c.cap.b;
    } else {
      const double ax = c.kind == DomainComponent::Kind::kDisk ? c.radius : c.semi_a;
      const double ay = c.kind == DomainComponent::Kind::kDisk ? c.radius : c.semi_b;
      lo[0] = c.center[0] - ax;
      hi[0] = c.center[0] + ax;
      lo[1] = c.center[1] - ay;
      hi[1] = c.center[1] + ay;
    }
    const long i0 = static_cast<long>(std::floor(lo[0] / h)) - 1;
    const long i1 = static_cast<long>(std::ceil(hi[0] / h)) + 1;
    const long j0 = static_cast<long>(std::floor(lo[1] / h)) - 1;
    const long j1 = static_cast<long>(std::ceil(hi[1] / h)) + 1;
    std::size_t before = m.nodes.size();
    for (long j = j0; j <= j1; ++j)
      for (long i = i0; i <= i1; ++i) {
        const Vec x = vec2((i + 0.5) * h, (j + 0.5) * h);
        if (!c.contains(x)) continue;
        m.nodes.push_back(x);
        m.weights.push_back(h * h);
        m.component.push_back(static_cast<int>(ci));
      }
    if (m.nodes.size() == before)
      throw Error(ErrorCode::kMeshTooCoarse, "component contains no cell centre");
  }
  return m;
}

BoundaryMesh boundary_mesh(const DomainGeometry& domain, double h) {
  check_mesh_request(domain, h);
  BoundaryMesh m;
  std::vector<double> sx, sw;
  for (std::size_t ci = 0; ci < domain.components.size(); ++ci) {
    const auto& c = domain.components[ci];
    auto push = [&](const Vec& x, const Vec& nrm, double w, int part) {
      m.nodes.push_back(x);
      m.normals.push_back(nrm);
      m.weights.push_back(w);
      m.part.push_back(part);
      m.component.push_back(static_cast<int>(ci));
    };
    switch (c.kind) {
      case DomainComponent::Kind::kDisk:
      case DomainComponent::Kind::kEllipse: {
        const double ax = c.kind == DomainComponent::Kind::kDisk ? c.radius : c.semi_a;
        const double ay = c.kind == DomainComponent::Kind::kDisk ? c.radius : c.semi_b;
        const int nt = std::max(16, static_cast<int>(std::ceil(2.0 * kPi * std::max(ax, ay) / h)));
        for (int j = 0; j < nt; ++j) {
          const double th = 2.0 * kPi * j / nt;
          const double speed = std::hypot(ax * std::sin(th), ay * std::cos(th));
          const Vec nrm = vec2(ay * std::cos(th), ax * std::sin(th)) / speed;
          push(c.center + vec2(ax * std::cos(th), ay * std::sin(th)), nrm, speed * 2.0 * kPi / nt,
               BoundaryMesh::kCurved);
        }
        break;
      }
      case DomainComponent::Kind::kCap: {
        const double a = c.cap.half_width;
        for (int side = 0; side < 2; ++side) {
          composite_gauss(side == 0 ? -a : 0.0, side == 0 ? 0.0 : a, h, sx, sw);
          for (std::size_t i = 0; i < sx.size(); ++i) {
            const double gp = c.cap.gamma_prime(sx[i]);
            const double sp = std::sqrt(1.0 + gp * gp);
            push(c.center + vec2(sx[i], c.cap.gamma(std::abs(sx[i]))), vec2(gp, -1.0) / sp, sw[i] * sp,
                 BoundaryMesh::kCurved);
          }
        }
        composite_gauss(-a, a, h, sx, sw);
        for (std::size_t i = 0; i < sx.size(); ++i)
          push(c.center + vec2(sx[i], c.cap.b), vec2(0.0, 1.0), sw[i], BoundaryMesh::kLid);
        break;
      }
    }
  }
  return m;
}

void write_mesh_csv(std::ostream& os, const QuadratureMesh& mesh) {
  os << "x,y,weight\n" << std::setprecision(17);
  for (std::size_t k = 0; k < mesh.size(); ++k)
    os << mesh.nodes[k][0] << ',' << mesh.nodes[k][1] << ',' << mesh.weights[k] << '\n';
}

}  // namespace elasto
