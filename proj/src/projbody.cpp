#include "pettykit/projbody.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace pettykit {

double matrix_image_support(const Mat& x, const QBody& Q, const Vec& u) {
  // max_{q in Q} <x q^t, u> = max_{q in Q} <q, x^t u>; m <= 3, so x^t u
  // lives on the stack (this sits in the innermost Monte Carlo loop)
  const int m = static_cast<int>(x.cols());
  const int n = static_cast<int>(x.rows());
  double w[3];
  for (int j = 0; j < m; ++j) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += x(i, j) * u[i];
    w[j] = s;
  }
  double h = -std::numeric_limits<double>::infinity();
  for (const auto& q : Q.vertices()) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += q[j] * w[j];
    h = std::max(h, s);
  }
  return h;
}

StarBodySpec::StarBodySpec(Polytope K, QBody Q, double p)
    : K_(std::move(K)), Q_(std::move(Q)), p_(p) {
  if (p_ < 1.0) throw InvalidP("star body: p >= 1 required");
  const int nn = K_.dim(), mm = Q_.m();
  if (nn * mm > 6 || (nn == 3 && mm == 3))
    throw DimensionMismatch("star body: nm <= 6 required (n=m=3 rejected)");
  if (p_ > 1.0) {
    // facet formula carries h_K^{1-p}; certify the origin interior
    if (K_.min_offset() < kGeomEps * K_.diameter())
      throw OriginNotInterior("star body with p > 1 needs 0 interior to K");
  }
}

double StarBodySpec::gauge(const Vec& x) const {
  if (x.size() != d()) throw DimensionMismatch("star body gauge: wrong dim");
  Eigen::Map<const Mat> xm(x.data(), n(), m());
  const double vp = lp_mixed_volume_fn(
      K_, [&](const Vec& nf) { return matrix_image_support(xm, Q_, nf); }, p_);
  const double nvp = n() * vp;
  if (nvp < 1e-14)
    throw DegenerateDirection("star body gauge vanished; invalid (K,Q)");
  return std::pow(nvp, 1.0 / p_);
}

double polar_proj_radial(const StarBodySpec& spec, const Vec& theta) {
  return 1.0 / spec.gauge(theta);
}

double proj_body_support(const Polytope& K, const Vec& u) {
  double s = 0.0;
  for (const auto& f : K.facets()) s += std::abs(u.dot(f.normal)) * f.measure;
  return 0.5 * s;
}

namespace {

Polytope proj_body_2d(const Polytope& K) {
  // generators g_F = (len_F/2) n_F; zonogon vertices sit one per cell of the
  // normal fan, whose walls are the directions orthogonal to the generators
  std::vector<Vec> gens;
  for (const auto& f : K.facets()) gens.push_back(0.5 * f.measure * f.normal);
  std::vector<double> walls;
  for (const auto& g : gens) {
    const double a = std::atan2(g[1], g[0]);
    walls.push_back(a + std::numbers::pi / 2.0);
    walls.push_back(a - std::numbers::pi / 2.0);
  }
  const double two_pi = 2.0 * std::numbers::pi;
  for (auto& a : walls) a = std::fmod(std::fmod(a, two_pi) + two_pi, two_pi);
  std::sort(walls.begin(), walls.end());
  std::vector<Vec> verts;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    const double next = (i + 1 < walls.size()) ? walls[i + 1] : walls[0] + two_pi;
    const double mid = 0.5 * (walls[i] + next);
    const Vec u = vec2(std::cos(mid), std::sin(mid));
    Vec v = Vec::Zero(2);
    for (const auto& g : gens) v += (g.dot(u) >= 0.0 ? 1.0 : -1.0) * g;
    verts.push_back(std::move(v));
  }
  return convex_hull(verts, 2, 0.0);
}

Polytope proj_body_3d(const Polytope& K, int n_dirs) {
  std::vector<Vec> gens;
  for (const auto& f : K.facets()) gens.push_back(0.5 * f.measure * f.normal);
  auto cell_vertex = [&](const Vec& u) {
    Vec v = Vec::Zero(3);
    for (const auto& g : gens) v += (g.dot(u) >= 0.0 ? 1.0 : -1.0) * g;
    return v;
  };
  std::vector<Vec> dirs = direction_grid(3, n_dirs);
  // every fan cell touches an intersection of two generator great circles;
  // probing around each intersection covers all cells of the arrangement
  const double delta = 1e-4;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Vec c(3);
      const Vec &a = gens[i], &b = gens[j];
      c << a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0];
      const double cn = c.norm();
      if (cn < 1e-12 * a.norm() * b.norm()) continue;
      c /= cn;
      const Vec ta = a.normalized(), tb = b.normalized();
      for (int sa : {-1, 1})
        for (int sb : {-1, 1})
          for (int sc : {-1, 1}) {
            Vec u = sc * c + delta * (sa * ta + sb * tb);
            dirs.push_back(u.normalized());
          }
    }
  }
  std::vector<Vec> verts;
  verts.reserve(dirs.size());
  for (const auto& u : dirs) verts.push_back(cell_vertex(u));
  return convex_hull(verts, 3, 0.0);
}

}  // namespace

Polytope classical_proj_body(const Polytope& K, int n_dirs) {
  if (K.dim() == 2) return proj_body_2d(K);
  if (K.dim() == 3) return proj_body_3d(K, n_dirs);
  throw DimensionMismatch("projection body: dim 2 or 3");
}

}  // namespace pettykit
