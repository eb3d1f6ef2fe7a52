#include "pettykit/mixed_volume.hpp"

#include <cmath>
#include <limits>

#include "pettykit/rng.hpp"

namespace pettykit {

SurfaceAreaMeasure SurfaceAreaMeasure::of(const Polytope& P) {
  SurfaceAreaMeasure m;
  m.atoms.reserve(P.facets().size());
  for (const auto& f : P.facets()) m.atoms.push_back({f.normal, f.measure});
  return m;
}

double SurfaceAreaMeasure::total() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

Vec SurfaceAreaMeasure::resultant() const {
  Vec r = Vec::Zero(atoms.empty() ? 0 : atoms.front().normal.size());
  for (const auto& a : atoms) r += a.weight * a.normal;
  return r;
}

double mixed_volume_first(const Polytope& K, const Polytope& L) {
  if (K.dim() != L.dim()) throw DimensionMismatch("mixed volume: dims differ");
  return mixed_volume_first_fn(K, [&](const Vec& u) { return L.support(u); });
}

double mixed_volume_first(const Polytope& K, const Segment& L) {
  return mixed_volume_first_fn(K, [&](const Vec& u) { return support(L, u); });
}

double lp_mixed_volume(const OriginBody& K, const Polytope& L, double p) {
  return lp_mixed_volume_fn(
      K.poly(), [&](const Vec& u) { return L.support(u); }, p);
}

double lp_surface_area(const OriginBody& K, double p) {
  return lp_mixed_volume_fn(
      K.poly(), [](const Vec&) { return 1.0; }, p);
}

double lp_mixed_volume_fd_oracle(const OriginBody& K, const OriginBody& L,
                                 double p, double eps, int n_dirs) {
  if (p < 1.0) throw InvalidP("fd oracle needs p >= 1");
  if (eps < 1e-6 || eps > 1e-2) throw InvalidEps("fd oracle: eps in [1e-6, 1e-2]");
  // e.L in the Firey sense scales the support function by eps^{1/p}
  const OriginBody Ls(scale_body(L.poly(), std::pow(eps, 1.0 / p)));
  const double v1 = p_sum_approx(K, Ls, p, n_dirs).volume();
  const int n = K.dim();
  return (p / n) * (v1 - K.poly().volume()) / eps;
}

double mixed_volume_3(const Polytope& A, const Polytope& B, const Polytope& C) {
  if (A.dim() != 3 || B.dim() != 3 || C.dim() != 3)
    throw DimensionMismatch("mixed_volume_3 wants three 3-d bodies");
  const double vABC = minkowski_sum(minkowski_sum(A, B), C).volume();
  const double vAB = minkowski_sum(A, B).volume();
  const double vAC = minkowski_sum(A, C).volume();
  const double vBC = minkowski_sum(B, C).volume();
  return (vABC - vAB - vAC - vBC + A.volume() + B.volume() + C.volume()) / 6.0;
}

double midpoint_convexity_violation(std::span<const double> vals) {
  const int n = static_cast<int>(vals.size());
  double worst = -std::numeric_limits<double>::infinity();
  for (int c = 1; c + 1 < n; ++c) {
    const int rmax = std::min(c, n - 1 - c);
    for (int r = 1; r <= rmax; ++r)
      worst = std::max(worst, vals[c] - 0.5 * (vals[c - r] + vals[c + r]));
  }
  return worst;
}

Polytope LinearParameterSystem::at(double t) const {
  std::vector<Vec> pts;
  pts.reserve(generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    pts.push_back(generators[j] + speeds[j] * t * u);
  return convex_hull(pts, static_cast<int>(u.size()), 0.0);
}

LinearParameterSystem make_random_lps(int dim, std::uint64_t seed, int k,
                                      bool keep_origin) {
  Rng rng(seed);
  LinearParameterSystem s;
  Vec u(dim);
  for (int i = 0; i < dim; ++i) u[i] = rng.gaussian();
  s.u = unit(u);
  // speed-zero anchor simplex keeps the family full-dimensional (and, when
  // requested, keeps the origin interior) for every t
  const double a = keep_origin ? 1.0 : 0.3;
  if (dim == 2) {
    for (auto& p : {vec2(a, 0), vec2(-a, a), vec2(-a, -a)}) {
      s.generators.push_back(p);
      s.speeds.push_back(0.0);
    }
  } else {
    for (auto& p : {vec3(a, 0, 0), vec3(-a, a, 0), vec3(-a, -a, a),
                    vec3(-a, 0, -a), vec3(a, a, a)}) {
      s.generators.push_back(p);
      s.speeds.push_back(0.0);
    }
  }
  for (int j = 0; j < k; ++j) {
    Vec g(dim);
    for (int i = 0; i < dim; ++i) g[i] = rng.uniform(-1.0, 1.0);
    s.generators.push_back(g);
    s.speeds.push_back(rng.uniform(-0.5, 0.5));
  }
  return s;
}

}  // namespace pettykit
