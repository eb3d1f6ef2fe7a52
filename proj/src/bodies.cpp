#include "pettykit/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pettykit/rng.hpp"

namespace pettykit {

double support(const Polytope& K, const Vec& x) { return K.support(x); }

double support(const Segment& s, const Vec& x) {
  return std::max(s.a.dot(x), s.b.dot(x));
}

OriginBody::OriginBody(Polytope P) : poly_(std::move(P)) {
  min_offset_ = poly_.min_offset();
  if (min_offset_ < kGeomEps * poly_.diameter())
    throw OriginNotInterior("origin is not interior to the body");
}

double minkowski_functional(const OriginBody& K, const Vec& x) {
  double g = 0.0;
  for (const auto& f : K.poly().facets())
    g = std::max(g, f.normal.dot(x) / f.offset);
  return g;
}

OriginBody polar(const OriginBody& K, double eps_rel) {
  std::vector<Vec> duals;
  duals.reserve(K.poly().facets().size());
  for (const auto& f : K.poly().facets()) duals.push_back(f.normal / f.offset);
  return OriginBody(convex_hull(duals, K.dim(), eps_rel));
}

Interval polar(const Interval& I) {
  if (!(I.lo < 0.0 && I.hi > 0.0))
    throw OriginNotInterior("interval polar needs lo < 0 < hi");
  return Interval{1.0 / I.lo, 1.0 / I.hi};
}

std::vector<Vec> direction_grid(int dim, int n_dirs) {
  std::vector<Vec> dirs;
  dirs.reserve(static_cast<std::size_t>(std::max(n_dirs, 2)));
  if (dim == 1) {
    dirs.push_back(vec1(1.0));
    dirs.push_back(vec1(-1.0));
    return dirs;
  }
  if (dim == 2) {
    for (int i = 0; i < n_dirs; ++i) {
      const double a = 2.0 * std::numbers::pi * i / n_dirs;
      dirs.push_back(vec2(std::cos(a), std::sin(a)));
    }
    return dirs;
  }
  // Fibonacci sphere
  const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n_dirs; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n_dirs;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = ga * i;
    dirs.push_back(vec3(r * std::cos(a), r * std::sin(a), z));
  }
  return dirs;
}

Polytope p_sum_approx(const OriginBody& K, const OriginBody& L, double p,
                      int n_dirs) {
  if (p < 1.0) throw InvalidP("p-sum needs p >= 1");
  if (K.dim() != L.dim()) throw DimensionMismatch("p_sum: dims differ");
  const int d = K.dim();
  std::vector<Vec> dirs = direction_grid(d, n_dirs);
  for (const auto& f : K.poly().facets()) dirs.push_back(f.normal);
  for (const auto& f : L.poly().facets()) dirs.push_back(f.normal);
  std::vector<Vec> duals;
  duals.reserve(dirs.size());
  for (const auto& u : dirs) {
    const double hk = K.poly().support(u);
    const double hl = L.poly().support(u);
    const double c = std::pow(std::pow(hk, p) + std::pow(hl, p), 1.0 / p);
    duals.push_back(u / c);
  }
  // exact hulls throughout: dropping a near-collinear dual point would drop
  // a halfspace and bias the outer approximation upward
  return polar(OriginBody(convex_hull(duals, d, 0.0)), 0.0).poly();
}

QBody QBody::interval(double lo, double hi) {
  if (lo > 0.0 || hi < 0.0 || !(hi - lo > 0.0))
    throw DegenerateInput("Q interval must contain 0 and have positive length");
  QBody q;
  q.m_ = 1;
  q.verts_ = {vec1(lo), vec1(hi)};
  q.symmetric_ = std::abs(lo + hi) <= 1e-14 * (hi - lo);
  return q;
}

QBody QBody::polytope(const Polytope& P) {
  if (P.dim() < 2) throw DimensionMismatch("use QBody::interval for m = 1");
  if (!P.contains(Vec::Zero(P.dim()), kGeomEps))
    throw OriginNotInterior("Q must contain the origin");
  QBody q;
  q.m_ = P.dim();
  q.verts_ = P.vertices();
  q.symmetric_ = true;
  for (const auto& v : q.verts_) {
    if (!P.contains(-v, 1e-9)) {
      q.symmetric_ = false;
      break;
    }
  }
  return q;
}

double QBody::support(const Vec& w) const {
  double h = -std::numeric_limits<double>::infinity();
  for (const auto& v : verts_) h = std::max(h, v.dot(w));
  return h;
}

// ---- catalog ---------------------------------------------------------

Polytope make_square(double hw) {
  return make_box(vec2(-hw, -hw), vec2(hw, hw));
}

Polytope make_box(const Vec& lo, const Vec& hi) {
  const int d = static_cast<int>(lo.size());
  std::vector<Vec> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = (mask >> i & 1) ? hi[i] : lo[i];
    pts.push_back(std::move(v));
  }
  return convex_hull(pts, d, 0.0);  // corners are exact
}

Polytope make_cube(double hw) {
  return make_box(vec3(-hw, -hw, -hw), vec3(hw, hw, hw));
}

Polytope make_simplex(int dim) {
  std::vector<Vec> pts;
  pts.push_back(Vec::Zero(dim));
  for (int i = 0; i < dim; ++i) {
    Vec e = Vec::Zero(dim);
    e[i] = 1.0;
    pts.push_back(std::move(e));
  }
  return convex_hull(pts, dim);
}

Polytope make_kgon(int k, double R) {
  if (k < 3) throw DegenerateInput("k-gon needs k >= 3");
  std::vector<Vec> pts;
  pts.reserve(k);
  for (int i = 0; i < k; ++i) {
    const double a = 2.0 * std::numbers::pi * i / k;
    pts.push_back(vec2(R * std::cos(a), R * std::sin(a)));
  }
  return convex_hull(pts, 2, 0.0);
}

Polytope make_kgon_area(int k, double area) {
  // area of a regular k-gon with circumradius R: k R^2 sin(2 pi / k) / 2
  const double R =
      std::sqrt(2.0 * area / (k * std::sin(2.0 * std::numbers::pi / k)));
  return make_kgon(k, R);
}

Polytope make_ball_approx(int dim, double vol, int n_points) {
  if (dim == 2) return make_kgon_area(n_points > 0 ? n_points : 256, vol);
  const int n = n_points > 0 ? n_points : 512;
  Polytope raw = convex_hull(direction_grid(3, n), 3, 0.0);
  const double c = std::cbrt(vol / raw.volume());
  return scale_body(raw, c);
}

Polytope make_volume_ball(const Polytope& K, int n_points) {
  return make_ball_approx(K.dim(), K.volume(), n_points);
}

Polytope make_random_polygon(std::uint64_t seed, int k, double rmin,
                             double rmax) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> angles(k);
    for (auto& a : angles) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    std::sort(angles.begin(), angles.end());
    std::vector<Vec> pts;
    pts.reserve(k);
    for (double a : angles) {
      const double r = rng.uniform(rmin, rmax);
      pts.push_back(vec2(r * std::cos(a), r * std::sin(a)));
    }
    try {
      Polytope P = convex_hull(pts, 2);
      if (P.min_offset() > 0.05 * rmin) return P;
    } catch (const DegenerateInput&) {
    }
  }
  throw DegenerateInput("random polygon: no origin-interior instance found");
}

Polytope make_random_polytope3(std::uint64_t seed, int k, double rmin,
                               double rmax) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec> pts;
    pts.reserve(k);
    for (int i = 0; i < k; ++i) {
      Vec g = vec3(rng.gaussian(), rng.gaussian(), rng.gaussian());
      const double r = rng.uniform(rmin, rmax);
      pts.push_back(r * g.normalized());
    }
    try {
      Polytope P = convex_hull(pts, 3);
      if (P.min_offset() > 0.05 * rmin) return P;
    } catch (const DegenerateInput&) {
    }
  }
  throw DegenerateInput("random polytope: no origin-interior instance found");
}

QBody make_q_segment01() {
  QBody q = QBody::interval(0.0, 1.0);
  q.set_name("segment01");
  return q;
}

QBody make_q_segment_sym() {
  QBody q = QBody::interval(-1.0, 1.0);
  q.set_name("segment-sym");
  return q;
}

QBody make_q_square() {
  QBody q = QBody::polytope(make_square(1.0));
  q.set_name("square");
  return q;
}

QBody make_q_neg_simplex(int m) {
  Polytope s = make_simplex(m);
  std::vector<Vec> pts;
  for (const auto& v : s.vertices()) pts.push_back(-v);
  QBody q = QBody::polytope(convex_hull(pts, m));
  q.set_name("neg-simplex");
  return q;
}

}  // namespace pettykit
