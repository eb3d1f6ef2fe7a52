#include "pettykit/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "pettykit/bodies.hpp"
#include "pettykit/rng.hpp"

namespace pettykit {

namespace {

// 2-d fibers from the two monotone boundary chains; O(k log k), exact.
std::vector<ShadowSystem::Fiber> fibers_2d(const Polytope& K, const Vec& u) {
  const Vec w = vec2(-u[1], u[0]);
  const auto& vs = K.vertices();
  const int k = static_cast<int>(vs.size());
  std::vector<std::pair<double, double>> ys(k);  // (y, s) per vertex
  int imin = 0, imax = 0;
  for (int i = 0; i < k; ++i) {
    ys[i] = {w.dot(vs[i]), u.dot(vs[i])};
    if (ys[i] < ys[imin]) imin = i;
    if (ys[i] > ys[imax]) imax = i;
  }
  auto walk = [&](int from, int to) {
    std::vector<std::pair<double, double>> chain;
    for (int i = from;; i = (i + 1) % k) {
      chain.push_back(ys[i]);
      if (i == to) break;
    }
    return chain;
  };
  std::vector<std::pair<double, double>> c1 = walk(imin, imax);
  std::vector<std::pair<double, double>> c2 = walk(imax, imin);
  std::reverse(c2.begin(), c2.end());  // both ascending in y now
  double s1 = 0, s2 = 0;
  for (auto& p : c1) s1 += p.second;
  for (auto& p : c2) s2 += p.second;
  auto& lower = (s1 / c1.size() <= s2 / c2.size()) ? c1 : c2;
  auto& upper = (s1 / c1.size() <= s2 / c2.size()) ? c2 : c1;

  std::vector<double> feet(k);
  for (int i = 0; i < k; ++i) feet[i] = ys[i].first;
  std::sort(feet.begin(), feet.end());
  const double ytol = 1e-12 * std::max(K.scale(), 1e-30);
  feet.erase(std::unique(feet.begin(), feet.end(),
                         [&](double a, double b) { return b - a <= ytol; }),
             feet.end());

  auto interp = [&](const std::vector<std::pair<double, double>>& chain,
                    double y, std::size_t& hint) {
    while (hint + 1 < chain.size() && chain[hint + 1].first < y) ++hint;
    if (hint + 1 >= chain.size()) return chain.back().second;
    const auto& a = chain[hint];
    const auto& b = chain[hint + 1];
    if (b.first <= a.first) return std::max(a.second, b.second);
    const double t = std::clamp((y - a.first) / (b.first - a.first), 0.0, 1.0);
    return a.second + t * (b.second - a.second);
  };

  std::vector<ShadowSystem::Fiber> out;
  out.reserve(feet.size());
  std::size_t hlo = 0, hhi = 0;
  for (double y : feet) {
    ShadowSystem::Fiber f;
    f.foot = y * w;
    f.lo = interp(lower, y, hlo);
    f.hi = interp(upper, y, hhi);
    if (f.lo > f.hi) std::swap(f.lo, f.hi);
    out.push_back(std::move(f));
  }
  return out;
}

// fiber endpoints at one foot by the facet linear program in s
std::pair<double, double> fiber_lp(const Polytope& K, const Vec& u,
                                   const Vec& foot) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (const auto& f : K.facets()) {
    const double un = f.normal.dot(u);
    const double rhs = f.offset - f.normal.dot(foot);
    if (un > 1e-12)
      hi = std::min(hi, rhs / un);
    else if (un < -1e-12)
      lo = std::max(lo, rhs / un);
  }
  if (hi < lo) {  // foot marginally outside the projection: collapse
    const double mid = 0.5 * (lo + hi);
    lo = hi = mid;
  }
  return {lo, hi};
}

// 3-d fibers. The chord length b - a is piecewise linear on the OVERLAY of
// the projected upper and lower edge graphs, so the breakpoints include
// crossings of projected edges, not just vertex projections.
std::vector<ShadowSystem::Fiber> fibers_3d(const Polytope& K, const Vec& u) {
  const auto basis = orthobasis_perp(u);
  const double sc = std::max(K.scale(), 1e-30);
  const double tol = 1e-12 * sc;
  auto to2d = [&](const Vec& v) {
    return vec2(basis[0].dot(v), basis[1].dot(v));
  };

  std::vector<Vec> feet2;
  std::vector<std::pair<double, double>> vrange;  // <v,u> range at vertex feet
  for (const auto& v : K.vertices()) {
    const Vec y = to2d(v);
    const double s = u.dot(v);
    bool found = false;
    for (std::size_t i = 0; i < feet2.size(); ++i) {
      if ((feet2[i] - y).norm() <= 4.0 * tol) {
        vrange[i].first = std::min(vrange[i].first, s);
        vrange[i].second = std::max(vrange[i].second, s);
        found = true;
        break;
      }
    }
    if (!found) {
      feet2.push_back(y);
      vrange.push_back({s, s});
    }
  }
  const std::size_t n_vertex_feet = feet2.size();

  // projected boundary edges (triangle edges; facet diagonals are harmless)
  std::vector<std::array<Vec, 2>> segs;
  for (const auto& t : K.boundary_triangles()) {
    for (int e = 0; e < 3; ++e) {
      Vec a = to2d(t[e]), b = to2d(t[(e + 1) % 3]);
      if ((a - b).norm() <= tol) continue;
      bool dup = false;
      for (const auto& s : segs) {
        if (((s[0] - a).norm() <= tol && (s[1] - b).norm() <= tol) ||
            ((s[0] - b).norm() <= tol && (s[1] - a).norm() <= tol)) {
          dup = true;
          break;
        }
      }
      if (!dup) segs.push_back({a, b});
    }
  }
  auto cross2 = [](const Vec& a, const Vec& b) {
    return a[0] * b[1] - a[1] * b[0];
  };
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Vec d1 = segs[i][1] - segs[i][0];
      const Vec d2 = segs[j][1] - segs[j][0];
      const double den = cross2(d1, d2);
      if (std::abs(den) <= 1e-14 * sc * sc) continue;
      const Vec r = segs[j][0] - segs[i][0];
      const double t1 = cross2(r, d2) / den;
      const double t2 = cross2(r, d1) / den;
      if (t1 < -1e-12 || t1 > 1.0 + 1e-12 || t2 < -1e-12 || t2 > 1.0 + 1e-12)
        continue;
      const Vec y = segs[i][0] + t1 * d1;
      bool found = false;
      for (const auto& f : feet2)
        if ((f - y).norm() <= 4.0 * tol) {
          found = true;
          break;
        }
      if (!found) feet2.push_back(y);
    }
  }

  std::vector<ShadowSystem::Fiber> out;
  out.reserve(feet2.size());
  for (std::size_t i = 0; i < feet2.size(); ++i) {
    const Vec foot = feet2[i][0] * basis[0] + feet2[i][1] * basis[1];
    auto [lo, hi] = fiber_lp(K, u, foot);
    if (i < n_vertex_feet) {  // vertices on the fiber are certainly in it
      lo = std::min(lo, vrange[i].first);
      hi = std::max(hi, vrange[i].second);
    }
    out.push_back({foot, lo, hi});
  }
  return out;
}

}  // namespace

ShadowSystem::ShadowSystem(Polytope K, const Vec& u)
    : base_(std::move(K)), u_(unit(u)) {
  if (u_.size() != base_.dim())
    throw DimensionMismatch("shadow system: direction dim");
  fibers_ = (base_.dim() == 2) ? fibers_2d(base_, u_) : fibers_3d(base_, u_);
}

Polytope ShadowSystem::at(double t) const {
  if (std::abs(t) > 1.0 + 1e-12)
    throw OutOfRange("shadow system parameter outside [-1,1]");
  std::vector<Vec> pts;
  pts.reserve(2 * fibers_.size());
  const double cp = 0.5 * (1.0 + t), cm = 0.5 * (1.0 - t);
  for (const auto& f : fibers_) {
    const double lo = cp * f.lo - cm * f.hi;
    const double hi = cp * f.hi - cm * f.lo;
    pts.push_back(f.foot + lo * u_);
    pts.push_back(f.foot + hi * u_);
  }
  return convex_hull(pts, base_.dim(), 0.0);
}

Polytope steiner(const Polytope& K, const Vec& u) {
  return ShadowSystem(K, u).at(0.0);
}

std::vector<FlowStep> symmetrization_flow(const Polytope& K, int n_steps,
                                          std::uint64_t seed,
                                          double prune_budget_rel,
                                          double stop_dist,
                                          bool keep_bodies) {
  if (n_steps < 1) throw OutOfRange("flow needs n_steps >= 1");
  const Polytope ball = make_volume_ball(K);
  Rng rng(seed);
  Polytope cur = K;
  const double budget_total = prune_budget_rel * K.volume();
  double used = 0.0;
  std::vector<FlowStep> steps;
  steps.reserve(n_steps);
  for (int j = 0; j < n_steps; ++j) {
    Vec u;
    if (K.dim() == 2) {
      const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
      u = vec2(std::cos(a), std::sin(a));
    } else {
      u = vec3(rng.gaussian(), rng.gaussian(), rng.gaussian()).normalized();
    }
    cur = steiner(cur, u);
    if (K.dim() == 2 && budget_total > 0.0) {
      // spend the prune budget on a ~60-step schedule so the vertex count
      // plateaus even if the flow runs long
      const double allowed =
          budget_total * std::min(1.0, (j + 1) / 60.0) - used;
      if (allowed > 0.0) {
        auto [simplified, removed] = simplify_polygon(cur, allowed);
        cur = std::move(simplified);
        used += removed;
      }
    }
    steps.push_back({hausdorff_distance(cur, ball), cur.volume(),
                     static_cast<int>(cur.vertices().size()),
                     keep_bodies ? std::optional<Polytope>(cur) : std::nullopt});
    if (stop_dist > 0.0 && steps.back().dist_to_ball <= stop_dist) break;
  }
  return steps;
}

}  // namespace pettykit
