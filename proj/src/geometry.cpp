#include "pettykit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace pettykit {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

double point_scale(const std::vector<Vec>& pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
  return std::max(s, 1e-30);
}

std::vector<Vec> sorted_dedup(const std::vector<Vec>& points, double scale) {
  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  const double tol = 1e-12 * scale;
  const double tol2 = tol * tol;
  std::vector<Vec> out;
  for (const auto& p : pts) {
    if (!out.empty() && (out.back() - p).squaredNorm() <= tol2) continue;
    out.push_back(p);
  }
  return out;
}

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Polytope hull_1d(const std::vector<Vec>& pts, double eps_rel) {
  double lo = pts.front()[0], hi = lo;
  for (const auto& p : pts) {
    lo = std::min(lo, p[0]);
    hi = std::max(hi, p[0]);
  }
  const double scale = std::max({std::abs(lo), std::abs(hi), 1e-30});
  if (hi - lo <= std::max(eps_rel, 1e-13) * scale)
    throw DegenerateInput("1-d hull: all points coincide");
  std::vector<Vec> verts = {vec1(lo), vec1(hi)};
  std::vector<Facet> fs(2);
  fs[0].normal = vec1(1.0);
  fs[0].measure = 1.0;
  fs[0].offset = hi;
  fs[1].normal = vec1(-1.0);
  fs[1].measure = 1.0;
  fs[1].offset = -lo;
  return Polytope::from_parts(1, std::move(verts), std::move(fs), hi - lo);
}

Polytope hull_2d(const std::vector<Vec>& points, double eps_rel) {
  const double scale = point_scale(points);
  std::vector<Vec> pts = sorted_dedup(points, scale);
  if (pts.size() < 3) throw DegenerateInput("2-d hull: fewer than 3 distinct points");
  const double eps_area = eps_rel * scale * scale;

  // monotone chain; strict left turns kept
  auto build = [&](bool upper) {
    std::vector<Vec> chain;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const Vec& p = upper ? pts[pts.size() - 1 - k] : pts[k];
      while (chain.size() >= 2 &&
             cross2(chain[chain.size() - 2], chain.back(), p) <= eps_area)
        chain.pop_back();
      chain.push_back(p);
    }
    return chain;
  };
  std::vector<Vec> lower = build(false), upper = build(true);
  std::vector<Vec> verts;
  verts.insert(verts.end(), lower.begin(), lower.end() - 1);
  verts.insert(verts.end(), upper.begin(), upper.end() - 1);
  if (verts.size() < 3) throw DegenerateInput("2-d hull: points are collinear");

  std::vector<Facet> fs;
  fs.reserve(verts.size());
  double vol = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vec& a = verts[i];
    const Vec& b = verts[(i + 1) % verts.size()];
    Vec e = b - a;
    const double len = e.norm();
    Facet f;
    f.normal = vec2(e[1] / len, -e[0] / len);  // outward for CCW order
    f.measure = len;
    f.offset = f.normal.dot(a);
    vol += f.offset * f.measure;
    fs.push_back(std::move(f));
  }
  vol /= 2.0;
  if (!(vol > 0.0)) throw DegenerateInput("2-d hull: nonpositive area");
  return Polytope::from_parts(2, std::move(verts), std::move(fs), vol);
}

struct Tri {
  int a, b, c;
  Vec n;  // unit outward
  double off = 0.0;
  double area = 0.0;
  bool alive = true;
};

Tri make_tri(const std::vector<Vec>& pts, int a, int b, int c,
             const Vec& interior) {
  Tri t;
  t.a = a;
  t.b = b;
  t.c = c;
  Vec ab = pts[b] - pts[a], ac = pts[c] - pts[a];
  Vec n(3);
  n << ab[1] * ac[2] - ab[2] * ac[1], ab[2] * ac[0] - ab[0] * ac[2],
      ab[0] * ac[1] - ab[1] * ac[0];
  const double nn = n.norm();
  t.area = 0.5 * nn;
  if (nn > 0) n /= nn;
  if (n.dot(interior) > n.dot(pts[a])) {
    std::swap(t.b, t.c);
    n = -n;
  }
  t.n = n;
  t.off = n.dot(pts[a]);
  return t;
}

// One incremental pass. Visibility is grown by flood fill from the face a
// point violates most, so the horizon of the deleted region is a closed
// cycle and the output stays watertight; returns false when the resulting
// soup still fails the closedness check (caller retries with a larger eps).
bool hull_3d_pass(const std::vector<Vec>& pts, double scale, double eps_vis,
                  int i0, int i1, int i2, int i3, std::vector<Tri>& out) {
  const Vec interior = (pts[i0] + pts[i1] + pts[i2] + pts[i3]) / 4.0;
  std::vector<Tri> tris;

  // live edge -> incident faces, maintained across insertions
  auto edge_key = [](int a, int b) {
    return std::pair<int, int>(std::min(a, b), std::max(a, b));
  };
  std::map<std::pair<int, int>, std::array<int, 2>> edge_faces;
  auto face_edges = [](const Tri& tr) {
    return std::array<std::pair<int, int>, 3>{
        std::pair<int, int>{tr.a, tr.b}, {tr.b, tr.c}, {tr.c, tr.a}};
  };
  auto add_face = [&](Tri t) {
    const int id = static_cast<int>(tris.size());
    for (auto& ed : face_edges(t)) {
      auto [it, fresh] =
          edge_faces.try_emplace(edge_key(ed.first, ed.second),
                                 std::array<int, 2>{id, -1});
      if (!fresh) (it->second[0] < 0 ? it->second[0] : it->second[1]) = id;
    }
    tris.push_back(std::move(t));
  };
  auto remove_face = [&](int id) {
    tris[id].alive = false;
    for (auto& ed : face_edges(tris[id])) {
      auto it = edge_faces.find(edge_key(ed.first, ed.second));
      if (it == edge_faces.end()) continue;
      if (it->second[0] == id) it->second[0] = -1;
      if (it->second[1] == id) it->second[1] = -1;
      if (it->second[0] < 0 && it->second[1] < 0) edge_faces.erase(it);
    }
  };
  add_face(make_tri(pts, i0, i1, i2, interior));
  add_face(make_tri(pts, i0, i1, i3, interior));
  add_face(make_tri(pts, i0, i2, i3, interior));
  add_face(make_tri(pts, i1, i2, i3, interior));

  for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;

    int start = -1;
    double worst = eps_vis;
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
      if (!tris[t].alive) continue;
      const double v = tris[t].n.dot(pts[p]) - tris[t].off;
      if (v > worst) {
        worst = v;
        start = t;
      }
    }
    if (start < 0) continue;  // inside or on the surface

    // flood fill the visible region from the most-violated face
    std::vector<int> stack = {start}, visible;
    std::set<int> seen = {start};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      visible.push_back(t);
      for (auto& ed : face_edges(tris[t])) {
        const auto nbrs = edge_faces.at(edge_key(ed.first, ed.second));
        const int other = (nbrs[0] == t) ? nbrs[1] : nbrs[0];
        if (other < 0 || seen.count(other)) continue;
        if (tris[other].n.dot(pts[p]) > tris[other].off + eps_vis) {
          seen.insert(other);
          stack.push_back(other);
        }
      }
    }

    std::vector<std::pair<int, int>> horizon;  // directed, from visible side
    for (int t : visible) {
      for (auto& ed : face_edges(tris[t])) {
        const auto nbrs = edge_faces.at(edge_key(ed.first, ed.second));
        const int other = (nbrs[0] == t) ? nbrs[1] : nbrs[0];
        if (other < 0 || !seen.count(other)) horizon.push_back(ed);
      }
    }
    for (int t : visible) remove_face(t);
    for (auto& ed : horizon)
      add_face(make_tri(pts, ed.first, ed.second, p, interior));
  }

  out.clear();
  Vec closed = Vec::Zero(3);
  double area = 0.0;
  for (auto& t : tris) {
    if (!t.alive) continue;
    out.push_back(t);
    closed += t.area * t.n;
    area += t.area;
  }
  return out.size() >= 4 && closed.norm() <= 1e-9 * std::max(area, 1e-30);
}

Polytope hull_3d(const std::vector<Vec>& points, double eps_rel) {
  const double scale = point_scale(points);
  std::vector<Vec> pts = sorted_dedup(points, scale);
  if (pts.size() < 4) throw DegenerateInput("3-d hull: fewer than 4 distinct points");
  const double dtol = 1e-9 * scale;

  // initial simplex by spread
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  double best = -1.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double d = (pts[i] - pts[i0]).norm();
    if (d > best) {
      best = d;
      i1 = static_cast<int>(i);
    }
  }
  if (best <= dtol) throw DegenerateInput("3-d hull: all points coincide");
  Vec d01 = (pts[i1] - pts[i0]).normalized();
  best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec r = pts[i] - pts[i0];
    const double d = (r - d01.dot(r) * d01).norm();
    if (d > best) {
      best = d;
      i2 = static_cast<int>(i);
    }
  }
  if (best <= dtol) throw DegenerateInput("3-d hull: points are collinear");
  Vec v1 = pts[i1] - pts[i0], v2 = pts[i2] - pts[i0];
  Vec nrm(3);
  nrm << v1[1] * v2[2] - v1[2] * v2[1], v1[2] * v2[0] - v1[0] * v2[2],
      v1[0] * v2[1] - v1[1] * v2[0];
  nrm.normalize();
  best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double d = std::abs(nrm.dot(pts[i] - pts[i0]));
    if (d > best) {
      best = d;
      i3 = static_cast<int>(i);
    }
  }
  if (best <= dtol) throw DegenerateInput("3-d hull: points are coplanar");

  std::vector<Tri> live;
  double eps_vis = std::max(eps_rel, 1e-12) * scale;
  bool ok = false;
  for (int attempt = 0; attempt < 4 && !ok; ++attempt, eps_vis *= 64.0)
    ok = hull_3d_pass(pts, scale, eps_vis, i0, i1, i2, i3, live);
  if (!ok) throw DegenerateInput("3-d hull: could not close the surface");

  // merge coplanar triangles into facets
  struct Plane {
    Vec n;
    double off;
    double area = 0.0;
    Vec nsum;
    std::vector<int> tri_ids;
  };
  std::vector<Plane> planes;
  const double ntol = 16.0 * std::max(eps_rel, 1e-12);
  const double otol = 16.0 * std::max(eps_rel, 1e-12) * scale;
  for (int t = 0; t < static_cast<int>(live.size()); ++t) {
    bool merged = false;
    for (auto& pl : planes) {
      if (pl.n.dot(live[t].n) >= 1.0 - ntol &&
          std::abs(pl.off - live[t].off) <= otol) {
        pl.area += live[t].area;
        pl.nsum += live[t].n * live[t].area;
        pl.tri_ids.push_back(t);
        merged = true;
        break;
      }
    }
    if (!merged) {
      Plane pl;
      pl.n = live[t].n;
      pl.off = live[t].off;
      pl.area = live[t].area;
      pl.nsum = live[t].n * live[t].area;
      pl.tri_ids = {t};
      planes.push_back(std::move(pl));
    }
  }

  // vertex is extreme iff it lies on >= 3 distinct facet planes
  std::set<int> used;
  for (const auto& t : live) {
    used.insert(t.a);
    used.insert(t.b);
    used.insert(t.c);
  }
  const double on_tol = std::max(eps_rel, 1e-9) * scale;
  std::vector<Vec> verts;
  for (int v : used) {
    int cnt = 0;
    for (const auto& pl : planes)
      if (pl.n.dot(pts[v]) >= pl.off - on_tol) ++cnt;
    if (cnt >= 3) verts.push_back(pts[v]);
  }
  std::sort(verts.begin(), verts.end(), lex_less);
  if (verts.size() < 4) throw DegenerateInput("3-d hull: degenerate facet structure");

  std::vector<Facet> fs;
  fs.reserve(planes.size());
  double vol = 0.0;
  for (auto& pl : planes) {
    Facet f;
    f.normal = pl.nsum.normalized();
    f.measure = pl.area;
    double off = -std::numeric_limits<double>::infinity();
    for (const auto& v : verts) off = std::max(off, f.normal.dot(v));
    f.offset = off;
    fs.push_back(std::move(f));
  }
  std::vector<std::array<Vec, 3>> btris;
  btris.reserve(live.size());
  for (const auto& t : live) {
    vol += t.n.dot(pts[t.a]) * t.area / 3.0;
    btris.push_back({pts[t.a], pts[t.b], pts[t.c]});
  }
  if (!(vol > 0.0)) throw DegenerateInput("3-d hull: nonpositive volume");
  return Polytope::from_parts(3, std::move(verts), std::move(fs), vol,
                              std::move(btris));
}

}  // namespace

Polytope Polytope::from_parts(int dim, std::vector<Vec> verts,
                              std::vector<Facet> facets, double volume,
                              std::vector<std::array<Vec, 3>> tris) {
  Polytope P;
  P.dim_ = dim;
  P.verts_ = std::move(verts);
  P.facets_ = std::move(facets);
  P.tris_ = std::move(tris);
  P.volume_ = volume;
  P.scale_ = point_scale(P.verts_);
  return P;
}

double Polytope::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i)
    for (std::size_t j = i + 1; j < verts_.size(); ++j)
      d = std::max(d, (verts_[i] - verts_[j]).norm());
  return d;
}

double Polytope::support(const Vec& x) const {
  double h = -std::numeric_limits<double>::infinity();
  for (const auto& v : verts_) h = std::max(h, v.dot(x));
  return h;
}

bool Polytope::contains(const Vec& x, double tol) const {
  for (const auto& f : facets_)
    if (f.normal.dot(x) > f.offset + tol * scale_) return false;
  return true;
}

double Polytope::min_offset() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& f : facets_) m = std::min(m, f.offset);
  return m;
}

Polytope convex_hull(const std::vector<Vec>& points, int dim, double eps_rel) {
  if (dim < 1 || dim > 3) throw DegenerateInput("hull: dim must be 1, 2 or 3");
  if (points.size() < static_cast<std::size_t>(dim + 1))
    throw DegenerateInput("hull: need at least dim+1 points");
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionMismatch("hull: point of wrong dimension");
  switch (dim) {
    case 1:
      return hull_1d(points, eps_rel);
    case 2:
      return hull_2d(points, eps_rel);
    default:
      return hull_3d(points, eps_rel);
  }
}

double volume(const Polytope& P) { return P.volume(); }
const std::vector<Facet>& facets(const Polytope& P) { return P.facets(); }

Vec unit(const Vec& u) {
  const double n = u.norm();
  if (n < 1e-14) throw DegenerateInput("unit: zero direction");
  return u / n;
}

std::vector<Vec> orthobasis_perp(const Vec& u) {
  const int d = static_cast<int>(u.size());
  std::vector<Vec> basis;
  for (int i = 0; i < d && static_cast<int>(basis.size()) < d - 1; ++i) {
    Vec w = Vec::Zero(d);
    w[i] = 1.0;
    w -= u[i] * u;
    for (const auto& b : basis) w -= b.dot(w) * b;
    const double n = w.norm();
    if (n > 1e-7) basis.push_back(w / n);
  }
  return basis;
}

Polytope project(const Polytope& P, const Vec& u) {
  const Vec un = unit(u);
  if (un.size() != P.dim()) throw DimensionMismatch("project: direction dim");
  const auto basis = orthobasis_perp(un);
  std::vector<Vec> pts;
  pts.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) {
    Vec q(static_cast<int>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) q[i] = basis[i].dot(v);
    pts.push_back(std::move(q));
  }
  return convex_hull(pts, P.dim() - 1, 0.0);
}

Polytope reflect(const Polytope& P, const Vec& u) {
  const Vec un = unit(u);
  std::vector<Vec> pts;
  pts.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) pts.push_back(v - 2.0 * un.dot(v) * un);
  return convex_hull(pts, P.dim(), 0.0);
}

double point_segment_distance(const Vec& p, const Vec& a, const Vec& b) {
  const Vec ab = b - a;
  const double L2 = ab.squaredNorm();
  if (L2 <= 0.0) return (p - a).norm();
  double t = ab.dot(p - a) / L2;
  t = std::clamp(t, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double point_triangle_distance(const Vec& p, const Vec& a, const Vec& b,
                               const Vec& c) {
  // project onto the triangle plane, then test interior via barycentric signs
  const Vec ab = b - a, ac = c - a, ap = p - a;
  const double d00 = ab.dot(ab), d01 = ab.dot(ac), d11 = ac.dot(ac);
  const double d20 = ap.dot(ab), d21 = ap.dot(ac);
  const double denom = d00 * d11 - d01 * d01;
  if (denom > 0) {
    const double v = (d11 * d20 - d01 * d21) / denom;
    const double w = (d00 * d21 - d01 * d20) / denom;
    if (v >= 0 && w >= 0 && v + w <= 1) return (p - (a + v * ab + w * ac)).norm();
  }
  return std::min({point_segment_distance(p, a, b),
                   point_segment_distance(p, b, c),
                   point_segment_distance(p, a, c)});
}

double distance_to(const Polytope& P, const Vec& x) {
  if (P.contains(x)) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  if (P.dim() == 1) {
    const double lo = P.vertices().front()[0], hi = P.vertices().back()[0];
    return std::max({lo - x[0], x[0] - hi, 0.0});
  }
  if (P.dim() == 2) {
    const auto& vs = P.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      d = std::min(d, point_segment_distance(x, vs[i], vs[(i + 1) % vs.size()]));
    return d;
  }
  for (const auto& t : P.boundary_triangles())
    d = std::min(d, point_triangle_distance(x, t[0], t[1], t[2]));
  return d;
}

double hausdorff_distance(const Polytope& P, const Polytope& Q) {
  if (P.dim() != Q.dim()) throw DimensionMismatch("hausdorff: dims differ");
  double d = 0.0;
  for (const auto& v : P.vertices()) d = std::max(d, distance_to(Q, v));
  for (const auto& v : Q.vertices()) d = std::max(d, distance_to(P, v));
  return d;
}

Polytope translate(const Polytope& P, const Vec& t) {
  std::vector<Vec> pts;
  pts.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) pts.push_back(v + t);
  return convex_hull(pts, P.dim(), 0.0);
}

Polytope scale_body(const Polytope& P, double c) {
  if (!(c > 0)) throw DegenerateInput("scale_body: factor must be positive");
  std::vector<Vec> pts;
  pts.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) pts.push_back(c * v);
  return convex_hull(pts, P.dim(), 0.0);
}

Polytope linear_map(const Polytope& P, const Mat& A) {
  std::vector<Vec> pts;
  pts.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) pts.push_back(A * v);
  return convex_hull(pts, static_cast<int>(A.rows()), 0.0);
}

Polytope minkowski_sum(const Polytope& A, const Polytope& B) {
  if (A.dim() != B.dim()) throw DimensionMismatch("minkowski_sum: dims differ");
  std::vector<Vec> pts;
  pts.reserve(A.vertices().size() * B.vertices().size());
  for (const auto& a : A.vertices())
    for (const auto& b : B.vertices()) pts.push_back(a + b);
  return convex_hull(pts, A.dim(), 0.0);
}

std::pair<Polytope, double> simplify_polygon(const Polytope& P,
                                             double area_budget) {
  if (P.dim() != 2) throw DimensionMismatch("simplify_polygon: dim 2 only");
  const auto& vs = P.vertices();
  const int k = static_cast<int>(vs.size());
  if (k <= 4 || area_budget <= 0.0) return {P, 0.0};

  // doubly linked ring + lazy min-heap of removal (ear) areas
  std::vector<int> prev(k), next(k);
  std::vector<char> alive(k, 1);
  std::vector<double> cur_area(k);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  auto ear = [&](int i) {
    return 0.5 * std::abs(cross2(vs[prev[i]], vs[i], vs[next[i]]));
  };
  for (int i = 0; i < k; ++i) {
    prev[i] = (i + k - 1) % k;
    next[i] = (i + 1) % k;
  }
  for (int i = 0; i < k; ++i) {
    cur_area[i] = ear(i);
    heap.push({cur_area[i], i});
  }
  double removed = 0.0;
  int n_alive = k;
  while (!heap.empty() && n_alive > 4) {
    auto [a, i] = heap.top();
    heap.pop();
    if (!alive[i] || a != cur_area[i]) continue;  // stale entry
    if (removed + a > area_budget) break;
    removed += a;
    alive[i] = 0;
    --n_alive;
    const int p = prev[i], n = next[i];
    next[p] = n;
    prev[n] = p;
    for (int j : {p, n}) {
      cur_area[j] = ear(j);
      heap.push({cur_area[j], j});
    }
  }
  if (n_alive == k) return {P, 0.0};
  std::vector<Vec> out;
  out.reserve(n_alive);
  for (int i = 0; i < k; ++i)
    if (alive[i]) out.push_back(vs[i]);
  return {convex_hull(out, 2, 0.0), removed};
}

}  // namespace pettykit
