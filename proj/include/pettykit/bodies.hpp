#pragma once

#include <string>
#include <vector>

#include "pettykit/geometry.hpp"

namespace pettykit {

/// Compact interval [lo,hi] on the line; the m=1 body type for Q slots.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double support(double t) const { return std::max(lo * t, hi * t); }
  double length() const { return hi - lo; }
};

double support(const Polytope& K, const Vec& x);
double support(const Segment& s, const Vec& x);

/// Polytope certified to contain the origin in its interior.
class OriginBody {
 public:
  explicit OriginBody(Polytope P);
  const Polytope& poly() const { return poly_; }
  int dim() const { return poly_.dim(); }
  double min_offset() const { return min_offset_; }

 private:
  Polytope poly_;
  double min_offset_ = 0.0;
};

/// Gauge ||x||_K = inf{l > 0 : x in l K}; requires the origin interior.
double minkowski_functional(const OriginBody& K, const Vec& x);

/// Polar body via facet/vertex duality. eps_rel controls the hull tolerance
/// of the dual vertex set; 0 keeps every strictly extreme dual point.
OriginBody polar(const OriginBody& K, double eps_rel = kGeomEps);
Interval polar(const Interval& I);

/// Deterministic direction grid: uniform angles in 2-d, Fibonacci sphere in
/// 3-d, the two endpoints in 1-d.
std::vector<Vec> direction_grid(int dim, int n_dirs);

/// Outer polytopal approximation of the p-sum K +_p L over a deterministic
/// direction grid augmented with the facet normals of both bodies. For p = 1
/// in the plane this is exact. Support function of the result dominates the
/// true p-sum and agrees with it on the grid.
Polytope p_sum_approx(const OriginBody& K, const OriginBody& L, double p,
                      int n_dirs);

/// Compact convex Q in R^m containing the origin (interior not required:
/// [0,1] and -simplex are admissible). m = 1 uses Interval per the interval
/// representation of segments on the line.
class QBody {
 public:
  QBody() = default;  // empty; build via the factories below

  static QBody interval(double lo, double hi);
  static QBody polytope(const Polytope& P);

  int m() const { return m_; }
  /// h_Q(w) for w in R^m.
  double support(const Vec& w) const;
  /// Vertices as m-vectors.
  const std::vector<Vec>& vertices() const { return verts_; }
  /// True when Q = -Q.
  bool symmetric() const { return symmetric_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

 private:
  int m_ = 0;
  std::vector<Vec> verts_;
  bool symmetric_ = false;
  std::string name_;
};

// ---- catalog ---------------------------------------------------------

Polytope make_square(double halfwidth = 1.0);
Polytope make_box(const Vec& lo, const Vec& hi);
Polytope make_cube(double halfwidth = 1.0);
Polytope make_simplex(int dim);
/// Regular k-gon with given circumradius, centered at the origin.
Polytope make_kgon(int k, double circumradius);
/// Regular k-gon with prescribed area.
Polytope make_kgon_area(int k, double area);
/// Origin-centered approximate Euclidean ball: k-gon in 2-d, Fibonacci point
/// hull in 3-d, rescaled so the volume matches exactly.
Polytope make_ball_approx(int dim, double vol, int n_points);
/// B_K: origin-centered ball approximation with the same volume as K.
Polytope make_volume_ball(const Polytope& K, int n_points = 0);
/// Seeded random polygon with the origin well inside; reproducible bit-exactly.
Polytope make_random_polygon(std::uint64_t seed, int k, double rmin = 0.7,
                             double rmax = 1.3);
Polytope make_random_polytope3(std::uint64_t seed, int k, double rmin = 0.7,
                               double rmax = 1.3);

QBody make_q_segment01();           // [0,1]
QBody make_q_segment_sym();         // [-1,1]
QBody make_q_square();              // [-1,1]^2
QBody make_q_neg_simplex(int m);    // -conv{0, e_1, ..., e_m}

}  // namespace pettykit
