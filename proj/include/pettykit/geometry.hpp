#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <vector>

#include "pettykit/errors.hpp"

namespace pettykit {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Relative tolerance for geometric predicates (vertex irredundancy,
/// coplanarity, origin-interior certificates).
inline constexpr double kGeomEps = 1e-9;

/// One facet of a polytope: unit outward normal, (dim-1)-measure, and the
/// support offset h(normal).
struct Facet {
  Vec normal;
  double measure = 0.0;
  double offset = 0.0;
};

/// Closed line segment in R^n.
struct Segment {
  Vec a;
  Vec b;
};

/// Convex polytope in dimension 1, 2 or 3, stored by its irredundant vertex
/// set together with a facet decomposition. Dimension 1 is the interval
/// case (two endpoint "facets" of measure 1); it arises from projections of
/// planar bodies. Instances are immutable.
class Polytope {
 public:
  Polytope() = default;  // empty; every real instance comes from a hull

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return verts_; }
  const std::vector<Facet>& facets() const { return facets_; }
  double volume() const { return volume_; }

  /// Triangulated boundary, dim 3 only (used for point distances).
  const std::vector<std::array<Vec, 3>>& boundary_triangles() const {
    return tris_;
  }

  /// Largest coordinate magnitude; the scale used by relative tolerances.
  double scale() const { return scale_; }
  double diameter() const;

  /// max_{v in P} <x,v>
  double support(const Vec& x) const;

  /// True if every facet inequality holds up to tol*scale.
  bool contains(const Vec& x, double tol = 1e-12) const;

  /// Smallest facet offset (positive iff the origin is interior).
  double min_offset() const;

  static Polytope from_parts(int dim, std::vector<Vec> verts,
                             std::vector<Facet> facets, double volume,
                             std::vector<std::array<Vec, 3>> tris = {});

 private:
  int dim_ = 0;
  std::vector<Vec> verts_;
  std::vector<Facet> facets_;
  std::vector<std::array<Vec, 3>> tris_;
  double volume_ = 0.0;
  double scale_ = 0.0;
};

/// Convex hull of a point set. Vertices are irredundant up to eps_rel
/// (relative to the point scale); eps_rel = 0 keeps every strictly extreme
/// point and drops only exact ties, which makes the hull volume-exact.
/// Throws DegenerateInput when the points are not full-dimensional.
Polytope convex_hull(const std::vector<Vec>& points, int dim,
                     double eps_rel = kGeomEps);

double volume(const Polytope& P);
const std::vector<Facet>& facets(const Polytope& P);

/// Unit direction in R^dim. Throws DegenerateInput for near-zero input.
Vec unit(const Vec& u);

/// Deterministic orthonormal basis of u^perp: Gram-Schmidt over the standard
/// basis, smallest index first.
std::vector<Vec> orthobasis_perp(const Vec& u);

/// Orthogonal projection of P onto u^perp, in orthobasis_perp coordinates.
/// Result lives in dimension dim-1.
Polytope project(const Polytope& P, const Vec& u);

/// Householder reflection of P about the hyperplane u^perp.
Polytope reflect(const Polytope& P, const Vec& u);

/// Exact Hausdorff distance between two polytopes of equal dimension.
double hausdorff_distance(const Polytope& P, const Polytope& Q);

/// Euclidean distance from a point to a polytope (0 inside).
double distance_to(const Polytope& P, const Vec& x);

Polytope translate(const Polytope& P, const Vec& t);
Polytope scale_body(const Polytope& P, double c);
Polytope linear_map(const Polytope& P, const Mat& A);

/// Minkowski sum computed as the hull of pairwise vertex sums (exact).
Polytope minkowski_sum(const Polytope& A, const Polytope& B);

/// Remove vertices of a convex polygon whose removal changes the area by the
/// least amount, while the total removed area stays within `area_budget`.
/// Returns the simplified polygon and the area actually removed. dim 2 only.
std::pair<Polytope, double> simplify_polygon(const Polytope& P,
                                             double area_budget);

double point_segment_distance(const Vec& p, const Vec& a, const Vec& b);
double point_triangle_distance(const Vec& p, const Vec& a, const Vec& b,
                               const Vec& c);

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
inline Vec vec3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}
inline Vec vec1(double x) {
  Vec v(1);
  v << x;
  return v;
}

}  // namespace pettykit
