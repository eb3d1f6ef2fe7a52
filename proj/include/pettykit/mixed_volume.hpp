#pragma once

#include <span>
#include <vector>

#include "pettykit/bodies.hpp"

namespace pettykit {

/// Atomic surface area measure of a polytope: one (unit normal, facet
/// measure) atom per facet. Atoms sum to zero vectorially.
struct SurfaceAreaMeasure {
  struct Atom {
    Vec normal;
    double weight;
  };
  std::vector<Atom> atoms;

  static SurfaceAreaMeasure of(const Polytope& P);
  double total() const;
  Vec resultant() const;
};

/// V(K[n-1], L) = (1/n) sum_F h_L(n_F) area_F for any support function hL.
template <class SupportFn>
double mixed_volume_first_fn(const Polytope& K, SupportFn&& hL) {
  double s = 0.0;
  for (const auto& f : K.facets()) s += hL(f.normal) * f.measure;
  return s / K.dim();
}

double mixed_volume_first(const Polytope& K, const Polytope& L);
double mixed_volume_first(const Polytope& K, const Segment& L);

/// L_p mixed volume by the facet representation
/// V_p(K,L) = (1/n) sum_F h_L(n_F)^p h_K(n_F)^{1-p} area_F.
/// For p > 1 every h_K(n_F) must be positive (origin interior); hL must be
/// nonnegative (L contains the origin).
template <class SupportFn>
double lp_mixed_volume_fn(const Polytope& K, SupportFn&& hL, double p) {
  if (p < 1.0) throw InvalidP("lp mixed volume needs p >= 1");
  const double tol = kGeomEps * K.scale();
  double s = 0.0;
  for (const auto& f : K.facets()) {
    const double hl = hL(f.normal);
    if (p == 1.0) {
      s += hl * f.measure;
      continue;
    }
    if (f.offset <= tol)
      throw OriginNotInterior("lp mixed volume: h_K vanishes on a facet normal");
    s += std::pow(hl, p) * std::pow(f.offset, 1.0 - p) * f.measure;
  }
  return s / K.dim();
}

double lp_mixed_volume(const OriginBody& K, const Polytope& L, double p);

/// S_p(K) = V_p(K, B_2^n); the Euclidean ball enters only through h_B = 1,
/// so no ball approximation is involved.
double lp_surface_area(const OriginBody& K, double p);

/// Independent finite-difference oracle for V_p from the limit definition
/// V_p(K,L) = (p/n) lim (|K +_p e.L| - |K|) / e, using the outer p-sum
/// approximation on a grid that contains both facet normal sets. Exact in
/// the plane for p = 1 up to the O(eps) truncation; bias documented by the
/// eps-halving test.
double lp_mixed_volume_fd_oracle(const OriginBody& K, const OriginBody& L,
                                 double p, double eps, int n_dirs);

/// Trivariate mixed volume in R^3 by polarization of Minkowski-sum volumes.
double mixed_volume_3(const Polytope& A, const Polytope& B, const Polytope& C);

/// Largest midpoint-convexity violation max_{c,r} v[c] - (v[c-r]+v[c+r])/2
/// over an equally spaced grid of values. Negative when strictly convex.
double midpoint_convexity_violation(std::span<const double> vals);

/// Linear parameter system conv{x_j + lambda_j t u}.
struct LinearParameterSystem {
  std::vector<Vec> generators;
  std::vector<double> speeds;
  Vec u;
  Polytope at(double t) const;
};

/// Seeded random system that stays full-dimensional on [-1,1]; when
/// `keep_origin` is set, the origin is interior for every t in [-1,1].
LinearParameterSystem make_random_lps(int dim, std::uint64_t seed, int k,
                                      bool keep_origin = false);

}  // namespace pettykit
