#pragma once

#include "pettykit/mixed_volume.hpp"

namespace pettykit {

/// h of the image body x.Q^t at u, computed as h_Q(x^t u). Agrees with the
/// direct maximum of <x q^t, u> over the vertices of Q.
double matrix_image_support(const Mat& x, const QBody& Q, const Vec& u);

/// The (L_p,Q) polar projection body of K, kept implicit as a star body in
/// R^{nm}: ||x||^p = n V_p(K, x.Q^t). Never materialized as a polytope;
/// consumers evaluate the radial function.
class StarBodySpec {
 public:
  /// p = 1 admits any full-dimensional K; p > 1 needs the origin interior
  /// to K. Q always contains the origin. Rejects nm > 6 and n = m = 3.
  StarBodySpec(Polytope K, QBody Q, double p);

  const Polytope& K() const { return K_; }
  const QBody& Q() const { return Q_; }
  double p() const { return p_; }
  int n() const { return K_.dim(); }
  int m() const { return Q_.m(); }
  int d() const { return K_.dim() * Q_.m(); }

  /// ||x|| for x in R^{nm} (columns of the n x m matrix stacked).
  double gauge(const Vec& x) const;

 private:
  Polytope K_;
  QBody Q_;
  double p_;
};

/// rho(theta) = (n V_p(K, theta.Q^t))^{-1/p}; positively (-1)-homogeneous.
double polar_proj_radial(const StarBodySpec& spec, const Vec& theta);

/// Classical projection body Pi K as an explicit polytope (a zonotope with
/// generators (area_F/2) n_F). Exact in the plane; in R^3 the vertices are
/// enumerated from the normal-fan cells of the generator arrangement plus a
/// Fibonacci grid of n_dirs directions.
Polytope classical_proj_body(const Polytope& K, int n_dirs = 4096);

/// Support of Pi K by the Cauchy formula (1/2) sum_F |<u,n_F>| area_F.
double proj_body_support(const Polytope& K, const Vec& u);

}  // namespace pettykit
