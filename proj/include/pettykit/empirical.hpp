#pragma once

#include "pettykit/measures.hpp"
#include "pettykit/rearrange.hpp"
#include "pettykit/rng.hpp"
#include "pettykit/symmetrize.hpp"

namespace pettykit {

/// Sampleable density for the empirical runs. Uniform-on-body densities have
/// exact symmetric decreasing rearrangements (uniform on the centered ball of
/// equal volume, sampled in closed form); grid densities rearrange by cell
/// sorting.
class EmpiricalDensity {
 public:
  enum class Kind { uniform_polytope, uniform_ball, grid };

  static EmpiricalDensity uniform(Polytope P);
  static EmpiricalDensity ball(int dim, double radius);
  static EmpiricalDensity from_grid(GridDensity g);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  Vec sample(Rng& rng) const;
  EmpiricalDensity rearranged() const;
  /// Total mass (1 for the uniform kinds, which are probability densities).
  double mass() const;

 private:
  EmpiricalDensity() = default;
  Kind kind_ = Kind::uniform_polytope;
  int dim_ = 0;
  Polytope body_;
  double radius_ = 0.0;
  GridDensity grid_;
  // cached alias table for grid sampling
  std::vector<double> alias_prob_;
  std::vector<std::size_t> alias_idx_;
};

/// [x_1,...,x_N]C: hull of the images of C's vertices under the n x N matrix
/// with columns x_i. Throws DegenerateSample when the image degenerates.
Polytope matrix_body(const std::vector<Vec>& xs, const std::vector<Vec>& C);

struct EmpiricalConfig {
  int n = 2;                                 // dimension of the X_i
  std::vector<Vec> C;                        // vertices of C in R^N
  std::string c_name = "cube";
  QBody Q;                                   // p = 1 throughout
  std::vector<EmpiricalDensity> densities;   // one per column, size N
  RadialMeasure measure;                     // dim n * m
  int outer = 200;
  std::int64_t inner = 4096;
  std::uint64_t seed = 20250810;

  int N() const { return static_cast<int>(densities.size()); }
  void validate() const;  // throws ConfigError
};

enum class Arm { raw, rearranged };

/// Per-outer-sample values of nu(Pi_Q_polar([X]C)) with their inner MC
/// standard errors; substreams and inner MC seeds depend only on
/// (seed, outer index), so the two arms share random numbers draw for draw.
struct EmpiricalSamples {
  std::vector<double> values;
  std::vector<double> inner_se;
  /// Law-of-total-variance split: mean inner variance over total variance.
  double inner_variance_share() const;
};
EmpiricalSamples empirical_sample_values(const EmpiricalConfig& cfg, Arm arm);

Estimate expected_measure(const EmpiricalConfig& cfg, Arm arm);

struct PairedReport {
  Estimate raw;
  Estimate rearranged;
  double diff = 0.0;              // rearranged - raw
  double diff_se = 0.0;           // paired standard error
  double inner_share_raw = 0.0;   // inner-MC share of the raw arm variance
  double inner_share_rearranged = 0.0;
  bool pass = false;              // diff >= -3 diff_se
};

/// Both arms with common random numbers; the decision is 3 sigma on the
/// paired difference.
PairedReport paired_comparison(const EmpiricalConfig& cfg);

struct FiberProfile {
  std::vector<double> t;
  std::vector<double> value;    // F(t)
  std::vector<double> se;       // stderr of F(t)
  std::vector<double> diff_se;  // stderr of F(t) - F(0), common samples
  int i0 = 0;                   // index with t = 0
};

/// F_w(t) = int chi{ n V_p(K_u(t), (w + s (x) u).Q^t) <= 1 } phi_w(s) ds over
/// s in R^m, estimated by importance sampling from the measure's conditional
/// radial law with samples shared across the whole t grid.
FiberProfile fiber_profile(const Polytope& K, const QBody& Q, double p,
                           const Vec& u, const std::vector<Vec>& w,
                           const RadialMeasure& M,
                           const std::vector<double>& t_grid,
                           std::int64_t n_samples, std::uint64_t seed);

/// Deterministic midpoint-convexity scan of
///   t |-> n V(C_y(t)[n-1], L)   along random segments in R^N.
/// Returns the largest violation and the value scale.
struct ConvexityScan {
  double max_violation = -1e300;  // negative slack when strictly convex
  double scale = 0.0;
};
ConvexityScan joint_convexity_scan(const std::vector<Vec>& C, int n,
                                   const Vec& u, const Polytope& L,
                                   int n_segments, std::uint64_t seed);

}  // namespace pettykit
