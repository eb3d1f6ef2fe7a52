#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "pettykit/projbody.hpp"

namespace pettykit {

/// Monte-Carlo value with standard error; attached to every stochastic
/// quantity the toolkit reports.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::uint64_t seed = 0;
};

enum class MeasureKind { lebesgue, gaussian, generalized_cauchy };

/// Rotationally invariant measure with gamma-concave radial density.
///   lebesgue:           density 1,                     gamma = +inf
///   gaussian:           (2 pi)^{-d/2} e^{-r^2/2},      gamma = 0
///   generalized_cauchy: (1 + r^2)^{-beta},             gamma = -1/beta
/// Convexity of the measure needs gamma >= -1/d, i.e. beta >= d.
struct RadialMeasure {
  MeasureKind kind = MeasureKind::lebesgue;
  int dim = 0;
  double beta = 0.0;

  static RadialMeasure lebesgue(int d);
  static RadialMeasure gaussian(int d);
  static RadialMeasure generalized_cauchy(int d, double beta);

  double gamma() const;
  double density(double r) const;
  std::string kind_name() const;
};

struct ConcavityReport {
  bool pass = false;
  std::string detail;
  // worst numeric witness (x, y, lambda) when the spot check fails
  Vec witness_x, witness_y;
  double witness_lambda = 0.0;
};

/// Analytic concavity check per kind plus a seeded numeric spot check of the
/// gamma-mean inequality on random triples.
ConcavityReport validate_concavity(const RadialMeasure& M, int n_trials = 100,
                                   std::uint64_t seed = 1);

/// Throws ConcavityViolation unless validate_concavity passes.
void require_valid_measure(const RadialMeasure& M);

/// sigma_{d-1} * int_0^R density(r) r^{d-1} dr: the measure of a ball of
/// radius R. Closed form for lebesgue/gaussian, adaptive Gauss-Legendre
/// (abs tol 1e-10) for generalized_cauchy.
double radial_mass(const RadialMeasure& M, double R);

double sphere_area(int d);

/// nu(star body) by polar-coordinate Monte Carlo: seeded uniform sphere
/// directions in antithetic pairs, exact radial integral per direction.
/// Batched deterministically; PETTYKIT_THREADS caps the worker count.
Estimate star_body_measure(const std::function<double(const Vec&)>& rho, int d,
                           const RadialMeasure& M, std::int64_t n_samples,
                           std::uint64_t seed);

Estimate star_body_measure(const StarBodySpec& spec, const RadialMeasure& M,
                           std::int64_t n_samples, std::uint64_t seed);

/// Regularized lower incomplete gamma P(a,x).
double reg_lower_inc_gamma(double a, double x);

/// Adaptive Gauss-Legendre quadrature to absolute tolerance.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    double abs_tol = 1e-10);

/// Worker cap from PETTYKIT_THREADS (>=1).
int worker_count();

}  // namespace pettykit
