#include "pettykit/measures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <numbers>
#include <vector>

#include "pettykit/rng.hpp"

namespace pettykit {

RadialMeasure RadialMeasure::lebesgue(int d) { return {MeasureKind::lebesgue, d, 0.0}; }
RadialMeasure RadialMeasure::gaussian(int d) { return {MeasureKind::gaussian, d, 0.0}; }
RadialMeasure RadialMeasure::generalized_cauchy(int d, double beta) {
  return {MeasureKind::generalized_cauchy, d, beta};
}

double RadialMeasure::gamma() const {
  switch (kind) {
    case MeasureKind::lebesgue:
      return std::numeric_limits<double>::infinity();
    case MeasureKind::gaussian:
      return 0.0;
    default:
      return -1.0 / beta;
  }
}

double RadialMeasure::density(double r) const {
  switch (kind) {
    case MeasureKind::lebesgue:
      return 1.0;
    case MeasureKind::gaussian:
      return std::pow(2.0 * std::numbers::pi, -0.5 * dim) *
             std::exp(-0.5 * r * r);
    default:
      return std::pow(1.0 + r * r, -beta);
  }
}

std::string RadialMeasure::kind_name() const {
  switch (kind) {
    case MeasureKind::lebesgue:
      return "lebesgue";
    case MeasureKind::gaussian:
      return "gaussian";
    default:
      return "generalized_cauchy";
  }
}

ConcavityReport validate_concavity(const RadialMeasure& M, int n_trials,
                                   std::uint64_t seed) {
  ConcavityReport rep;
  const double g = M.gamma();
  if (M.kind == MeasureKind::generalized_cauchy && M.beta < M.dim) {
    rep.pass = false;
    rep.detail = "generalized_cauchy needs beta >= dim (gamma >= -1/d)";
    return rep;
  }
  rep.pass = true;
  rep.detail = "analytic: gamma = " + std::to_string(g) + " >= -1/" +
               std::to_string(M.dim);
  if (M.kind == MeasureKind::lebesgue) return rep;

  // numeric spot check of the gamma-mean inequality on random triples
  Rng rng(seed);
  for (int t = 0; t < n_trials; ++t) {
    Vec x(M.dim), y(M.dim);
    for (int i = 0; i < M.dim; ++i) {
      x[i] = rng.uniform(-2.0, 2.0);
      y[i] = rng.uniform(-2.0, 2.0);
    }
    const double lam = rng.uniform(0.05, 0.95);
    const Vec z = (1.0 - lam) * x + lam * y;
    const double fx = M.density(x.norm());
    const double fy = M.density(y.norm());
    const double fz = M.density(z.norm());
    double rhs;
    if (M.kind == MeasureKind::gaussian) {
      rhs = std::pow(fx, 1.0 - lam) * std::pow(fy, lam);  // log-concavity
    } else {
      rhs = std::pow((1.0 - lam) * std::pow(fx, g) + lam * std::pow(fy, g),
                     1.0 / g);
    }
    if (fz < rhs * (1.0 - 1e-9)) {
      rep.pass = false;
      rep.detail = "numeric gamma-mean violation";
      rep.witness_x = x;
      rep.witness_y = y;
      rep.witness_lambda = lam;
      return rep;
    }
  }
  return rep;
}

void require_valid_measure(const RadialMeasure& M) {
  const auto rep = validate_concavity(M);
  if (!rep.pass) throw ConcavityViolation(rep.detail);
}

double sphere_area(int d) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
}

double reg_lower_inc_gamma(double a, double x) {
  if (x <= 0.0) return 0.0;
  // integer a (every even dimension): P(k,x) = 1 - e^{-x} sum_{j<k} x^j/j!
  if (a == std::floor(a) && a >= 1.0 && a <= 40.0) {
    const int k = static_cast<int>(a);
    double term = 1.0, sum = 1.0;
    for (int j = 1; j < k; ++j) {
      term *= x / j;
      sum += term;
    }
    return 1.0 - std::exp(-x) * sum;
  }
  if (x < a + 1.0) {
    // series
    double term = 1.0 / a, sum = term;
    for (int k = 1; k < 500; ++k) {
      term *= x / (a + k);
      sum += term;
      if (term < sum * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  // continued fraction for Q(a,x)
  double b = x + 1.0 - a, c = 1e300, dd = 1.0 / b, h = dd;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    dd = an * dd + b;
    if (std::abs(dd) < 1e-300) dd = 1e-300;
    c = b + an / c;
    if (std::abs(c) < 1e-300) c = 1e-300;
    dd = 1.0 / dd;
    const double del = dd * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  const double q = std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
  return 1.0 - q;
}

namespace {

struct GL10 {
  static constexpr double xs[5] = {0.148874338981631211, 0.433395394129247191,
                                   0.679409568299024406, 0.865063366688984511,
                                   0.973906528517171720};
  static constexpr double ws[5] = {0.295524224714752870, 0.269266719309996355,
                                   0.219086362515982044, 0.149451349150580593,
                                   0.066671344308688138};
};

double gl10(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 5; ++i)
    s += GL10::ws[i] * (f(c - h * GL10::xs[i]) + f(c + h * GL10::xs[i]));
  return s * h;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double whole, double tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = gl10(f, a, mid), right = gl10(f, mid, b);
  if (depth > 40 || std::abs(left + right - whole) < tol)
    return left + right;
  return adapt(f, a, mid, left, 0.5 * tol, depth + 1) +
         adapt(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    double abs_tol) {
  if (b <= a) return 0.0;
  return adapt(f, a, b, gl10(f, a, b), abs_tol, 0);
}

double radial_mass(const RadialMeasure& M, double R) {
  if (R < 0.0) throw OutOfRange("radial_mass: R >= 0 required");
  if (R == 0.0) return 0.0;
  const int d = M.dim;
  switch (M.kind) {
    case MeasureKind::lebesgue:
      return sphere_area(d) * std::pow(R, d) / d;
    case MeasureKind::gaussian:
      // sigma_{d-1} (2 pi)^{-d/2} int_0^R e^{-r^2/2} r^{d-1} dr
      //   = P(d/2, R^2/2)
      return reg_lower_inc_gamma(0.5 * d, 0.5 * R * R);
    default: {
      const double beta = M.beta;
      // even dimensions reduce to antiderivatives of (1+t)^{k-beta} after
      // t = r^2; odd dimensions fall back to adaptive quadrature
      if (d % 2 == 0) {
        const int k = d / 2 - 1;  // integrand (1/2) t^k (1+t)^{-beta}
        const double T = R * R;
        double sum = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {  // t^k = sum_j C(k,j) (1+t)^j (-1)^{k-j}
          const double e = j - beta + 1.0;
          const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
          const double term = (std::pow(1.0 + T, e) - 1.0) / e;
          sum += sign * binom * term;
          binom *= static_cast<double>(k - j) / (j + 1);
        }
        return sphere_area(d) * 0.5 * sum;
      }
      return sphere_area(d) *
             integrate_gl(
                 [beta, d](double r) {
                   return std::pow(1.0 + r * r, -beta) * std::pow(r, d - 1);
                 },
                 0.0, R);
    }
  }
}

int worker_count() {
  if (const char* env = std::getenv("PETTYKIT_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

Estimate star_body_measure(const std::function<double(const Vec&)>& rho, int d,
                           const RadialMeasure& M, std::int64_t n_samples,
                           std::uint64_t seed) {
  if (M.dim != d) throw DimensionMismatch("star_body_measure: measure dim");
  const std::int64_t n_pairs = std::max<std::int64_t>(1, n_samples / 2);
  const std::int64_t batch = 2048;
  const std::int64_t n_batches = (n_pairs + batch - 1) / batch;

  struct Partial {
    double sum = 0.0, sumsq = 0.0;
    std::int64_t n = 0;
  };
  auto run_batch = [&](std::int64_t bi) {
    Rng rng = Rng(seed).substream(static_cast<std::uint64_t>(bi));
    Partial p;
    const std::int64_t lo = bi * batch;
    const std::int64_t hi = std::min(n_pairs, lo + batch);
    Vec theta(d);
    for (std::int64_t k = lo; k < hi; ++k) {
      double nn = 0.0;
      do {
        for (int i = 0; i < d; ++i) theta[i] = rng.gaussian();
        nn = theta.norm();
      } while (nn < 1e-12);
      theta /= nn;
      const double v =
          0.5 * (radial_mass(M, rho(theta)) + radial_mass(M, rho(-theta)));
      p.sum += v;
      p.sumsq += v * v;
      ++p.n;
    }
    return p;
  };

  std::vector<Partial> parts(static_cast<std::size_t>(n_batches));
  const int workers = std::min<int>(worker_count(), static_cast<int>(n_batches));
  if (workers <= 1) {
    for (std::int64_t bi = 0; bi < n_batches; ++bi) parts[bi] = run_batch(bi);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<std::int64_t> next{0};
    for (int w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (std::int64_t bi = next++; bi < n_batches; bi = next++)
          parts[bi] = run_batch(bi);
      }));
    for (auto& f : futs) f.get();
  }

  // merge in batch order: identical result for any worker count
  double sum = 0.0, sumsq = 0.0;
  std::int64_t n = 0;
  for (const auto& p : parts) {
    sum += p.sum;
    sumsq += p.sumsq;
    n += p.n;
  }
  Estimate e;
  e.value = sum / n;
  const double var = std::max(0.0, sumsq / n - e.value * e.value);
  e.std_error = std::sqrt(var / n);
  e.n_samples = 2 * n;
  e.seed = seed;
  return e;
}

Estimate star_body_measure(const StarBodySpec& spec, const RadialMeasure& M,
                           std::int64_t n_samples, std::uint64_t seed) {
  return star_body_measure(
      [&](const Vec& th) { return polar_proj_radial(spec, th); }, spec.d(), M,
      n_samples, seed);
}

}  // namespace pettykit
