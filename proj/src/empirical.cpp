#include "pettykit/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace pettykit {

EmpiricalDensity EmpiricalDensity::uniform(Polytope P) {
  EmpiricalDensity d;
  d.kind_ = Kind::uniform_polytope;
  d.dim_ = P.dim();
  d.body_ = std::move(P);
  return d;
}

EmpiricalDensity EmpiricalDensity::ball(int dim, double radius) {
  if (!(radius > 0.0)) throw DegenerateInput("ball density: radius > 0");
  EmpiricalDensity d;
  d.kind_ = Kind::uniform_ball;
  d.dim_ = dim;
  d.radius_ = radius;
  return d;
}

EmpiricalDensity EmpiricalDensity::from_grid(GridDensity g) {
  g.validate();
  EmpiricalDensity d;
  d.kind_ = Kind::grid;
  d.dim_ = g.dim;
  d.grid_ = std::move(g);
  // Vose alias table over cell masses
  const auto& vals = d.grid_.values;
  const std::size_t m = vals.size();
  const double total = std::accumulate(vals.begin(), vals.end(), 0.0);
  d.alias_prob_.assign(m, 1.0);
  d.alias_idx_.assign(m, 0);
  std::vector<double> scaled(m);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < m; ++i) {
    scaled[i] = vals[i] * m / total;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back(), l = large.back();
    small.pop_back();
    large.pop_back();
    d.alias_prob_[s] = scaled[s];
    d.alias_idx_[s] = l;
    scaled[l] += scaled[s] - 1.0;
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  return d;
}

Vec EmpiricalDensity::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::uniform_polytope: {
      // rejection from the bounding box
      Vec lo(dim_), hi(dim_);
      lo.setConstant(std::numeric_limits<double>::infinity());
      hi.setConstant(-std::numeric_limits<double>::infinity());
      for (const auto& v : body_.vertices()) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
      }
      for (int tries = 0; tries < 100000; ++tries) {
        Vec x(dim_);
        for (int i = 0; i < dim_; ++i) x[i] = rng.uniform(lo[i], hi[i]);
        if (body_.contains(x)) return x;
      }
      throw DegenerateSample("uniform polytope sampling failed");
    }
    case Kind::uniform_ball: {
      if (dim_ == 2) {
        const double r = radius_ * std::sqrt(rng.uniform());
        const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
        return vec2(r * std::cos(a), r * std::sin(a));
      }
      const double r = radius_ * std::cbrt(rng.uniform());
      Vec g(dim_);
      double nn = 0.0;
      do {
        for (int i = 0; i < dim_; ++i) g[i] = rng.gaussian();
        nn = g.norm();
      } while (nn < 1e-12);
      return (r / nn) * g;
    }
    default: {
      const std::size_t cell = static_cast<std::size_t>(
          rng.below(static_cast<std::uint64_t>(grid_.values.size())));
      const std::size_t chosen =
          rng.uniform() < alias_prob_[cell] ? cell : alias_idx_[cell];
      Vec c = grid_.cell_center(chosen);
      for (int a = 0; a < dim_; ++a)
        c[a] += (rng.uniform() - 0.5) * grid_.spacing(a);
      return c;
    }
  }
}

EmpiricalDensity EmpiricalDensity::rearranged() const {
  switch (kind_) {
    case Kind::uniform_polytope: {
      const double vol = body_.volume();
      if (dim_ == 2) return ball(2, std::sqrt(vol / std::numbers::pi));
      return ball(3, std::cbrt(vol * 3.0 / (4.0 * std::numbers::pi)));
    }
    case Kind::uniform_ball:
      return *this;  // already rearranged
    default:
      return from_grid(symmetric_decreasing_rearrangement(grid_));
  }
}

double EmpiricalDensity::mass() const {
  return kind_ == Kind::grid ? grid_.mass() : 1.0;
}

Polytope matrix_body(const std::vector<Vec>& xs, const std::vector<Vec>& C) {
  if (C.empty() || xs.empty()) throw DegenerateSample("matrix body: empty input");
  const int n = static_cast<int>(xs.front().size());
  const int N = static_cast<int>(xs.size());
  std::vector<Vec> pts;
  pts.reserve(C.size());
  for (const auto& c : C) {
    if (c.size() != N) throw DimensionMismatch("matrix body: C vertex size != N");
    Vec p = Vec::Zero(n);
    for (int j = 0; j < N; ++j) p += c[j] * xs[j];
    pts.push_back(std::move(p));
  }
  try {
    return convex_hull(pts, n, 0.0);
  } catch (const DegenerateInput& e) {
    throw DegenerateSample(std::string("matrix body degenerate: ") + e.what());
  }
}

void EmpiricalConfig::validate() const {
  if (densities.empty()) throw ConfigError("empirical: no densities");
  const int NN = N();
  if (NN > 8) throw ConfigError("empirical: N <= 8 required");
  if (C.empty()) throw ConfigError("empirical: C has no vertices");
  for (const auto& c : C)
    if (c.size() != NN) throw ConfigError("empirical: C vertices must lie in R^N");
  if (NN < 2 && n >= 2)
    throw ConfigError("empirical: N = 1 makes [X]C degenerate in R^n, rejected");
  for (const auto& d : densities) {
    if (d.dim() != n) throw ConfigError("empirical: density dimension != n");
    if (!(d.mass() > 0.0)) throw ConfigError("empirical: density with zero mass");
  }
  const int d = n * Q.m();
  if (d > 6) throw ConfigError("empirical: nm <= 6 required");
  if (measure.dim != d) throw ConfigError("empirical: measure dim != n*m");
  if (outer < 1 || inner < 2) throw ConfigError("empirical: sample budget");
  require_valid_measure(measure);
}

double EmpiricalSamples::inner_variance_share() const {
  if (values.size() < 2) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= values.size();
  double var = 0.0, inner = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    var += (values[i] - mean) * (values[i] - mean);
    inner += inner_se[i] * inner_se[i];
  }
  var /= values.size();
  inner /= values.size();
  return var > 0.0 ? std::min(1.0, inner / var) : 0.0;
}

EmpiricalSamples empirical_sample_values(const EmpiricalConfig& cfg, Arm arm) {
  cfg.validate();
  std::vector<EmpiricalDensity> dens;
  dens.reserve(cfg.densities.size());
  for (const auto& d : cfg.densities)
    dens.push_back(arm == Arm::raw ? d : d.rearranged());

  EmpiricalSamples out;
  out.values.resize(cfg.outer);
  out.inner_se.resize(cfg.outer);
  const Rng root(cfg.seed);
  for (int k = 0; k < cfg.outer; ++k) {
    Rng rng = root.substream(static_cast<std::uint64_t>(k));
    int retries = 0;
    for (;;) {
      try {
        std::vector<Vec> xs;
        xs.reserve(dens.size());
        for (const auto& d : dens) xs.push_back(d.sample(rng));
        const Polytope body = matrix_body(xs, cfg.C);
        const StarBodySpec spec(body, cfg.Q, 1.0);
        // common inner seed across arms: same sphere directions
        const Estimate e = star_body_measure(
            spec, cfg.measure, cfg.inner,
            mix64(cfg.seed ^ mix64(static_cast<std::uint64_t>(k) + 17)));
        out.values[k] = e.value;
        out.inner_se[k] = e.std_error;
        break;
      } catch (const DegenerateSample&) {
        if (++retries >= 100) throw;
      }
    }
  }
  return out;
}

namespace {

Estimate summarize(const std::vector<double>& vals, std::uint64_t seed) {
  Estimate e;
  const double n = static_cast<double>(vals.size());
  e.value = std::accumulate(vals.begin(), vals.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : vals) ss += (v - e.value) * (v - e.value);
  e.std_error = std::sqrt(ss / n / n);
  e.n_samples = static_cast<std::int64_t>(vals.size());
  e.seed = seed;
  return e;
}

}  // namespace

Estimate expected_measure(const EmpiricalConfig& cfg, Arm arm) {
  return summarize(empirical_sample_values(cfg, arm).values, cfg.seed);
}

PairedReport paired_comparison(const EmpiricalConfig& cfg) {
  const auto raw = empirical_sample_values(cfg, Arm::raw);
  const auto rea = empirical_sample_values(cfg, Arm::rearranged);
  PairedReport r;
  r.raw = summarize(raw.values, cfg.seed);
  r.rearranged = summarize(rea.values, cfg.seed);
  r.inner_share_raw = raw.inner_variance_share();
  r.inner_share_rearranged = rea.inner_variance_share();
  std::vector<double> diff(raw.values.size());
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = rea.values[i] - raw.values[i];
  const Estimate d = summarize(diff, cfg.seed);
  r.diff = d.value;
  r.diff_se = d.std_error;
  r.pass = r.diff >= -3.0 * r.diff_se;
  return r;
}

namespace {

// gamma(shape, scale 1) sampler, Marsaglia-Tsang; shape >= 0.5 in our use
double sample_gamma(Rng& rng, double shape) {
  if (shape < 1.0) {
    const double u = std::max(rng.uniform(), 1e-300);
    return sample_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(std::max(u, 1e-300)) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v;
  }
}

}  // namespace

FiberProfile fiber_profile(const Polytope& K, const QBody& Q, double p,
                           const Vec& u, const std::vector<Vec>& w,
                           const RadialMeasure& M,
                           const std::vector<double>& t_grid,
                           std::int64_t n_samples, std::uint64_t seed) {
  const int n = K.dim();
  const int m = static_cast<int>(w.size());
  if (Q.m() != m) throw DimensionMismatch("fiber profile: |w| != m");
  if (M.dim != n * m) throw DimensionMismatch("fiber profile: measure dim != nm");
  const Vec un = unit(u);
  double w2 = 0.0;
  for (const auto& wi : w) {
    if (wi.size() != n) throw DimensionMismatch("fiber profile: w_i dim");
    if (std::abs(wi.dot(un)) > 1e-9 * (1.0 + wi.norm()))
      throw DimensionMismatch("fiber profile: w_i must lie in u^perp");
    w2 += wi.squaredNorm();
  }

  // bodies of the shadow system, fixed per t
  ShadowSystem sys(K, un);
  std::vector<Polytope> bodies;
  bodies.reserve(t_grid.size());
  int i0 = 0;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (std::abs(t_grid[i]) < std::abs(t_grid[i0])) i0 = static_cast<int>(i);
    bodies.push_back(sys.at(t_grid[i]));
  }

  // indicator of f_p(t, s) <= 1 for the image body (w + s (x) u).Q^t
  Mat x(n, m);
  auto indicator = [&](const Polytope& body, const Vec& s) {
    for (int j = 0; j < m; ++j) x.col(j) = w[j] + s[j] * un;
    const double vp = lp_mixed_volume_fn(
        body, [&](const Vec& nf) { return matrix_image_support(x, Q, nf); }, p);
    return n * vp <= 1.0;
  };

  // importance sampling of s from the measure's conditional law at w
  double weight = 0.0;  // F(t) = weight * mean(chi)
  std::function<Vec(Rng&)> draw;
  const int d = n * m;
  switch (M.kind) {
    case MeasureKind::gaussian: {
      weight = std::pow(2.0 * std::numbers::pi, 0.5 * (m - d)) *
               std::exp(-0.5 * w2);
      draw = [m](Rng& rng) {
        Vec s(m);
        for (int i = 0; i < m; ++i) s[i] = rng.gaussian();
        return s;
      };
      break;
    }
    case MeasureKind::generalized_cauchy: {
      const double beta = M.beta;
      const double b2 = 1.0 + w2;
      const double nu = 2.0 * beta - m;
      if (nu <= 0.0) throw OutOfRange("fiber profile: beta too small");
      const double sigma = std::sqrt(b2 / nu);
      // Z = pi^{m/2} b^m Gamma(nu/2) / Gamma((nu+m)/2)
      const double Z = std::pow(std::numbers::pi, 0.5 * m) *
                       std::pow(b2, 0.5 * m) *
                       std::exp(std::lgamma(0.5 * nu) - std::lgamma(0.5 * (nu + m)));
      weight = std::pow(b2, -beta) * Z;
      draw = [m, nu, sigma](Rng& rng) {
        const double chi2 = 2.0 * sample_gamma(rng, 0.5 * nu);
        const double scale = sigma * std::sqrt(nu / std::max(chi2, 1e-300));
        Vec s(m);
        for (int i = 0; i < m; ++i) s[i] = scale * rng.gaussian();
        return s;
      };
      break;
    }
    default: {  // lebesgue: uniform over a box certified to cover the region
      double S = 1.0;
      Rng scan(mix64(seed ^ 0xabcddcbaULL));
      bool grew = true;
      while (grew && S < 1e6) {
        grew = false;
        for (int trial = 0; trial < 128 && !grew; ++trial) {
          Vec s(m);
          for (int i = 0; i < m; ++i) s[i] = scan.uniform(-1.0, 1.0);
          if (s.norm() < 1e-9) continue;
          s *= S / s.cwiseAbs().maxCoeff();
          for (const auto& body : bodies)
            if (indicator(body, s)) {
              grew = true;
              break;
            }
        }
        if (grew) S *= 2.0;
      }
      S *= 1.5;
      weight = std::pow(2.0 * S, m);
      draw = [m, S](Rng& rng) {
        Vec s(m);
        for (int i = 0; i < m; ++i) s[i] = rng.uniform(-S, S);
        return s;
      };
      break;
    }
  }

  const std::int64_t n_pairs = std::max<std::int64_t>(1, n_samples / 2);
  const std::size_t T = t_grid.size();
  std::vector<double> sum(T, 0.0), sumsq(T, 0.0);
  std::vector<double> dsum(T, 0.0), dsumsq(T, 0.0);
  Rng rng(seed);
  std::vector<double> chi(T);
  for (std::int64_t k = 0; k < n_pairs; ++k) {
    const Vec s = draw(rng);
    for (std::size_t i = 0; i < T; ++i) {
      const double c =
          0.5 * ((indicator(bodies[i], s) ? 1.0 : 0.0) +
                 (indicator(bodies[i], -s) ? 1.0 : 0.0));
      chi[i] = c;
    }
    for (std::size_t i = 0; i < T; ++i) {
      sum[i] += chi[i];
      sumsq[i] += chi[i] * chi[i];
      const double dd = chi[i] - chi[static_cast<std::size_t>(i0)];
      dsum[i] += dd;
      dsumsq[i] += dd * dd;
    }
  }

  FiberProfile out;
  out.t = t_grid;
  out.i0 = i0;
  out.value.resize(T);
  out.se.resize(T);
  out.diff_se.resize(T);
  const double np = static_cast<double>(n_pairs);
  for (std::size_t i = 0; i < T; ++i) {
    const double mean = sum[i] / np;
    out.value[i] = weight * mean;
    out.se[i] =
        weight * std::sqrt(std::max(0.0, sumsq[i] / np - mean * mean) / np);
    const double dmean = dsum[i] / np;
    out.diff_se[i] =
        weight * std::sqrt(std::max(0.0, dsumsq[i] / np - dmean * dmean) / np);
  }
  return out;
}

ConvexityScan joint_convexity_scan(const std::vector<Vec>& C, int n,
                                   const Vec& u, const Polytope& L,
                                   int n_segments, std::uint64_t seed) {
  const int N = static_cast<int>(C.front().size());
  const Vec un = unit(u);
  const auto basis = orthobasis_perp(un);
  Rng rng(seed);
  ConvexityScan scan;
  for (int s = 0; s < n_segments; ++s) {
    // seeded feet y_i in u^perp and segment endpoints in t-space
    std::vector<Vec> feet(N);
    for (auto& y : feet) {
      y = Vec::Zero(n);
      for (const auto& b : basis) y += rng.uniform(-1.0, 1.0) * b;
    }
    Vec ta(N), tb(N);
    for (int i = 0; i < N; ++i) {
      ta[i] = rng.uniform(-1.0, 1.0);
      tb[i] = rng.uniform(-1.0, 1.0);
    }
    auto value = [&](const Vec& t) {
      std::vector<Vec> xs(N);
      for (int i = 0; i < N; ++i) xs[i] = feet[i] + t[i] * un;
      return n * mixed_volume_first(matrix_body(xs, C), L);
    };
    try {
      const double ga = value(ta), gb = value(tb);
      const double gm = value(0.5 * (ta + tb));
      scan.scale = std::max({scan.scale, std::abs(ga), std::abs(gb)});
      scan.max_violation = std::max(scan.max_violation, gm - 0.5 * (ga + gb));
    } catch (const DegenerateSample&) {
      // probability-zero degenerate segment; skip it
    }
  }
  return scan;
}

}  // namespace pettykit
