#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pettykit/bodies.hpp"
#include "pettykit/rearrange.hpp"
#include "pettykit/symmetrize.hpp"
#include "pettykit/rng.hpp"

using namespace pettykit;

namespace {

GridDensity seeded_density(std::uint64_t seed, int res = 64) {
  Rng rng(seed);
  GridDensity f = GridDensity::constant(2, vec2(-1, -1), vec2(1, 1), res);
  for (auto& v : f.values) v = rng.uniform(0.0, 1.0);
  return f;
}

}  // namespace

TEST_CASE("indicator of the unit square rearranges to the centered disk") {
  const GridDensity f = GridDensity::indicator(
      make_box(vec2(0, 0), vec2(1, 1)), vec2(-2, -2), vec2(2, 2), 256);
  const GridDensity fs = symmetric_decreasing_rearrangement(f);
  const GridDensity disk = GridDensity::indicator(
      make_kgon_area(512, 1.0), vec2(-2, -2), vec2(2, 2), 256);
  CHECK(l1_distance(fs, disk) <= 0.02 * f.mass());
  CHECK(fs.mass() == doctest::Approx(f.mass()).epsilon(1e-12));
}

TEST_CASE("radially decreasing densities are fixed points") {
  GridDensity f = GridDensity::constant(2, vec2(-1, -1), vec2(1, 1), 64);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = std::exp(-f.cell_center(i).squaredNorm());
  const GridDensity fs = symmetric_decreasing_rearrangement(f);
  CHECK(l1_distance(fs, f) <= 1e-12 * f.mass());
}

TEST_CASE("superlevel volumes are preserved exactly") {
  const GridDensity f = seeded_density(1);
  const GridDensity fs = symmetric_decreasing_rearrangement(f);
  for (double t : {0.05, 0.21, 0.5, 0.77, 0.93})
    CHECK(superlevel_volume(f, t) == superlevel_volume(fs, t));
  // equimeasurability: identical value multisets
  auto a = f.values, b = fs.values;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("steiner rearrangement matches the exact polytope symmetral") {
  const Polytope tri = make_simplex(2);
  const GridDensity f =
      GridDensity::indicator(tri, vec2(-2, -2), vec2(2, 2), 256);
  const GridDensity fu = steiner_rearrangement(f, 1);
  const GridDensity g = GridDensity::indicator(
      steiner(tri, vec2(0, 1)), vec2(-2, -2), vec2(2, 2), 256);
  const double cell_diag = std::hypot(f.spacing(0), f.spacing(1));
  CHECK(l1_distance(fu, g) <= 4.0 * (2.0 + std::sqrt(2.0)) * cell_diag);
}

TEST_CASE("axis-symmetric decreasing densities are steiner fixed points") {
  GridDensity f = GridDensity::constant(2, vec2(-1, -1), vec2(1, 1), 32);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    f.values[i] = std::exp(-f.cell_center(i).squaredNorm());
  for (int axis : {0, 1})
    CHECK(l1_distance(steiner_rearrangement(f, axis), f) <= 1e-12 * f.mass());
}

TEST_CASE("iterated axis rearrangement approaches the full rearrangement") {
  GridDensity f = seeded_density(7, 48);
  const GridDensity fstar = symmetric_decreasing_rearrangement(f);
  double prev = l1_distance(f, fstar);
  const double initial = prev;
  for (int round = 0; round < 10; ++round) {
    f = steiner_rearrangement(f, round % 2);
    const double d = l1_distance(f, fstar);
    CHECK(d <= prev + 1e-9 * f.mass());  // L1 contraction per step
    prev = d;
  }
  CHECK(prev < 0.9 * initial);
}

TEST_CASE("mass conservation across all transforms") {
  const GridDensity f = seeded_density(3);
  CHECK(symmetric_decreasing_rearrangement(f).mass() ==
        doctest::Approx(f.mass()).epsilon(1e-12));
  CHECK(steiner_rearrangement(f, 0).mass() ==
        doctest::Approx(f.mass()).epsilon(1e-12));
  const auto prof = marginal_profile(f, 0);
  double m = 0.0;
  for (double v : prof) m += v * f.spacing(0);
  CHECK(m == doctest::Approx(f.mass()).epsilon(1e-12));
}

TEST_CASE("marginal of the disk indicator is the chord length") {
  const GridDensity f = GridDensity::indicator(make_kgon(512, 1.0),
                                               vec2(-2, -2), vec2(2, 2), 256);
  const auto prof = marginal_profile(f, 0);
  for (int j = 0; j < 256; ++j) {
    const double x = -2.0 + (j + 0.5) * f.spacing(0);
    if (std::abs(x) > 0.95) continue;
    const double chord = 2.0 * std::sqrt(1.0 - x * x);
    CHECK(std::abs(prof[j] - chord) <= 3.0 * f.spacing(1));
  }
}

TEST_CASE("marginal of a product density is proportional to the factor") {
  GridDensity f = GridDensity::constant(2, vec2(-1, -1), vec2(1, 1), 32);
  auto g = [](double x) { return 1.0 + 0.5 * std::sin(3.0 * x); };
  auto h = [](double y) { return std::exp(-y * y); };
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const Vec c = f.cell_center(i);
    f.values[i] = g(c[0]) * h(c[1]);
  }
  const auto prof = marginal_profile(f, 0);  // integrates over y: prop to g
  const double ratio0 = prof[3] / g(f.cell_center(0)[0] + 3 * f.spacing(0));
  for (int j = 0; j < 32; ++j) {
    const double x = -1.0 + (j + 0.5) * f.spacing(0);
    CHECK(prof[j] / g(x) == doctest::Approx(ratio0).epsilon(1e-9));
  }
}

TEST_CASE("sampling: mean, support and goodness of fit") {
  const GridDensity uni =
      GridDensity::constant(2, vec2(0, 0), vec2(1, 1), 16);
  const auto pts = sample_density(uni, 20000, 9);
  Vec mean = Vec::Zero(2);
  for (const auto& p : pts) mean += p;
  mean /= static_cast<double>(pts.size());
  const double sig = 3.0 / std::sqrt(12.0 * pts.size());
  CHECK(std::abs(mean[0] - 0.5) <= sig);
  CHECK(std::abs(mean[1] - 0.5) <= sig);

  // indicator density: all samples in the support
  const GridDensity ind = GridDensity::indicator(
      make_kgon(64, 0.8), vec2(-1, -1), vec2(1, 1), 64);
  for (const auto& p : sample_density(ind, 2000, 10))
    CHECK(p.norm() <= 0.85);

  // chi^2 goodness of fit on a 4x4 coarsening of a seeded density
  const GridDensity f = seeded_density(11, 16);
  const int n = 100000;
  const auto samples = sample_density(f, n, 12);
  std::array<double, 16> expected{}, observed{};
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const Vec c = f.cell_center(i);
    const int bx = std::min(3, static_cast<int>((c[0] + 1.0) / 0.5));
    const int by = std::min(3, static_cast<int>((c[1] + 1.0) / 0.5));
    expected[4 * bx + by] += f.values[i];
  }
  double total = 0.0;
  for (double e : expected) total += e;
  for (auto& e : expected) e *= n / total;
  for (const auto& p : samples) {
    const int bx = std::min(3, static_cast<int>((p[0] + 1.0) / 0.5));
    const int by = std::min(3, static_cast<int>((p[1] + 1.0) / 0.5));
    observed[4 * bx + by] += 1.0;
  }
  double chi2 = 0.0;
  for (int b = 0; b < 16; ++b)
    chi2 += (observed[b] - expected[b]) * (observed[b] - expected[b]) /
            expected[b];
  CHECK(chi2 <= 30.578);  // chi^2 critical value, df 15, alpha 0.01
}

TEST_CASE("grid density validation") {
  GridDensity g = GridDensity::constant(2, vec2(0, 0), vec2(1, 1), 4);
  g.values[3] = -0.5;
  CHECK_THROWS_AS(g.validate(), DegenerateInput);
  g.values[3] = 0.0;
  g.values.pop_back();
  CHECK_THROWS_AS(g.validate(), DimensionMismatch);
}
