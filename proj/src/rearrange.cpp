#include "pettykit/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pettykit/rng.hpp"

namespace pettykit {

std::size_t GridDensity::cell_count() const {
  std::size_t n = 1;
  for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(res[a]);
  return n;
}

double GridDensity::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= spacing(a);
  return v;
}

double GridDensity::mass() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * cell_volume();
}

std::size_t GridDensity::flat_index(const std::array<int, 3>& idx) const {
  std::size_t f = 0;
  for (int a = 0; a < dim; ++a) f = f * res[a] + idx[a];
  return f;
}

Vec GridDensity::cell_center(std::size_t flat) const {
  std::array<int, 3> idx{};
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % res[a]);
    flat /= res[a];
  }
  Vec c(dim);
  for (int a = 0; a < dim; ++a) c[a] = lo[a] + (idx[a] + 0.5) * spacing(a);
  return c;
}

void GridDensity::validate() const {
  if (dim < 1 || dim > 3) throw DegenerateInput("grid density: dim 1..3");
  for (int a = 0; a < dim; ++a) {
    if (!(hi[a] > lo[a]) || res[a] < 1)
      throw DegenerateInput("grid density: bad box or resolution");
  }
  if (values.size() != cell_count())
    throw DimensionMismatch("grid density: value count mismatch");
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DegenerateInput("grid density: values must be finite and >= 0");
  if (!(mass() > 0.0)) throw DegenerateInput("grid density: zero mass");
}

GridDensity GridDensity::indicator(const Polytope& P, const Vec& box_lo,
                                   const Vec& box_hi, int res_per_axis) {
  GridDensity g;
  g.dim = P.dim();
  for (int a = 0; a < g.dim; ++a) {
    g.lo[a] = box_lo[a];
    g.hi[a] = box_hi[a];
    g.res[a] = res_per_axis;
  }
  g.values.assign(g.cell_count(), 0.0);
  for (std::size_t i = 0; i < g.values.size(); ++i)
    if (P.contains(g.cell_center(i))) g.values[i] = 1.0;
  g.validate();
  return g;
}

GridDensity GridDensity::constant(int dim, const Vec& box_lo, const Vec& box_hi,
                                  int res_per_axis, double value) {
  GridDensity g;
  g.dim = dim;
  for (int a = 0; a < dim; ++a) {
    g.lo[a] = box_lo[a];
    g.hi[a] = box_hi[a];
    g.res[a] = res_per_axis;
  }
  g.values.assign(g.cell_count(), value);
  g.validate();
  return g;
}

GridDensity symmetric_decreasing_rearrangement(const GridDensity& f) {
  f.validate();
  const std::size_t n = f.values.size();
  Vec center(f.dim);
  for (int a = 0; a < f.dim; ++a) center[a] = 0.5 * (f.lo[a] + f.hi[a]);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> dist2(n);
  for (std::size_t i = 0; i < n; ++i)
    dist2[i] = (f.cell_center(i) - center).squaredNorm();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (dist2[a] != dist2[b]) return dist2[a] < dist2[b];
    return a < b;
  });

  std::vector<double> sorted = f.values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  GridDensity out = f;
  for (std::size_t k = 0; k < n; ++k) out.values[order[k]] = sorted[k];
  return out;
}

GridDensity steiner_rearrangement(const GridDensity& f, int axis) {
  f.validate();
  if (axis < 0 || axis >= f.dim) throw OutOfRange("steiner_rearrangement axis");
  const int L = f.res[axis];

  // positions ordered by distance from the fiber center, near ties to the left
  std::vector<int> place(L);
  std::iota(place.begin(), place.end(), 0);
  const double c = 0.5 * (L - 1);
  std::sort(place.begin(), place.end(), [&](int a, int b) {
    const double da = std::abs(a - c), db = std::abs(b - c);
    if (da != db) return da < db;
    return a < b;
  });

  GridDensity out = f;
  std::array<int, 3> idx{};
  std::vector<double> fiber(L);
  // iterate over all fibers: fix the indices on the other axes
  std::array<int, 3> other_res{1, 1, 1};
  std::vector<int> other_axes;
  for (int a = 0; a < f.dim; ++a)
    if (a != axis) {
      other_axes.push_back(a);
      other_res[other_axes.size() - 1] = f.res[a];
    }
  const int n_fibers = other_res[0] * other_res[1];
  for (int fi = 0; fi < n_fibers; ++fi) {
    int rem = fi;
    for (std::size_t k = 0; k < other_axes.size(); ++k) {
      idx[other_axes[k]] = rem % other_res[k];
      rem /= other_res[k];
    }
    for (int i = 0; i < L; ++i) {
      idx[axis] = i;
      fiber[i] = f.values[f.flat_index(idx)];
    }
    std::sort(fiber.begin(), fiber.end(), std::greater<>());
    for (int k = 0; k < L; ++k) {
      idx[axis] = place[k];
      out.values[out.flat_index(idx)] = fiber[k];
    }
  }
  return out;
}

std::vector<double> marginal_profile(const GridDensity& f, int axis) {
  f.validate();
  if (axis < 0 || axis >= f.dim) throw OutOfRange("marginal_profile axis");
  std::vector<double> prof(f.res[axis], 0.0);
  double slice_measure = 1.0;
  for (int a = 0; a < f.dim; ++a)
    if (a != axis) slice_measure *= f.spacing(a);
  std::array<int, 3> idx{};
  for (std::size_t flat = 0; flat < f.values.size(); ++flat) {
    std::size_t rem = flat;
    for (int a = f.dim - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(rem % f.res[a]);
      rem /= f.res[a];
    }
    prof[idx[axis]] += f.values[flat] * slice_measure;
  }
  return prof;
}

std::vector<Vec> sample_density(const GridDensity& f, int n,
                                std::uint64_t seed) {
  f.validate();
  const std::size_t m = f.values.size();
  // Vose alias method on cell masses
  const double total = std::accumulate(f.values.begin(), f.values.end(), 0.0);
  std::vector<double> prob(m);
  std::vector<std::size_t> alias(m, 0);
  std::vector<double> scaled(m);
  std::vector<std::size_t> small, large;
  for (std::size_t i = 0; i < m; ++i) {
    scaled[i] = f.values[i] * m / total;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back(), l = large.back();
    small.pop_back();
    large.pop_back();
    prob[s] = scaled[s];
    alias[s] = l;
    scaled[l] = scaled[l] + scaled[s] - 1.0;
    (scaled[l] < 1.0 ? small : large).push_back(l);
  }
  for (std::size_t i : large) prob[i] = 1.0;
  for (std::size_t i : small) prob[i] = 1.0;

  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const std::size_t cell = static_cast<std::size_t>(rng.below(m));
    const std::size_t chosen = rng.uniform() < prob[cell] ? cell : alias[cell];
    Vec c = f.cell_center(chosen);
    for (int a = 0; a < f.dim; ++a)
      c[a] += (rng.uniform() - 0.5) * f.spacing(a);
    out.push_back(std::move(c));
  }
  return out;
}

double l1_distance(const GridDensity& f, const GridDensity& g) {
  if (f.values.size() != g.values.size())
    throw DimensionMismatch("l1_distance: grids differ");
  double s = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    s += std::abs(f.values[i] - g.values[i]);
  return s * f.cell_volume();
}

double superlevel_volume(const GridDensity& f, double t) {
  std::size_t n = 0;
  for (double v : f.values)
    if (v > t) ++n;
  return n * f.cell_volume();
}

}  // namespace pettykit
