#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pettykit/geometry.hpp"

namespace pettykit {

/// Nonnegative cell-wise-constant density on a regular box grid. Cells are
/// indexed row-major with the last axis fastest. Cell volumes are uniform,
/// so sorting-based rearrangements preserve mass exactly.
struct GridDensity {
  int dim = 0;
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};
  std::array<int, 3> res{1, 1, 1};
  std::vector<double> values;

  std::size_t cell_count() const;
  double cell_volume() const;
  double spacing(int axis) const { return (hi[axis] - lo[axis]) / res[axis]; }
  double mass() const;
  Vec cell_center(std::size_t flat) const;
  std::size_t flat_index(const std::array<int, 3>& idx) const;

  void validate() const;

  /// Indicator of a polytope sampled at cell centers.
  static GridDensity indicator(const Polytope& P, const Vec& box_lo,
                               const Vec& box_hi, int res_per_axis);
  static GridDensity constant(int dim, const Vec& box_lo, const Vec& box_hi,
                              int res_per_axis, double value = 1.0);
};

/// Symmetric decreasing rearrangement: cells sorted by distance from the box
/// center receive the decreasingly sorted multiset of values (ties by
/// lexicographic cell index). Equimeasurable and mass-exact by construction.
GridDensity symmetric_decreasing_rearrangement(const GridDensity& f);

/// Rearrange each 1-d fiber parallel to the given coordinate axis
/// symmetrically-decreasingly about the fiber center.
GridDensity steiner_rearrangement(const GridDensity& f, int axis);

/// F(x_axis) = integral of f over the remaining axes; one value per slice.
std::vector<double> marginal_profile(const GridDensity& f, int axis);

/// i.i.d. samples: alias method over cell masses, uniform inside the cell.
std::vector<Vec> sample_density(const GridDensity& f, int n,
                                std::uint64_t seed);

double l1_distance(const GridDensity& f, const GridDensity& g);
double superlevel_volume(const GridDensity& f, double t);

}  // namespace pettykit
