#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pettykit/geometry.hpp"

namespace pettykit {

/// Shadow system K_u(t), t in [-1,1]: the volume-preserving linear parameter
/// system interpolating K (t=1), its reflection about u^perp (t=-1) and the
/// Steiner symmetral (t=0). Fibers over projected vertices are cached at
/// construction; for polytopes the chord breakpoints are a subset of the
/// vertex projections, so evaluation is exact.
class ShadowSystem {
 public:
  ShadowSystem(Polytope K, const Vec& u);

  /// Body at parameter t; throws OutOfRange for |t| > 1.
  Polytope at(double t) const;

  const Polytope& base() const { return base_; }
  const Vec& direction() const { return u_; }

  struct Fiber {
    Vec foot;   // point of u^perp (ambient coordinates)
    double lo;  // min of <x,u> on the fiber through foot
    double hi;  // max of <x,u> on the fiber through foot
  };
  const std::vector<Fiber>& fibers() const { return fibers_; }

 private:
  Polytope base_;
  Vec u_;
  std::vector<Fiber> fibers_;
};

/// Steiner symmetral S^u(K); volume-preserving, symmetric about u^perp.
Polytope steiner(const Polytope& K, const Vec& u);

struct FlowStep {
  double dist_to_ball = 0.0;
  double volume = 0.0;
  int n_vertices = 0;
  std::optional<Polytope> body;  // populated when keep_bodies is set
};

/// Iterated Steiner symmetrization along seeded uniform random directions,
/// reporting after each step the Hausdorff distance to the origin-centered
/// equal-volume ball approximation. In the plane, vertices are pruned with a
/// total area budget of prune_budget_rel * |K| so the iterate count stays
/// tractable; the induced volume drift is bounded by the same budget.
/// A positive stop_dist ends the flow once that distance is reached.
std::vector<FlowStep> symmetrization_flow(const Polytope& K, int n_steps,
                                          std::uint64_t seed,
                                          double prune_budget_rel = 1e-10,
                                          double stop_dist = 0.0,
                                          bool keep_bodies = false);

}  // namespace pettykit
