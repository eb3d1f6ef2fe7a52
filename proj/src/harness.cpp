#include "pettykit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "pettykit/rng.hpp"

#ifndef PETTYKIT_VERSION
#define PETTYKIT_VERSION "0.0.0"
#endif

namespace pettykit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kDefaultSeed = 20250810;

double cfg_num(const json& c, const char* key, double dflt) {
  return c.contains(key) ? c.at(key).get<double>() : dflt;
}
std::int64_t cfg_int(const json& c, const char* key, std::int64_t dflt) {
  return c.contains(key) ? c.at(key).get<std::int64_t>() : dflt;
}

std::vector<double> t_grid(int points = tol::t_grid_points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = -1.0 + 2.0 * i / (points - 1);
  return g;
}

Vec random_dir(Rng& rng, int dim) {
  if (dim == 2) {
    const double a = rng.uniform(0.0, 2.0 * kPi);
    return vec2(std::cos(a), std::sin(a));
  }
  Vec u(dim);
  double n = 0.0;
  do {
    for (int i = 0; i < dim; ++i) u[i] = rng.gaussian();
    n = u.norm();
  } while (n < 1e-12);
  return u / n;
}

Polytope seeded_body(int dim, std::uint64_t seed, int k) {
  return dim == 2 ? make_random_polygon(seed, k)
                  : make_random_polytope3(seed, k);
}

// The (Q, p, measure-kind) grid of the generalized Petty runs.
struct LpqCombo {
  QBody Q;
  double p;
  MeasureKind nu;
  std::string id;
};

std::vector<LpqCombo> lpq_grid(int n) {
  std::vector<QBody> qs = {make_q_segment01(), make_q_segment_sym(),
                           make_q_square(), make_q_neg_simplex(2)};
  std::vector<LpqCombo> grid;
  for (const auto& q : qs) {
    for (double p : {1.0, 2.0}) {
      for (MeasureKind nu : {MeasureKind::lebesgue, MeasureKind::gaussian,
                             MeasureKind::generalized_cauchy}) {
        LpqCombo c{q, p, nu, ""};
        const char* nun = nu == MeasureKind::lebesgue    ? "leb"
                          : nu == MeasureKind::gaussian  ? "gauss"
                                                         : "cauchy";
        c.id = "Q=" + q.name() + " p=" + std::to_string(static_cast<int>(p)) +
               " nu=" + nun;
        grid.push_back(std::move(c));
      }
    }
  }
  (void)n;
  return grid;
}

RadialMeasure measure_for(MeasureKind k, int d) {
  switch (k) {
    case MeasureKind::lebesgue:
      return RadialMeasure::lebesgue(d);
    case MeasureKind::gaussian:
      return RadialMeasure::gaussian(d);
    default:
      return RadialMeasure::generalized_cauchy(d, d + 1);
  }
}

// body blocks: explicit catalog references override the seeded defaults
std::vector<std::pair<std::string, Polytope>> bodies_from_config(
    const json& cfg, std::vector<std::pair<std::string, Polytope>> dflt) {
  if (!cfg.contains("bodies")) return dflt;
  std::vector<std::pair<std::string, Polytope>> out;
  int idx = 0;
  for (const auto& b : cfg.at("bodies")) {
    try {
      if (b.contains("vertices")) {  // inline body JSON
        out.push_back({"body-" + std::to_string(idx), body_from_json(b)});
      } else {
        const std::string name = b.at("name").get<std::string>();
        out.push_back({name, make_standard(name, b)});
      }
    } catch (const UnknownName& e) {
      throw ConfigError(e.what());
    } catch (const DegenerateInput& e) {
      throw ConfigError(e.what());
    }
    ++idx;
  }
  if (out.empty()) throw ConfigError("'bodies' must not be empty");
  return out;
}

// ---------------------------------------------------------------- suites

SuiteReport suite_petty_classical(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const int n_polygons = static_cast<int>(cfg_int(cfg, "polygons", 20));
  const int n_product = static_cast<int>(cfg_int(cfg, "product_polygons", 50));

  auto polar_proj_area = [](const Polytope& K) {
    return polar(OriginBody(classical_proj_body(K))).poly().volume();
  };

  // |Pi_polar K| <= |Pi_polar B_K|
  std::vector<std::pair<std::string, Polytope>> dflt;
  dflt.push_back({"square", make_square(1.0)});
  dflt.push_back({"triangle", make_simplex(2)});
  for (int i = 0; i < n_polygons; ++i)
    dflt.push_back({"polygon-" + std::to_string(i),
                    make_random_polygon(seed + 101 * i, 6 + i % 7)});
  const auto bodies = bodies_from_config(cfg, std::move(dflt));
  for (const auto& [name, K] : bodies) {
    const double a = polar_proj_area(K);
    const double b = polar_proj_area(make_volume_ball(K, 256));
    SuiteCase c;
    c.id = "petty " + name;
    c.pass = a <= b * (1.0 + tol::exact_rel);
    c.values = {{"polar_proj_volume", a}, {"ball_polar_proj_volume", b}};
    if (name == "square") {
      const bool exact_ok = std::abs(a - 0.5) <= 1e-9 &&
                            std::abs(b - kPi * kPi / 16.0) <= 1e-3;
      c.values["exact_check"] = exact_ok;
      c.pass = c.pass && exact_ok;
    }
    rep.cases.push_back(std::move(c));
  }

  // Petty product bound |K| |Pi_polar K| <= pi^2/4
  const double bound = kPi * kPi / 4.0;
  double worst = 0.0;
  bool prod_ok = true;
  for (int i = 0; i < n_product; ++i) {
    const Polytope K = make_random_polygon(seed + 997 * i, 5 + i % 9);
    const double prod = K.volume() * polar_proj_area(K);
    worst = std::max(worst, prod);
    prod_ok = prod_ok && prod <= bound + 1e-6;
  }
  SuiteCase pc;
  pc.id = "petty product bound";
  pc.pass = prod_ok;
  pc.values = {{"worst_product", worst}, {"bound", bound}};
  rep.cases.push_back(std::move(pc));

  const Polytope gon = make_kgon(64, 1.0);
  const double gon_prod = gon.volume() * polar_proj_area(gon);
  SuiteCase gc;
  gc.id = "64-gon near extremal";
  gc.pass = gon_prod >= 0.995 * bound;
  gc.values = {{"product", gon_prod}, {"bound", bound}};
  rep.cases.push_back(std::move(gc));
  return rep;
}

// seeded polygon with the origin comfortably inside; the fd-oracle truncation
// term scales like h_K^{1-2p}, so thin slivers near the origin would inflate
// the O(eps) bias past the comparison tolerance
OriginBody well_conditioned_polygon(std::uint64_t seed, int k) {
  for (std::uint64_t j = 0;; ++j) {
    const Polytope P = make_random_polygon(seed + j, k, 0.85, 1.2);
    if (P.min_offset() >= 0.5) return OriginBody(P);
  }
}

SuiteReport suite_oracle_vp(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const int pairs = static_cast<int>(cfg_int(cfg, "pairs", 20));
  const double eps = cfg_num(cfg, "eps", tol::fd_eps);
  const int n_dirs = static_cast<int>(cfg_int(cfg, "n_dirs", tol::fd_dirs));
  const double p_list[3] = {1.0, 1.5, 2.0};
  for (int i = 0; i < pairs; ++i) {
    const OriginBody K = well_conditioned_polygon(seed + 11 * i, 5 + i % 8);
    const OriginBody L =
        well_conditioned_polygon(seed + 13 * i + 7, 5 + (i + 3) % 8);
    for (double p : p_list) {
      const double facet = lp_mixed_volume(K, L.poly(), p);
      const double fd = lp_mixed_volume_fd_oracle(K, L, p, eps, n_dirs);
      const double rel = std::abs(facet - fd) / std::abs(facet);
      SuiteCase c;
      c.id = "pair " + std::to_string(i) + " p=" + std::to_string(p);
      c.pass = rel <= tol::oracle_rel;
      c.values = {{"facet", facet}, {"fd", fd}, {"rel_err", rel}};
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

SuiteReport suite_lemma_convexity(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const int instances = static_cast<int>(cfg_int(cfg, "instances", 50));
  const auto grid = t_grid();
  const double p_list[3] = {1.0, 1.5, 2.0};

  // Lemma 3.1: t -> V_p(K_u(t), L_u(t)) for shadow systems along a common u
  for (int i = 0; i < instances; ++i) {
    const int dim = (i % 2 == 0) ? 2 : 3;
    Rng rng(seed + 7001 * i);
    const Polytope K = seeded_body(dim, seed + 3 * i, 6 + i % 8);
    const Polytope L = seeded_body(dim, seed + 3 * i + 1, 6 + (i + 2) % 8);
    const Vec u = random_dir(rng, dim);
    const double p = p_list[i % 3];
    ShadowSystem SK(K, u), SL(L, u);
    std::vector<double> vals;
    vals.reserve(grid.size());
    for (double t : grid)
      vals.push_back(lp_mixed_volume(OriginBody(SK.at(t)), SL.at(t), p));
    double scale = 0.0;
    for (double v : vals) scale = std::max(scale, std::abs(v));
    const double viol = midpoint_convexity_violation(vals);
    SuiteCase c;
    c.id = "lemma3.1 i=" + std::to_string(i) + " n=" + std::to_string(dim);
    c.pass = viol <= tol::exact_rel * scale;
    c.values = {{"violation", viol}, {"scale", scale}, {"p", p}};
    rep.cases.push_back(std::move(c));
    if (i < 3) {
      for (std::size_t g = 0; g < grid.size(); ++g)
        rep.csv_rows.push_back("lemma3.1," + std::to_string(i) + "," +
                               std::to_string(grid[g]) + "," +
                               std::to_string(vals[g]));
    }
  }

  // Thm 2.1: mixed volumes of linear parameter systems are convex in t
  for (int i = 0; i < instances; ++i) {
    const int dim = (i % 2 == 0) ? 2 : 3;
    std::vector<double> vals;
    vals.reserve(grid.size());
    if (dim == 2) {
      const auto A = make_random_lps(2, seed + 41 * i, 6);
      auto B = make_random_lps(2, seed + 41 * i + 1, 6);
      B.u = A.u;
      for (double t : grid) {
        const Polytope Ka = A.at(t), Kb = B.at(t);
        vals.push_back(
            0.5 * (minkowski_sum(Ka, Kb).volume() - Ka.volume() - Kb.volume()));
      }
    } else {
      const auto A = make_random_lps(3, seed + 43 * i, 6);
      auto B = make_random_lps(3, seed + 43 * i + 1, 6);
      auto C = make_random_lps(3, seed + 43 * i + 2, 6);
      B.u = A.u;
      C.u = A.u;
      for (double t : grid)
        vals.push_back(mixed_volume_3(A.at(t), B.at(t), C.at(t)));
    }
    double scale = 0.0;
    for (double v : vals) scale = std::max(scale, std::abs(v));
    const double viol = midpoint_convexity_violation(vals);
    SuiteCase c;
    c.id = "thm2.1 i=" + std::to_string(i) + " n=" + std::to_string(dim);
    c.pass = viol <= tol::exact_rel * scale;
    c.values = {{"violation", viol}, {"scale", scale}};
    rep.cases.push_back(std::move(c));
  }

  // Cor 2.2: |K(t)| is convex
  for (int i = 0; i < instances; ++i) {
    const int dim = (i % 2 == 0) ? 2 : 3;
    const auto A = make_random_lps(dim, seed + 57 * i, 8);
    std::vector<double> vals;
    vals.reserve(grid.size());
    for (double t : grid) vals.push_back(A.at(t).volume());
    double scale = 0.0;
    for (double v : vals) scale = std::max(scale, std::abs(v));
    const double viol = midpoint_convexity_violation(vals);
    SuiteCase c;
    c.id = "cor2.2 i=" + std::to_string(i) + " n=" + std::to_string(dim);
    c.pass = viol <= tol::exact_rel * scale;
    c.values = {{"violation", viol}, {"scale", scale}};
    rep.cases.push_back(std::move(c));
  }

  // Thm 2.3: |K_u(t) +_p L_u(t)| is convex, within 10x the measured grid bias
  const int psum_instances =
      static_cast<int>(cfg_int(cfg, "psum_instances", instances / 2));
  for (int i = 0; i < psum_instances; ++i) {
    const int dim = (i % 2 == 0) ? 2 : 3;
    Rng rng(seed + 9109 * i);
    const Polytope K = seeded_body(dim, seed + 5 * i + 2, 6 + i % 6);
    const Polytope L = seeded_body(dim, seed + 5 * i + 3, 6 + (i + 1) % 6);
    const Vec u = random_dir(rng, dim);
    const double p = p_list[i % 3];
    const int nd = dim == 2 ? 256 : 192;
    ShadowSystem SK(K, u), SL(L, u);
    std::vector<double> vals;
    vals.reserve(grid.size());
    for (double t : grid)
      vals.push_back(
          p_sum_approx(OriginBody(SK.at(t)), OriginBody(SL.at(t)), p, nd)
              .volume());
    // grid bias from doubling the direction count at a few t values
    double bias = 0.0;
    for (double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const double v1 =
          p_sum_approx(OriginBody(SK.at(t)), OriginBody(SL.at(t)), p, nd)
              .volume();
      const double v2 =
          p_sum_approx(OriginBody(SK.at(t)), OriginBody(SL.at(t)), p, 2 * nd)
              .volume();
      bias = std::max(bias, std::abs(v1 - v2));
    }
    double scale = 0.0;
    for (double v : vals) scale = std::max(scale, std::abs(v));
    const double viol = midpoint_convexity_violation(vals);
    const double allowed = std::max(10.0 * bias, tol::exact_rel * scale);
    SuiteCase c;
    c.id = "thm2.3 i=" + std::to_string(i) + " n=" + std::to_string(dim);
    c.pass = viol <= allowed;
    c.values = {{"violation", viol}, {"grid_bias", bias}, {"p", p}};
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

SuiteReport suite_sp_monotone(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const int instances = static_cast<int>(cfg_int(cfg, "instances", 100));
  const int scans = static_cast<int>(cfg_int(cfg, "scans", 20));
  const double p_list[3] = {1.0, 1.5, 2.0};

  // Cor 3.3: S_p does not increase under Steiner symmetrization
  for (int i = 0; i < instances; ++i) {
    const int dim = (i % 2 == 0) ? 2 : 3;
    Rng rng(seed + 311 * i);
    const Polytope K = seeded_body(dim, seed + 2 * i, 6 + i % 9);
    const Vec u = random_dir(rng, dim);
    const double p = p_list[i % 3];
    const double before = lp_surface_area(OriginBody(K), p);
    const double after = lp_surface_area(OriginBody(steiner(K, u)), p);
    SuiteCase c;
    c.id = "cor3.3 i=" + std::to_string(i) + " n=" + std::to_string(dim) +
           " p=" + std::to_string(p);
    c.pass = after <= before * (1.0 + tol::exact_rel);
    c.values = {{"sp_before", before}, {"sp_after", after}};
    rep.cases.push_back(std::move(c));
  }

  // Prop 3.2: t -> S_p(K_u(t)) is convex
  const auto grid = t_grid();
  for (int i = 0; i < scans; ++i) {
    const int dim = (i % 2 == 0) ? 2 : 3;
    Rng rng(seed + 733 * i);
    const Polytope K = seeded_body(dim, seed + 5 * i + 1, 6 + i % 7);
    const Vec u = random_dir(rng, dim);
    const double p = p_list[i % 3];
    ShadowSystem S(K, u);
    std::vector<double> vals;
    vals.reserve(grid.size());
    for (double t : grid)
      vals.push_back(lp_surface_area(OriginBody(S.at(t)), p));
    double scale = 0.0;
    for (double v : vals) scale = std::max(scale, std::abs(v));
    const double viol = midpoint_convexity_violation(vals);
    SuiteCase c;
    c.id = "prop3.2 i=" + std::to_string(i) + " n=" + std::to_string(dim);
    c.pass = viol <= tol::exact_rel * scale;
    c.values = {{"violation", viol}, {"scale", scale}, {"p", p}};
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

SuiteReport suite_shadow_invariants(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const int instances = static_cast<int>(cfg_int(cfg, "instances", 20));
  const int flow_steps = static_cast<int>(cfg_int(cfg, "flow_steps", 200));

  for (int i = 0; i < instances; ++i) {
    const int dim = (i % 2 == 0) ? 2 : 3;
    Rng rng(seed + 811 * i);
    const Polytope K = seeded_body(dim, seed + 7 * i, 6 + i % 8);
    const Vec u = random_dir(rng, dim);
    ShadowSystem S(K, u);
    const double sc = K.scale();
    const double d_end1 = hausdorff_distance(S.at(1.0), K);
    const double d_endm1 = hausdorff_distance(S.at(-1.0), reflect(K, u));
    const double d_steiner = hausdorff_distance(S.at(0.0), steiner(K, u));
    const double d_refl =
        hausdorff_distance(S.at(-0.3), reflect(S.at(0.3), u));
    double vol_drift = 0.0;
    for (double t : t_grid())
      vol_drift = std::max(
          vol_drift, std::abs(S.at(t).volume() - K.volume()) / K.volume());
    SuiteCase c;
    c.id = "shadow i=" + std::to_string(i) + " n=" + std::to_string(dim);
    c.pass = d_end1 <= tol::vertex_rel * sc && d_endm1 <= tol::vertex_rel * sc &&
             d_steiner <= tol::vertex_rel * sc &&
             d_refl <= tol::vertex_rel * sc && vol_drift <= tol::vertex_rel;
    c.values = {{"endpoint_t1", d_end1},
                {"endpoint_tm1", d_endm1},
                {"steiner_match", d_steiner},
                {"reflection_identity", d_refl},
                {"volume_drift", vol_drift}};
    rep.cases.push_back(std::move(c));
  }

  // symmetrization flow: square and a random pentagon; soft criterion with
  // one seed retry
  std::vector<std::pair<std::string, Polytope>> flows = {
      {"square", make_square(1.0)},
      {"pentagon", make_random_polygon(seed + 4242, 5)}};
  for (const auto& [name, K] : flows) {
    const double target = 0.05 * K.diameter();
    bool reached = false;
    double drift = 0.0, final_d = 0.0;
    int steps_used = 0;
    std::uint64_t used_seed = seed;
    for (int attempt = 0; attempt < 2 && !reached; ++attempt) {
      used_seed = seed + attempt;
      const auto steps =
          symmetrization_flow(K, flow_steps, used_seed, 5e-10, target);
      drift = 0.0;
      for (const auto& s : steps)
        drift = std::max(drift, std::abs(s.volume - K.volume()) / K.volume());
      final_d = steps.back().dist_to_ball;
      steps_used = static_cast<int>(steps.size());
      reached = final_d <= target;
      for (std::size_t j = 0; j < steps.size(); ++j)
        rep.csv_rows.push_back("flow-" + name + "," + std::to_string(j) + "," +
                               std::to_string(steps[j].dist_to_ball) + "," +
                               std::to_string(steps[j].volume));
    }
    SuiteCase c;
    c.id = "flow " + name;
    c.pass = reached && drift <= tol::exact_rel;
    c.values = {{"steps", steps_used},
                {"final_dist", final_d},
                {"target", target},
                {"volume_drift", drift},
                {"seed_used", used_seed}};
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

// shared body set for the generalized Petty suites
std::vector<std::pair<std::string, Polytope>> lpq_bodies(std::uint64_t seed) {
  return {{"square", make_square(1.0)},
          {"polygon-a", make_random_polygon(seed + 91, 7)},
          {"polygon-b", make_random_polygon(seed + 92, 10)}};
}

SuiteReport suite_petty_lpq(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const double scale = cfg_num(cfg, "samples_scale", 1.0);
  const std::int64_t inner =
      static_cast<std::int64_t>(cfg_int(cfg, "inner", 1 << 14) * scale);
  const auto bodies = bodies_from_config(cfg, lpq_bodies(seed));
  for (const auto& combo : lpq_grid(2)) {
    const int d = 2 * combo.Q.m();
    const RadialMeasure M = measure_for(combo.nu, d);
    for (const auto& [bname, K] : bodies) {
      const StarBodySpec sK(K, combo.Q, combo.p);
      const StarBodySpec sB(make_volume_ball(K, 256), combo.Q, combo.p);
      const std::uint64_t s =
          mix64(seed ^ mix64(std::hash<std::string>{}(combo.id + bname)));
      const Estimate eK = star_body_measure(sK, M, inner, s);
      const Estimate eB = star_body_measure(sB, M, inner, s);  // common dirs
      const double sig =
          std::sqrt(eK.std_error * eK.std_error + eB.std_error * eB.std_error);
      SuiteCase c;
      c.id = combo.id + " K=" + bname;
      c.pass = eK.value <= eB.value + tol::sigma_policy * sig &&
               eK.std_error <= 0.02 * eK.value &&
               eB.std_error <= 0.02 * eB.value;
      c.values = {{"nu_K", estimate_to_json(eK)},
                  {"nu_BK", estimate_to_json(eB)},
                  {"sigma", sig}};
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

SuiteReport suite_steiner_step(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const double scale = cfg_num(cfg, "samples_scale", 1.0);
  const std::int64_t inner =
      static_cast<std::int64_t>(cfg_int(cfg, "inner", 1 << 14) * scale);
  const auto bodies = bodies_from_config(cfg, lpq_bodies(seed));
  for (const auto& combo : lpq_grid(2)) {
    const int d = 2 * combo.Q.m();
    const RadialMeasure M = measure_for(combo.nu, d);
    for (const auto& [bname, K] : bodies) {
      Rng rng(mix64(seed ^ std::hash<std::string>{}(bname)));
      const Vec u = random_dir(rng, 2);
      const StarBodySpec sK(K, combo.Q, combo.p);
      const StarBodySpec sS(steiner(K, u), combo.Q, combo.p);
      const std::uint64_t s =
          mix64(seed ^ mix64(std::hash<std::string>{}(combo.id + bname) + 1));
      const Estimate eK = star_body_measure(sK, M, inner, s);
      const Estimate eS = star_body_measure(sS, M, inner, s);  // common dirs
      const double sig =
          std::sqrt(eK.std_error * eK.std_error + eS.std_error * eS.std_error);
      SuiteCase c;
      c.id = combo.id + " K=" + bname;
      c.pass = eK.value <= eS.value + tol::sigma_policy * sig &&
               eK.std_error <= 0.02 * eK.value &&
               eS.std_error <= 0.02 * eS.value;
      c.values = {{"nu_K", estimate_to_json(eK)},
                  {"nu_SuK", estimate_to_json(eS)},
                  {"sigma", sig}};
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

SuiteReport suite_fiber_profile(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const double scale = cfg_num(cfg, "samples_scale", 1.0);
  const int instances = static_cast<int>(cfg_int(cfg, "instances", 20));
  const std::int64_t samples =
      static_cast<std::int64_t>(cfg_int(cfg, "samples", 1 << 13) * scale);
  const auto grid = t_grid();
  const std::vector<QBody> qs = {make_q_segment01(), make_q_segment_sym(),
                                 make_q_square()};
  for (int i = 0; i < instances; ++i) {
    Rng rng(seed + 515 * i);
    const Polytope K = make_random_polygon(seed + 3 * i, 6 + i % 7);
    const Vec u = random_dir(rng, 2);
    const QBody& Q = qs[i % qs.size()];
    const double p = (i % 2 == 0) ? 1.0 : 2.0;
    const int m = Q.m();
    const auto basis = orthobasis_perp(u);
    std::vector<Vec> w(m);
    for (auto& wi : w) wi = rng.uniform(-0.4, 0.4) * basis[0];
    const RadialMeasure M = RadialMeasure::gaussian(2 * m);
    const auto prof =
        fiber_profile(K, Q, p, u, w, M, grid, samples, seed + 777 * i);
    bool max_at_zero = true;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      const double slack =
          tol::sigma_policy * std::max(prof.diff_se[g], 1e-15);
      if (prof.value[g] > prof.value[prof.i0] + slack) max_at_zero = false;
    }
    const double end_gap = std::abs(prof.value.front() - prof.value.back());
    const double end_sig = tol::sigma_policy *
                           std::hypot(prof.se.front(), prof.se.back());
    SuiteCase c;
    c.id = "fiber i=" + std::to_string(i) + " Q=" + Q.name() +
           " p=" + std::to_string(static_cast<int>(p));
    c.pass = max_at_zero && end_gap <= std::max(end_sig, 1e-12);
    c.values = {{"F0", prof.value[prof.i0]},
                {"max_at_zero", max_at_zero},
                {"endpoint_gap", end_gap}};
    rep.cases.push_back(std::move(c));
    if (i < 3) {
      for (std::size_t g = 0; g < grid.size(); ++g)
        rep.csv_rows.push_back("fiber," + std::to_string(i) + "," +
                               std::to_string(grid[g]) + "," +
                               std::to_string(prof.value[g]) + "," +
                               std::to_string(prof.se[g]));
    }
  }
  return rep;
}

SuiteReport suite_empirical_petty(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const double scale = cfg_num(cfg, "samples_scale", 1.0);
  const int outer = static_cast<int>(cfg_int(cfg, "outer", 200) * scale);
  const std::int64_t inner =
      static_cast<std::int64_t>(cfg_int(cfg, "inner", 1 << 12) * scale);

  // C catalog: [0,1]^3 and conv{0, e1, e2, e3} as vertex lists in R^3
  auto cube_c = [] {
    std::vector<Vec> C;
    for (int mask = 0; mask < 8; ++mask)
      C.push_back(vec3(mask & 1, (mask >> 1) & 1, (mask >> 2) & 1));
    return C;
  }();
  auto simplex_c = [] {
    std::vector<Vec> C = {vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0),
                          vec3(0, 0, 1)};
    return C;
  }();

  // densities: uniform on offset unit squares
  Rng rng(seed + 31337);
  std::vector<EmpiricalDensity> dens;
  for (int i = 0; i < 3; ++i) {
    const Vec off = vec2(rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8));
    dens.push_back(EmpiricalDensity::uniform(
        make_box(off, off + vec2(1.0, 1.0))));
  }

  for (const auto& [cname, C] :
       std::vector<std::pair<std::string, std::vector<Vec>>>{
           {"cube", cube_c}, {"simplex", simplex_c}}) {
    for (MeasureKind nu : {MeasureKind::gaussian, MeasureKind::lebesgue}) {
      EmpiricalConfig ec;
      ec.n = 2;
      ec.C = C;
      ec.c_name = cname;
      ec.Q = make_q_segment01();
      ec.densities = dens;
      ec.measure = measure_for(nu, 2);
      ec.outer = outer;
      ec.inner = inner;
      ec.seed = mix64(seed ^ std::hash<std::string>{}(cname) ^
                      static_cast<std::uint64_t>(nu));
      const PairedReport pr = paired_comparison(ec);
      SuiteCase c;
      c.id = "thm1.4 C=" + cname + " nu=" + ec.measure.kind_name();
      c.pass = pr.pass;
      c.values = {{"raw", estimate_to_json(pr.raw)},
                  {"rearranged", estimate_to_json(pr.rearranged)},
                  {"diff", pr.diff},
                  {"paired_stderr", pr.diff_se},
                  {"inner_variance_share",
                   json{{"raw", pr.inner_share_raw},
                        {"rearranged", pr.inner_share_rearranged}}}};
      rep.cases.push_back(std::move(c));
    }
  }

  // joint convexity of t -> n V(C_y(t)[n-1], L) along random segments
  {
    Rng r2(seed + 99);
    const Vec u = random_dir(r2, 2);
    const Polytope L = make_kgon(32, 1.0);
    const auto scan = joint_convexity_scan(cube_c, 2, u, L, 200, seed + 5);
    SuiteCase c;
    c.id = "sec4 joint convexity";
    c.pass = scan.max_violation <= tol::exact_rel * scan.scale;
    c.values = {{"violation", scan.max_violation}, {"scale", scan.scale}};
    rep.cases.push_back(std::move(c));
  }

  // rotation invariance: rotating every density support leaves both arms
  // unchanged within MC noise
  {
    const double a = 0.7;
    Mat R(2, 2);
    R << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    EmpiricalConfig base;
    base.n = 2;
    base.C = simplex_c;
    base.Q = make_q_segment01();
    base.densities = dens;
    base.measure = RadialMeasure::gaussian(2);
    base.outer = std::max(32, outer / 4);
    base.inner = inner;
    base.seed = seed + 2024;
    EmpiricalConfig rot = base;
    rot.densities.clear();
    Rng rr(seed + 31337);
    for (int i = 0; i < 3; ++i) {
      const Vec off = vec2(rr.uniform(-0.8, 0.8), rr.uniform(-0.8, 0.8));
      const Polytope sq = make_box(off, off + vec2(1.0, 1.0));
      rot.densities.push_back(EmpiricalDensity::uniform(linear_map(sq, R)));
    }
    const Estimate e0 = expected_measure(base, Arm::raw);
    const Estimate e1 = expected_measure(rot, Arm::raw);
    // the rearranged arms are centered balls either way; radii agree up to
    // the rounding of the rotated support's volume
    const Estimate r0 = expected_measure(base, Arm::rearranged);
    const Estimate r1 = expected_measure(rot, Arm::rearranged);
    const double sig =
        std::sqrt(e0.std_error * e0.std_error + e1.std_error * e1.std_error);
    const double rearr_gap = std::abs(r0.value - r1.value);
    SuiteCase c;
    c.id = "rotation invariance";
    c.pass = std::abs(e0.value - e1.value) <= tol::sigma_policy * sig &&
             rearr_gap <= 1e-9 * r0.value;
    c.values = {{"base", estimate_to_json(e0)},
                {"rotated", estimate_to_json(e1)},
                {"rearranged_arm_gap", rearr_gap}};
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

SuiteReport suite_rearrange_props(const json& cfg) {
  SuiteReport rep;
  const std::uint64_t seed = cfg_int(cfg, "seed", kDefaultSeed);
  const int res = static_cast<int>(cfg_int(cfg, "resolution", 256));

  // seeded density: equimeasurability and mass conservation
  {
    Rng rng(seed);
    GridDensity f = GridDensity::constant(2, vec2(-1, -1), vec2(1, 1), 64);
    for (auto& v : f.values) v = rng.uniform(0.0, 1.0);
    const GridDensity fs = symmetric_decreasing_rearrangement(f);
    std::vector<double> a = f.values, b = fs.values;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const bool equi = a == b;  // multiset equality, exact
    const double mass_rel =
        std::abs(fs.mass() - f.mass()) / f.mass();
    const GridDensity st = steiner_rearrangement(f, 0);
    const double mass_rel2 = std::abs(st.mass() - f.mass()) / f.mass();
    // superlevel volumes match exactly between distinct cell values
    bool superlevel_ok = true;
    for (double t : {0.1, 0.33, 0.5, 0.77, 0.9})
      superlevel_ok = superlevel_ok &&
                      superlevel_volume(f, t) == superlevel_volume(fs, t);
    SuiteCase c;
    c.id = "equimeasurability + mass";
    c.pass = equi && mass_rel <= 1e-12 && mass_rel2 <= 1e-12 && superlevel_ok;
    c.values = {{"equimeasurable", equi},
                {"sdr_mass_drift", mass_rel},
                {"steiner_mass_drift", mass_rel2},
                {"superlevel_exact", superlevel_ok}};
    rep.cases.push_back(std::move(c));
  }

  // indicator of the unit square rearranges to the centered disk
  {
    const Polytope sq = make_box(vec2(0, 0), vec2(1, 1));
    const GridDensity f =
        GridDensity::indicator(sq, vec2(-2, -2), vec2(2, 2), res);
    const GridDensity fs = symmetric_decreasing_rearrangement(f);
    const double r = 1.0 / std::sqrt(kPi);
    const GridDensity disk = GridDensity::indicator(
        make_kgon_area(512, 1.0), vec2(-2, -2), vec2(2, 2), res);
    const double sym_diff = l1_distance(fs, disk);
    (void)r;
    SuiteCase c;
    c.id = "square indicator -> disk";
    c.pass = sym_diff <= 0.02 * f.mass();
    c.values = {{"sym_diff_mass", sym_diff}, {"mass", f.mass()}};
    rep.cases.push_back(std::move(c));
  }

  // grid Steiner rearrangement commutes with the exact polytope symmetral
  {
    const Polytope tri = make_simplex(2);
    const GridDensity f =
        GridDensity::indicator(tri, vec2(-2, -2), vec2(2, 2), res);
    const GridDensity fu = steiner_rearrangement(f, 1);
    const Polytope sym = steiner(tri, vec2(0.0, 1.0));
    const GridDensity g =
        GridDensity::indicator(sym, vec2(-2, -2), vec2(2, 2), res);
    const double cell_diag = std::hypot(f.spacing(0), f.spacing(1));
    const double perim = 2.0 + std::sqrt(2.0);
    const double bound = 4.0 * perim * cell_diag;
    const double sym_diff = l1_distance(fu, g);
    SuiteCase c;
    c.id = "steiner rearrangement vs exact symmetral";
    c.pass = sym_diff <= bound;
    c.values = {{"sym_diff_mass", sym_diff}, {"bound", bound}};
    rep.cases.push_back(std::move(c));
  }

  // Cor 2.6: marginals of convex indicators are concave up to a cell jump
  {
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Polytope K = make_random_polygon(seed + 17 * i, 5 + i % 7);
      const GridDensity f =
          GridDensity::indicator(K, vec2(-2, -2), vec2(2, 2), res);
      const auto prof = marginal_profile(f, 0);
      // center-counting puts each column within one cell value of the true
      // chord length, so a concavity defect can reach two jumps
      const double allowed = 2.0 * f.spacing(1);
      double viol = -1e300;
      for (std::size_t j = 1; j + 1 < prof.size(); ++j) {
        if (prof[j - 1] > 0.0 && prof[j + 1] > 0.0)
          viol = std::max(viol,
                          0.5 * (prof[j - 1] + prof[j + 1]) - prof[j] - allowed);
      }
      worst = std::max(worst, viol);
      ok = ok && viol <= 0.0;
    }
    SuiteCase c;
    c.id = "cor2.6 marginal concavity";
    c.pass = ok;
    c.values = {{"worst_violation_minus_jump", worst}};
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

using SuiteFn = SuiteReport (*)(const json&);

struct SuiteEntry {
  const char* name;
  const char* verifies;
  const char* tolerance;
  SuiteFn fn;
};

const SuiteEntry kSuites[] = {
    {"petty-classical", "classical Petty inequality + product bound",
     "exact paths, 1e-9 rel; product bound +1e-6", suite_petty_classical},
    {"petty-lpq", "Thm 1.2 endpoint: nu(Pi_polar_{Q,p} K) <= nu(... B_K)",
     "3 sigma, stderr <= 2% of value", suite_petty_lpq},
    {"steiner-step", "Thm 1.2 Steiner step: nu(...K) <= nu(...S^u K)",
     "3 sigma, stderr <= 2% of value", suite_steiner_step},
    {"lemma-convexity", "Lemma 3.1, Thm 2.1, Cor 2.2, Thm 2.3 t-convexity",
     "1e-9 x scale (exact paths); 10x grid bias (p-sums)",
     suite_lemma_convexity},
    {"sp-monotone", "Cor 3.3 S_p monotone under Steiner; Prop 3.2 convexity",
     "1e-9 relative", suite_sp_monotone},
    {"shadow-invariants", "shadow system identities + symmetrization flow",
     "1e-12 x scale identities; flow d_H <= 0.05 diam, drift 1e-9",
     suite_shadow_invariants},
    {"empirical-petty", "Thm 1.4 empirical comparison (p = 1)",
     "3 sigma on paired difference", suite_empirical_petty},
    {"fiber-profile", "Thm 1.2 proof: F_y(t) <= F_y(0), F_y even",
     "3 sigma per t", suite_fiber_profile},
    {"rearrange-props", "rearrangement properties + Cor 2.6 marginals",
     "exact equimeasurability; mass 1e-12; grid bounds",
     suite_rearrange_props},
    {"oracle-vp", "V_p facet formula vs finite-difference limit",
     "1e-3 relative (eps 1e-4, 2048 dirs)", suite_oracle_vp},
};

}  // namespace

json SuiteReport::to_json() const {
  json cs = json::array();
  for (const auto& c : cases) {
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(
                      mix64(std::hash<std::string>{}(c.id) ^ seed)));
    cs.push_back(json{{"id", c.id},
                      {"digest", digest},
                      {"values", c.values},
                      {"pass", c.pass}});
  }
  return json{{"suite", suite},     {"config", config},
              {"cases", cs},        {"pass", pass},
              {"wall_seconds", wall_seconds}, {"version", version},
              {"seed", seed}};
}

std::vector<SuiteInfo> suite_table() {
  std::vector<SuiteInfo> out;
  for (const auto& s : kSuites) out.push_back({s.name, s.verifies, s.tolerance});
  return out;
}

SuiteReport run_suite(const json& config) {
  if (!config.contains("suite")) throw ConfigError("config needs 'suite'");
  const std::string name = config.at("suite").get<std::string>();
  for (const auto& s : kSuites) {
    if (name == s.name) {
      const auto start = std::chrono::steady_clock::now();
      SuiteReport rep = s.fn(config);
      rep.suite = name;
      rep.config = config;
      if (!rep.config.contains("seed")) rep.config["seed"] = kDefaultSeed;
      rep.seed = rep.config.at("seed").get<std::uint64_t>();
      rep.version = PETTYKIT_VERSION;
      rep.pass = true;
      for (const auto& c : rep.cases) rep.pass = rep.pass && c.pass;
      rep.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                        start)
              .count();
      return rep;
    }
  }
  throw ConfigError("unknown suite: " + name);
}

int cli_main(int argc, char** argv) {
  auto usage = [] {
    std::printf(
        "usage:\n"
        "  pettykit list\n"
        "  pettykit run --config <file.json> [--seed N] [--out report.json]\n"
        "               [--samples-scale X]\n");
  };
  if (argc < 2) {
    usage();
    return 2;
  }
  const std::string cmd = argv[1];
  if (cmd == "list") {
    std::printf("%-18s %-58s %s\n", "suite", "verifies", "tolerance");
    for (const auto& s : suite_table())
      std::printf("%-18s %-58s %s\n", s.name.c_str(), s.verifies.c_str(),
                  s.tolerance.c_str());
    std::printf(
        "\nflags: --config <file> --seed <N> --out <path> "
        "--samples-scale <X>; env PETTYKIT_THREADS caps workers\n");
    return 0;
  }
  if (cmd != "run") {
    usage();
    return 2;
  }
  std::string config_path, out_path;
  double samples_scale = 0.0;
  std::int64_t seed_override = -1;
  for (int i = 2; i < argc; ++i) {
    const std::string a = argv[i];
    auto next = [&]() -> const char* {
      if (i + 1 >= argc) throw ConfigError("missing value for " + a);
      return argv[++i];
    };
    try {
      if (a == "--config")
        config_path = next();
      else if (a == "--out")
        out_path = next();
      else if (a == "--seed")
        seed_override = std::stoll(next());
      else if (a == "--samples-scale")
        samples_scale = std::stod(next());
      else {
        std::fprintf(stderr, "unknown flag: %s\n", a.c_str());
        return 2;
      }
    } catch (const std::exception& e) {
      std::fprintf(stderr, "argument error: %s\n", e.what());
      return 2;
    }
  }
  if (config_path.empty()) {
    usage();
    return 2;
  }
  try {
    json cfg = json::parse(read_text_file(config_path));
    if (seed_override >= 0) cfg["seed"] = seed_override;
    if (samples_scale > 0.0) cfg["samples_scale"] = samples_scale;
    const SuiteReport rep = run_suite(cfg);
    int failed = 0;
    for (const auto& c : rep.cases)
      if (!c.pass) ++failed;
    std::printf("suite %-18s cases %3zu  failed %d  wall %.2fs  %s\n",
                rep.suite.c_str(), rep.cases.size(), failed, rep.wall_seconds,
                rep.pass ? "PASS" : "FAIL");
    for (const auto& c : rep.cases)
      if (!c.pass)
        std::printf("  FAIL %s: %s\n", c.id.c_str(), c.values.dump().c_str());
    if (!out_path.empty()) {
      write_text_file(out_path, rep.to_json().dump(2) + "\n");
      if (!rep.csv_rows.empty()) {
        std::string csv = "series,index,x,y,extra\n";
        for (const auto& row : rep.csv_rows) {
          const auto commas = std::count(row.begin(), row.end(), ',');
          csv += row + (commas < 4 ? std::string(4 - commas, ',') : "") + "\n";
        }
        write_text_file(out_path + ".csv", csv);
      }
    }
    return rep.pass ? 0 : 1;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "config parse error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

}  // namespace pettykit
