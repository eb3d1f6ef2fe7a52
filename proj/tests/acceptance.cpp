// Acceptance suite: one check per headline criterion, each driven through
// the same verification suites the CLI exposes. Prints one line per
// criterion with its wall time.
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "pettykit/harness.hpp"

using namespace pettykit;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int failed_cases(const SuiteReport& rep, const std::string& prefix = "") {
  int n = 0;
  for (const auto& c : rep.cases)
    if (!c.pass && (prefix.empty() || c.id.rfind(prefix, 0) == 0)) ++n;
  return n;
}

void verdict(int idx, const char* what, bool pass, double secs,
             double budget) {
  std::printf("[ACCEPT %2d] %s — %s (%.2fs, budget %.0fs)\n", idx,
              pass ? "PASS" : "FAIL", what, secs, budget);
}

}  // namespace

TEST_CASE("criterion 1: classical Petty inequality") {
  Timer t;
  const SuiteReport rep = run_suite(json{{"suite", "petty-classical"},
                                         {"polygons", 20},
                                         {"product_polygons", 0}});
  bool pass = rep.pass;
  // exact values for the square are pinned inside the suite case
  double square_a = 0, square_b = 0;
  for (const auto& c : rep.cases)
    if (c.id == "petty square") {
      square_a = c.values.at("polar_proj_volume").get<double>();
      square_b = c.values.at("ball_polar_proj_volume").get<double>();
    }
  pass = pass && std::abs(square_a - 0.5) <= 1e-9 &&
         std::abs(square_b - 0.61685) <= 1e-3 && square_a <= square_b;
  const double secs = t.seconds();
  verdict(1, "classical Petty |polar Pi K| <= |polar Pi B_K|", pass, secs, 1);
  CHECK(pass);
  CHECK(secs < 1.0);
}

TEST_CASE("criterion 2: Petty product bound") {
  Timer t;
  const SuiteReport rep = run_suite(json{{"suite", "petty-classical"},
                                         {"polygons", 0},
                                         {"product_polygons", 50}});
  const bool pass = rep.pass;
  const double secs = t.seconds();
  verdict(2, "|K| |polar Pi K| <= pi^2/4; 64-gon near-extremal", pass, secs, 5);
  CHECK(pass);
  CHECK(secs < 5.0);
}

TEST_CASE("criterion 3: V_p facet formula vs fd limit") {
  Timer t;
  const SuiteReport rep = run_suite(json{{"suite", "oracle-vp"},
                                         {"pairs", 20},
                                         {"eps", 1e-4},
                                         {"n_dirs", 2048}});
  const bool pass = rep.pass;
  const double secs = t.seconds();
  verdict(3, "V_p oracle equivalence within 1e-3 relative", pass, secs, 30);
  CHECK(pass);
  CHECK(secs < 30.0);
}

TEST_CASE("criterion 4: convexity scans") {
  Timer t;
  const SuiteReport rep =
      run_suite(json{{"suite", "lemma-convexity"}, {"instances", 50}});
  const bool pass = rep.pass;
  const double secs = t.seconds();
  verdict(4, "Lemma 3.1 / Thm 2.1 / Cor 2.2 / Thm 2.3 t-convexity", pass,
          secs, 60);
  CHECK(pass);
  CHECK(secs < 60.0);
}

TEST_CASE("criterion 5: S_p monotone under Steiner symmetrization") {
  Timer t;
  const SuiteReport rep =
      run_suite(json{{"suite", "sp-monotone"}, {"instances", 100}});
  const bool pass = rep.pass;
  const double secs = t.seconds();
  verdict(5, "S_p(S^u K) <= S_p(K) for 100 seeded (K,u,p)", pass, secs, 10);
  CHECK(pass);
  CHECK(secs < 10.0);
}

TEST_CASE("criterion 6: generalized Petty, Steiner step and endpoint") {
  Timer t;
  const SuiteReport step = run_suite(json{{"suite", "steiner-step"}});
  const SuiteReport end = run_suite(json{{"suite", "petty-lpq"}});
  const bool pass = step.pass && end.pass;
  const double secs = t.seconds();
  verdict(6, "nu(polar Pi_{Q,p} K) <= nu(... S^u K) and <= nu(... B_K)", pass,
          secs, 600);
  CHECK(pass);
  CHECK(secs < 600.0);
}

TEST_CASE("criterion 7: fiber profile diagnostics") {
  Timer t;
  const SuiteReport rep =
      run_suite(json{{"suite", "fiber-profile"}, {"instances", 20}});
  const bool pass = rep.pass;
  const double secs = t.seconds();
  verdict(7, "F_w(t) <= F_w(0) + 3 sigma and F_w(1) = F_w(-1)", pass, secs,
          300);
  CHECK(pass);
  CHECK(secs < 300.0);
}

TEST_CASE("criterion 8: empirical comparison") {
  Timer t;
  const SuiteReport rep = run_suite(
      json{{"suite", "empirical-petty"}, {"outer", 200}, {"inner", 4096}});
  const bool pass = rep.pass;
  const double secs = t.seconds();
  verdict(8, "E nu(polar Pi_Q [X]C) <= E nu(polar Pi_Q [X*]C), 200 paired",
          pass, secs, 600);
  CHECK(pass);
  CHECK(secs < 600.0);
}

TEST_CASE("criterion 9: rearrangement properties") {
  Timer t;
  const SuiteReport rep = run_suite(json{{"suite", "rearrange-props"}});
  const bool pass = rep.pass;
  const double secs = t.seconds();
  verdict(9, "equimeasurability, mass, symmetral commutation, marginals",
          pass, secs, 30);
  CHECK(pass);
  CHECK(secs < 30.0);
}

TEST_CASE("criterion 10: symmetrization flow") {
  Timer t;
  const SuiteReport rep = run_suite(json{{"suite", "shadow-invariants"}});
  const bool flow_pass = failed_cases(rep, "flow") == 0;
  const bool pass = rep.pass && flow_pass;
  const double secs = t.seconds();
  verdict(10, "flow reaches d_H <= 0.05 diam within 200 steps, drift <= 1e-9",
          pass, secs, 30);
  CHECK(pass);
  CHECK(secs < 30.0);
}
