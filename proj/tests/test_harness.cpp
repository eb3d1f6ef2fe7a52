#include <doctest.h>

#include <algorithm>

#include "pettykit/harness.hpp"
#include "pettykit/rearrange.hpp"

using namespace pettykit;

TEST_CASE("suite table lists the ten suites") {
  const auto table = suite_table();
  REQUIRE(table.size() == 10);
  const std::vector<std::string> expected = {
      "petty-classical", "petty-lpq",       "steiner-step",
      "lemma-convexity", "sp-monotone",     "shadow-invariants",
      "empirical-petty", "fiber-profile",   "rearrange-props",
      "oracle-vp"};
  for (const auto& name : expected) {
    bool found = false;
    for (const auto& s : table) found = found || s.name == name;
    CHECK_MESSAGE(found, name);
  }
  for (const auto& s : table) {
    CHECK(!s.verifies.empty());
    CHECK(!s.tolerance.empty());
  }
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(run_suite(json{{"seed", 1}}), ConfigError);
  CHECK_THROWS_AS(run_suite(json{{"suite", "no-such-suite"}}), ConfigError);
}

TEST_CASE("reports are deterministic for a fixed config") {
  const json cfg = {{"suite", "petty-classical"},
                    {"seed", 321},
                    {"polygons", 3},
                    {"product_polygons", 4}};
  const SuiteReport a = run_suite(cfg);
  const SuiteReport b = run_suite(cfg);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].id == b.cases[i].id);
    CHECK(a.cases[i].values.dump() == b.cases[i].values.dump());
  }
  CHECK(a.pass);
  CHECK(a.seed == 321);
}

TEST_CASE("report json carries the required fields") {
  const json cfg = {{"suite", "petty-classical"},
                    {"seed", 9},
                    {"polygons", 1},
                    {"product_polygons", 1}};
  const json j = run_suite(cfg).to_json();
  for (const char* key :
       {"suite", "config", "cases", "pass", "wall_seconds", "version", "seed"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j.at("version").get<std::string>() == PETTYKIT_VERSION);
  for (const auto& c : j.at("cases"))
    for (const char* key : {"id", "values", "pass"})
      CHECK_MESSAGE(c.contains(key), key);
}

TEST_CASE("body json round trip and rejection") {
  const Polytope sq = make_square(1.0);
  const Polytope back = body_from_json(body_to_json(sq));
  CHECK(hausdorff_distance(sq, back) <= 1e-15);

  CHECK_THROWS_AS(body_from_json(json{{"dim", 2}}), ConfigError);
  json flat = {{"dim", 2},
               {"vertices", {{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}}};
  CHECK_THROWS_AS(body_from_json(flat), DegenerateInput);
}

TEST_CASE("measure and density blocks round trip") {
  const RadialMeasure m = RadialMeasure::generalized_cauchy(4, 5.5);
  const RadialMeasure back = measure_from_json(measure_to_json(m));
  CHECK(back.kind == m.kind);
  CHECK(back.dim == m.dim);
  CHECK(back.beta == m.beta);
  CHECK_THROWS_AS(measure_from_json(json{{"kind", "nope"}, {"dim", 2}}),
                  ConfigError);

  GridDensity g = GridDensity::constant(2, vec2(0, 0), vec2(1, 2), 4, 0.7);
  g.values[5] = 2.5;
  const GridDensity gb = density_from_json(density_to_json(g));
  CHECK(gb.values == g.values);
  CHECK(gb.hi[1] == 2.0);
}

TEST_CASE("estimate serialization") {
  const Estimate e{1.25, 0.003, 4096, 77};
  const json j = estimate_to_json(e);
  CHECK(j.at("value") == 1.25);
  CHECK(j.at("stderr") == 0.003);
  CHECK(j.at("n") == 4096);
  CHECK(j.at("seed") == 77);
}

TEST_CASE("catalog dispatch by name") {
  CHECK(make_standard("square", json::object()).volume() ==
        doctest::Approx(4.0));
  CHECK(make_standard("kgon", json{{"k", 4}, {"circumradius", 1.0}}).volume() ==
        doctest::Approx(2.0));
  CHECK(make_standard("ball", json{{"dim", 2}, {"volume", 2.0}}).volume() ==
        doctest::Approx(2.0));
  CHECK(make_standard("random-polygon", json{{"seed", 5}, {"k", 8}}).dim() == 2);
  CHECK_THROWS_AS(make_standard("klein-bottle", json::object()), UnknownName);
  CHECK(make_standard_q("q01", json::object()).m() == 1);
  CHECK(make_standard_q("neg-simplex", json{{"m", 2}}).m() == 2);
  CHECK_THROWS_AS(make_standard_q("nope", json::object()), UnknownName);
}

TEST_CASE("sampled points export as csv") {
  const GridDensity f = GridDensity::constant(2, vec2(0, 0), vec2(1, 1), 8);
  const auto pts = sample_density(f, 5, 3);
  const std::string csv = points_to_csv(pts);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  CHECK(std::count(csv.begin(), csv.end(), ',') == 5);
}

TEST_CASE("samples scale flows into the mc budget") {
  json cfg = {{"suite", "fiber-profile"},
              {"seed", 3},
              {"instances", 1},
              {"samples", 512},
              {"samples_scale", 2.0}};
  const SuiteReport rep = run_suite(cfg);
  CHECK(rep.cases.size() == 1);
}
