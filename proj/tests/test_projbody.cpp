#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pettykit/projbody.hpp"
#include "pettykit/rng.hpp"

using namespace pettykit;

TEST_CASE("matrix image support, m = 1 segments") {
  Rng rng(1);
  const QBody q01 = make_q_segment01();
  const QBody qsym = make_q_segment_sym();
  for (int i = 0; i < 30; ++i) {
    Mat x(2, 1);
    x << rng.uniform(-2, 2), rng.uniform(-2, 2);
    const Vec u = vec2(rng.gaussian(), rng.gaussian()).normalized();
    const double dot = x.col(0).dot(u);
    CHECK(matrix_image_support(x, q01, u) ==
          doctest::Approx(std::max(0.0, dot)));
    CHECK(matrix_image_support(x, qsym, u) == doctest::Approx(std::abs(dot)));
  }
}

TEST_CASE("matrix image support equals direct image maximization") {
  Rng rng(2);
  const QBody q = make_q_square();
  for (int i = 0; i < 50; ++i) {
    Mat x(2, 2);
    x << rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
        rng.uniform(-2, 2);
    const Vec u = vec2(rng.gaussian(), rng.gaussian()).normalized();
    // brute force: map every vertex of Q through x, maximize <x q, u>
    double direct = -1e300;
    for (const auto& qv : q.vertices()) direct = std::max(direct, (x * qv).dot(u));
    CHECK(matrix_image_support(x, q, u) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("radial function of the classical polar projection body") {
  const StarBodySpec spec(make_square(1.0), make_q_segment01(), 1.0);
  CHECK(spec.d() == 2);
  // rho(e1) = 1 / |P_{e1 perp} K| = 1/2
  CHECK(polar_proj_radial(spec, vec2(1, 0)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(polar_proj_radial(spec, vec2(0, 1)) == doctest::Approx(0.5).epsilon(1e-12));

  // disk approximation: rho is 1/2 in every direction
  const StarBodySpec dspec(make_kgon(64, 1.0), make_q_segment01(), 1.0);
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    const Vec th = vec2(rng.gaussian(), rng.gaussian()).normalized();
    CHECK(polar_proj_radial(dspec, th) == doctest::Approx(0.5).epsilon(0.005));
  }
}

TEST_CASE("symmetric Q gives an even radial function") {
  const StarBodySpec spec(make_random_polygon(77, 8), make_q_segment_sym(), 1.5);
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const Vec th = vec2(rng.gaussian(), rng.gaussian()).normalized();
    CHECK(polar_proj_radial(spec, th) ==
          doctest::Approx(polar_proj_radial(spec, -th)).epsilon(1e-12));
  }
}

TEST_CASE("gauge is positively 1-homogeneous") {
  const StarBodySpec spec(make_random_polygon(11, 7), make_q_square(), 2.0);
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    Vec x(4);
    for (int j = 0; j < 4; ++j) x[j] = rng.uniform(-1, 1);
    if (x.norm() < 1e-6) continue;
    const double c = rng.uniform(0.1, 5.0);
    CHECK(spec.gauge(c * x) == doctest::Approx(c * spec.gauge(x)).epsilon(1e-12));
  }
}

TEST_CASE("n = 3 with m = 2 is admitted (d = 6)") {
  const StarBodySpec spec(make_random_polytope3(3, 10), make_q_square(), 1.0);
  CHECK(spec.d() == 6);
  Rng rng(8);
  Vec th(6);
  for (int i = 0; i < 6; ++i) th[i] = rng.gaussian();
  th.normalize();
  const double rho = polar_proj_radial(spec, th);
  CHECK(rho > 0.0);
  CHECK(std::isfinite(rho));
}

TEST_CASE("star body spec validation") {
  CHECK_THROWS_AS(StarBodySpec(make_random_polytope3(1, 8),
                               make_q_neg_simplex(3), 1.0),
                  DimensionMismatch);
  CHECK_THROWS_AS(StarBodySpec(make_square(1.0), make_q_segment01(), 0.5),
                  InvalidP);
  CHECK_THROWS_AS(StarBodySpec(translate(make_square(1.0), vec2(1.5, 0.0)),
                               make_q_segment01(), 2.0),
                  OriginNotInterior);
  // p = 1 admits bodies without the origin
  const StarBodySpec ok(translate(make_square(1.0), vec2(1.5, 0.0)),
                        make_q_segment01(), 1.0);
  CHECK(ok.gauge(vec2(1, 0)) > 0.0);
}

TEST_CASE("projection body of the square") {
  const Polytope pk = classical_proj_body(make_square(1.0));
  CHECK(pk.volume() == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(pk.support(vec2(1, 0)) == doctest::Approx(2.0));
  CHECK(pk.support(vec2(0.6, 0.8)) == doctest::Approx(2.8));
  const Polytope polar_pk = polar(OriginBody(pk)).poly();
  CHECK(polar_pk.volume() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("projection body of the cube") {
  const Polytope pk = classical_proj_body(make_cube(1.0));
  CHECK(pk.volume() == doctest::Approx(8.0 * 64.0).epsilon(1e-9));
  CHECK(pk.support(vec3(1, 0, 0)) == doctest::Approx(4.0));
}

TEST_CASE("zonotope construction matches the Cauchy formula") {
  Rng rng(6);
  for (int rep = 0; rep < 3; ++rep) {
    const Polytope K2 = make_random_polygon(rng.next_u64(), 8);
    const Polytope Z2 = classical_proj_body(K2);
    const Polytope K3 = make_random_polytope3(rng.next_u64(), 8);
    const Polytope Z3 = classical_proj_body(K3);
    for (int i = 0; i < 333; ++i) {
      const Vec u2 = vec2(rng.gaussian(), rng.gaussian()).normalized();
      CHECK(Z2.support(u2) ==
            doctest::Approx(proj_body_support(K2, u2)).epsilon(1e-12));
      const Vec u3 =
          vec3(rng.gaussian(), rng.gaussian(), rng.gaussian()).normalized();
      CHECK(Z3.support(u3) ==
            doctest::Approx(proj_body_support(K3, u3)).epsilon(1e-12));
    }
  }
}

TEST_CASE("petty product of the square stays below the planar bound") {
  const Polytope sq = make_square(1.0);
  const double prod =
      sq.volume() * polar(OriginBody(classical_proj_body(sq))).poly().volume();
  CHECK(prod == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(prod <= std::numbers::pi * std::numbers::pi / 4.0);
}

TEST_CASE("radial function is consistent with the explicit projection body") {
  Rng rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    const Polytope K = make_random_polygon(rng.next_u64(), 7);
    const StarBodySpec spec(K, make_q_segment01(), 1.0);
    const Polytope pk = classical_proj_body(K);
    for (int i = 0; i < 50; ++i) {
      const Vec th = vec2(rng.gaussian(), rng.gaussian()).normalized();
      CHECK(polar_proj_radial(spec, th) ==
            doctest::Approx(1.0 / pk.support(th)).epsilon(1e-9));
    }
  }
}
