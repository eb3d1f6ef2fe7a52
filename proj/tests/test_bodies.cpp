#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pettykit/bodies.hpp"
#include "pettykit/rng.hpp"

using namespace pettykit;

TEST_CASE("support function basics") {
  const Polytope sq = make_square(1.0);
  CHECK(sq.support(vec2(0.6, 0.8)) == doctest::Approx(1.4));
  const Polytope diamond =
      convex_hull({vec2(1, 0), vec2(-1, 0), vec2(0, 1), vec2(0, -1)}, 2);
  CHECK(diamond.support(vec2(1, 1)) == doctest::Approx(1.0));

  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    const Polytope K = make_random_polygon(rng.next_u64(), 7);
    const Vec x = vec2(rng.uniform(-2, 2), rng.uniform(-2, 2));
    CHECK(K.support(2.0 * x) == doctest::Approx(2.0 * K.support(x)));
  }
}

TEST_CASE("minkowski functional and membership") {
  const OriginBody sq(make_square(1.0));
  CHECK(minkowski_functional(sq, vec2(2, 0)) == doctest::Approx(2.0));
  CHECK(minkowski_functional(sq, Vec::Zero(2)) == 0.0);

  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    const OriginBody K(make_random_polygon(rng.next_u64(), 8));
    const Vec x = vec2(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5));
    const double g = minkowski_functional(K, x);
    CHECK(K.poly().contains(x, 1e-9) == (g <= 1.0 + 1e-9));
    // gauge of the polar equals the support function
    CHECK(minkowski_functional(polar(K), x) ==
          doctest::Approx(K.poly().support(x)).epsilon(1e-9));
  }
}

TEST_CASE("polar duality") {
  const OriginBody sq(make_square(1.0));
  const Polytope diamond = polar(sq).poly();
  CHECK(diamond.volume() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(diamond.support(vec2(1, 0)) == doctest::Approx(1.0));

  // bipolar recovers the body
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const OriginBody K(make_random_polygon(rng.next_u64(), 7));
    const Polytope KK = polar(polar(K)).poly();
    CHECK(hausdorff_distance(K.poly(), KK) <= 1e-9 * K.poly().scale());
  }

  // polar of r * (fine k-gon) is close to (1/r) * ball
  const double r = 1.7;
  const OriginBody gon(make_kgon(64, r));
  const Polytope dual = polar(gon).poly();
  for (const auto& v : dual.vertices())
    CHECK(v.norm() == doctest::Approx(1.0 / r).epsilon(0.002));
}

TEST_CASE("origin certificate") {
  CHECK_THROWS_AS(OriginBody(make_box(vec2(0, 0), vec2(1, 1))),
                  OriginNotInterior);
}

TEST_CASE("p-sum of squares is exact for p=1") {
  const OriginBody sq(make_square(1.0));
  const Polytope s2 = p_sum_approx(sq, sq, 1.0, 64);
  CHECK(s2.volume() == doctest::Approx(16.0).epsilon(1e-9));
  CHECK(s2.support(vec2(1, 0)) == doctest::Approx(2.0));
  CHECK(s2.support(vec2(0.6, 0.8)) == doctest::Approx(2.8).epsilon(1e-12));
}

TEST_CASE("p-sum homogeneity: K +_p K = 2^{1/p} K") {
  Rng rng(4);
  for (double p : {1.0, 1.5, 2.0}) {
    const OriginBody K(make_random_polygon(rng.next_u64(), 8));
    const Polytope sum = p_sum_approx(K, K, p, 512);
    const double ratio = sum.volume() / K.poly().volume();
    CHECK(ratio == doctest::Approx(std::pow(2.0, 2.0 / p)).epsilon(1e-6));
  }
}

TEST_CASE("2-sum of disk approximations gives sqrt(2) disk") {
  const OriginBody disk(make_kgon(64, 1.0));
  const Polytope sum = p_sum_approx(disk, disk, 2.0, 2048);
  for (int i = 0; i < 32; ++i) {
    const double a = 2 * std::numbers::pi * i / 32.0;
    CHECK(sum.support(vec2(std::cos(a), std::sin(a))) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(0.005));
  }
}

TEST_CASE("p-sum support is additive on grid directions for p=1") {
  Rng rng(5);
  const OriginBody K(make_random_polygon(rng.next_u64(), 7));
  const OriginBody L(make_random_polygon(rng.next_u64(), 9));
  const Polytope sum = p_sum_approx(K, L, 1.0, 128);
  for (const auto& u : direction_grid(2, 128))
    CHECK(sum.support(u) == doctest::Approx(K.poly().support(u) +
                                            L.poly().support(u))
                                .epsilon(1e-9));
}

TEST_CASE("p-sum volume decreases monotonically as the grid doubles") {
  Rng rng(6);
  const OriginBody K(make_random_polygon(rng.next_u64(), 7));
  const OriginBody L(make_random_polygon(rng.next_u64(), 6));
  double prev = 1e300;
  for (int nd : {64, 128, 256, 512}) {
    const double v = p_sum_approx(K, L, 2.0, nd).volume();
    CHECK(v <= prev + 1e-9 * v);
    prev = v;
  }
}

TEST_CASE("p-sum rejects p < 1") {
  const OriginBody sq(make_square(1.0));
  CHECK_THROWS_AS(p_sum_approx(sq, sq, 0.5, 64), InvalidP);
}

TEST_CASE("catalog bodies") {
  CHECK(make_kgon(4, 1.0).volume() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(make_kgon_area(64, 3.7).volume() == doctest::Approx(3.7).epsilon(1e-12));
  CHECK(make_ball_approx(3, 2.5, 256).volume() ==
        doctest::Approx(2.5).epsilon(1e-12));

  // interval Q for the m = 1 slot
  const QBody q01 = make_q_segment01();
  CHECK(q01.m() == 1);
  CHECK(q01.support(vec1(1.0)) == doctest::Approx(1.0));
  CHECK(q01.support(vec1(-1.0)) == doctest::Approx(0.0));
  CHECK(!q01.symmetric());
  CHECK(make_q_segment_sym().symmetric());
  CHECK(make_q_square().symmetric());
  CHECK(!make_q_neg_simplex(2).symmetric());
  CHECK_THROWS_AS(QBody::interval(0.5, 1.0), DegenerateInput);
}

TEST_CASE("seeded random polygons are reproducible bit-exactly") {
  const Polytope a = make_random_polygon(123456, 9);
  const Polytope b = make_random_polygon(123456, 9);
  REQUIRE(a.vertices().size() == b.vertices().size());
  for (std::size_t i = 0; i < a.vertices().size(); ++i) {
    CHECK(a.vertices()[i][0] == b.vertices()[i][0]);
    CHECK(a.vertices()[i][1] == b.vertices()[i][1]);
  }
  const Polytope c = make_random_polygon(123457, 9);
  CHECK(hausdorff_distance(a, c) > 1e-6);
}

TEST_CASE("interval polar") {
  const Interval I{-0.5, 2.0};
  const Interval J = polar(I);
  CHECK(J.lo == doctest::Approx(-2.0));
  CHECK(J.hi == doctest::Approx(0.5));
  CHECK_THROWS_AS(polar(Interval{0.0, 1.0}), OriginNotInterior);
}
