#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pettykit/bodies.hpp"
#include "pettykit/geometry.hpp"
#include "pettykit/rng.hpp"

using namespace pettykit;

namespace {

// independent area oracle for 2-d bodies (the library itself uses the
// facet cone decomposition)
double shoelace(const Polytope& P) {
  const auto& v = P.vertices();
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a[0] * b[1] - b[0] * a[1];
  }
  return 0.5 * std::abs(s);
}

Polytope random_polygon(Rng& rng, int k) {
  return make_random_polygon(rng.next_u64(), k);
}

}  // namespace

TEST_CASE("hull drops interior points") {
  const Polytope P =
      convex_hull({vec2(0, 0), vec2(1, 0), vec2(0, 1), vec2(0.2, 0.2)}, 2);
  CHECK(P.vertices().size() == 3);
  CHECK(P.volume() == doctest::Approx(0.5));
}

TEST_CASE("hull of cube corners") {
  std::vector<Vec> pts;
  for (int m = 0; m < 8; ++m)
    pts.push_back(vec3(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1));
  const Polytope P = convex_hull(pts, 3);
  CHECK(P.vertices().size() == 8);
  CHECK(P.facets().size() == 6);
  CHECK(P.volume() == doctest::Approx(8.0));
}

TEST_CASE("hull rejects degenerate input") {
  CHECK_THROWS_AS(convex_hull({vec2(0, 0), vec2(1, 0), vec2(2, 0)}, 2),
                  DegenerateInput);
  CHECK_THROWS_AS(
      convex_hull({vec3(0, 0, 0), vec3(1, 0, 0), vec3(0, 1, 0), vec3(1, 1, 0)},
                  3),
      DegenerateInput);
  CHECK_THROWS_AS(convex_hull({vec2(0, 0), vec2(1, 1)}, 2), DegenerateInput);
}

TEST_CASE("volumes of reference bodies") {
  CHECK(make_square(1.0).volume() == doctest::Approx(4.0).epsilon(1e-12));
  const Polytope simplex = make_simplex(3);
  CHECK(simplex.volume() == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("volume matches the shoelace oracle") {
  Rng rng(42);
  for (int i = 0; i < 25; ++i) {
    const Polytope P = random_polygon(rng, 6);
    CHECK(P.volume() == doctest::Approx(shoelace(P)).epsilon(1e-12));
  }
}

TEST_CASE("facet decomposition of boxes") {
  const Polytope sq = make_box(vec2(0, 0), vec2(1, 1));
  REQUIRE(sq.facets().size() == 4);
  for (const auto& f : sq.facets()) {
    CHECK(f.measure == doctest::Approx(1.0));
    CHECK(std::abs(f.normal[0]) + std::abs(f.normal[1]) ==
          doctest::Approx(1.0));
  }
  const Polytope cube = make_cube(1.0);
  REQUIRE(cube.facets().size() == 6);
  for (const auto& f : cube.facets()) CHECK(f.measure == doctest::Approx(4.0));
}

TEST_CASE("facet closedness and cone volume identity") {
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const int dim = i % 2 ? 3 : 2;
    const Polytope P = dim == 2 ? random_polygon(rng, 7)
                                : make_random_polytope3(rng.next_u64(), 10);
    Vec resultant = Vec::Zero(dim);
    double area = 0.0, cone = 0.0;
    for (const auto& f : P.facets()) {
      resultant += f.measure * f.normal;
      area += f.measure;
      cone += f.offset * f.measure;
    }
    CHECK(resultant.norm() <= 1e-9 * area);
    CHECK(cone / dim == doctest::Approx(P.volume()).epsilon(1e-12));
  }
}

TEST_CASE("hull is idempotent on vertex sets") {
  Rng rng(11);
  for (int i = 0; i < 5; ++i) {
    const Polytope P = make_random_polytope3(rng.next_u64(), 12);
    const Polytope Q = convex_hull(P.vertices(), 3);
    CHECK(P.vertices().size() == Q.vertices().size());
    CHECK(hausdorff_distance(P, Q) <= 1e-12 * P.scale());
  }
}

TEST_CASE("projection of boxes") {
  const Polytope cube = make_cube(1.0);
  const Polytope sq = project(cube, vec3(0, 0, 1));
  CHECK(sq.dim() == 2);
  CHECK(sq.volume() == doctest::Approx(4.0).epsilon(1e-12));

  const Polytope seg = project(make_square(1.0), vec2(1, 0));
  CHECK(seg.dim() == 1);
  CHECK(seg.volume() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("projection length of a fine polygon approximates the disk") {
  const Polytope gon = make_kgon(64, 1.0);
  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    const double a = rng.uniform(0, 2 * std::numbers::pi);
    const Vec u = vec2(std::cos(a), std::sin(a));
    const Polytope seg = project(gon, u);
    // brute force: width along the perpendicular basis direction
    const auto basis = orthobasis_perp(u);
    double lo = 1e300, hi = -1e300;
    for (const auto& v : gon.vertices()) {
      lo = std::min(lo, basis[0].dot(v));
      hi = std::max(hi, basis[0].dot(v));
    }
    CHECK(seg.volume() == doctest::Approx(hi - lo).epsilon(1e-12));
    CHECK(seg.volume() == doctest::Approx(2.0).epsilon(0.005));
  }
}

TEST_CASE("reflection examples and involution") {
  const Polytope sq = make_box(vec2(0, 0), vec2(1, 1));
  const Polytope r = reflect(sq, vec2(1, 0));
  CHECK(r.support(vec2(1, 0)) == doctest::Approx(0.0));
  CHECK(r.support(vec2(-1, 0)) == doctest::Approx(1.0));
  CHECK(r.support(vec2(0, 1)) == doctest::Approx(1.0));

  CHECK(hausdorff_distance(reflect(make_square(1.0), vec2(1, 0)),
                           make_square(1.0)) <= 1e-12);

  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const int dim = i % 2 ? 3 : 2;
    const Polytope P = dim == 2 ? random_polygon(rng, 6)
                                : make_random_polytope3(rng.next_u64(), 9);
    Vec u(dim);
    for (int j = 0; j < dim; ++j) u[j] = rng.gaussian();
    u.normalize();
    const Polytope R = reflect(P, u);
    CHECK(R.volume() == doctest::Approx(P.volume()).epsilon(1e-12));
    CHECK(hausdorff_distance(reflect(R, u), P) <= 1e-12 * P.scale());
  }
}

TEST_CASE("hausdorff distance") {
  const Polytope a = make_square(1.0), b = make_square(2.0);
  CHECK(hausdorff_distance(a, b) == doctest::Approx(std::sqrt(2.0)));
  CHECK(hausdorff_distance(a, a) == 0.0);

  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Polytope P = random_polygon(rng, 6);
    const Polytope Q = random_polygon(rng, 8);
    // vertex-based brute force equals the polytope Hausdorff distance
    double lower = 0.0;
    for (const auto& v : P.vertices()) lower = std::max(lower, distance_to(Q, v));
    for (const auto& v : Q.vertices()) lower = std::max(lower, distance_to(P, v));
    CHECK(hausdorff_distance(P, Q) == doctest::Approx(lower));
  }
}

TEST_CASE("hausdorff triangle inequality") {
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const Polytope A = random_polygon(rng, 5);
    const Polytope B = random_polygon(rng, 7);
    const Polytope C = random_polygon(rng, 6);
    const double ab = hausdorff_distance(A, B);
    const double bc = hausdorff_distance(B, C);
    const double ac = hausdorff_distance(A, C);
    CHECK(ac <= ab + bc + 1e-12);
  }
}

TEST_CASE("3-d hull handles coplanar clusters") {
  std::vector<Vec> pts;
  for (int m = 0; m < 8; ++m)
    pts.push_back(vec3(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1));
  pts.push_back(vec3(1, 0, 0));  // face interior
  pts.push_back(vec3(0, 1, 0));
  pts.push_back(vec3(1, 1, 0));  // edge interior
  const Polytope P = convex_hull(pts, 3);
  CHECK(P.vertices().size() == 8);
  CHECK(P.volume() == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("3-d hull torture: lattice, cospherical and prism inputs") {
  // full integer lattice in a cube: the hull is the cube itself
  std::vector<Vec> lattice;
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) lattice.push_back(vec3(x, y, z));
  const Polytope cube = convex_hull(lattice, 3);
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.facets().size() == 6);
  CHECK(cube.volume() == doctest::Approx(64.0).epsilon(1e-12));

  // cospherical points: everything is extreme, volume below the ball
  const auto dirs = direction_grid(3, 800);
  const Polytope ball = convex_hull(dirs, 3, 0.0);
  CHECK(ball.vertices().size() == 800);
  CHECK(ball.volume() < 4.18879020478639);
  CHECK(ball.volume() > 4.1);
  Vec closed = Vec::Zero(3);
  double area = 0.0;
  for (const auto& f : ball.facets()) {
    closed += f.measure * f.normal;
    area += f.measure;
  }
  CHECK(closed.norm() <= 1e-9 * area);
  for (const auto& d : dirs) CHECK(ball.contains(d, 1e-9));

  // prism from two rings; height 2, base = regular 64-gon
  std::vector<Vec> prism;
  for (int i = 0; i < 64; ++i) {
    const double a = 2 * std::numbers::pi * i / 64;
    prism.push_back(vec3(std::cos(a), std::sin(a), -1.0));
    prism.push_back(vec3(std::cos(a), std::sin(a), 1.0));
  }
  const Polytope pr = convex_hull(prism, 3);
  const double base = 0.5 * 64 * std::sin(2 * std::numbers::pi / 64);
  CHECK(pr.volume() == doctest::Approx(2.0 * base).epsilon(1e-12));
  CHECK(pr.vertices().size() == 128);

  // near-duplicates collapse instead of corrupting the surface
  std::vector<Vec> jitter;
  Rng rng(99);
  for (int m = 0; m < 8; ++m) {
    const Vec corner = vec3(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1);
    for (int r = 0; r < 5; ++r) {
      Vec p = corner;
      for (int i = 0; i < 3; ++i) p[i] += 1e-15 * rng.uniform(-1, 1);
      jitter.push_back(p);
    }
  }
  const Polytope jc = convex_hull(jitter, 3);
  CHECK(jc.vertices().size() == 8);
  CHECK(jc.volume() == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("polygon simplification stays within the area budget") {
  const Polytope gon = make_kgon(128, 1.0);
  const auto [simplified, removed] = simplify_polygon(gon, 1e-4);
  CHECK(removed <= 1e-4);
  CHECK(gon.volume() - simplified.volume() ==
        doctest::Approx(removed).epsilon(1e-9));
  CHECK(simplified.vertices().size() < gon.vertices().size());
}
