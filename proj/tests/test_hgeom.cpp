#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "regtess/errors.hpp"
#include "regtess/hgeom.hpp"

using namespace regtess;
using namespace regtess::hgeom;

namespace {

constexpr double kPi = std::numbers::pi;

DiskPoint random_point(std::mt19937 &rng, double max_radius = 0.9)
{
  std::uniform_real_distribution<double> radius(0.0, max_radius);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  return DiskPoint(std::polar(radius(rng), angle(rng)));
}

Isometry random_isometry(std::mt19937 &rng)
{
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  auto const t = Isometry::to_origin(random_point(rng));
  return compose_iso(Isometry::rotation(angle(rng)), t);
}

/// Center of the circle orthogonal to the unit circle through a and b
/// (a, b not collinear with the origin).
Complex orthogonal_circle_center(Complex a, Complex b)
{
  auto const det = a.real() * b.imag() - a.imag() * b.real();
  auto const ra = (1.0 + std::norm(a)) / 2.0;
  auto const rb = (1.0 + std::norm(b)) / 2.0;
  return {(ra * b.imag() - rb * a.imag()) / det,
          (rb * a.real() - ra * b.real()) / det};
}

/// Unit tangent at `a` of the geodesic arc from a toward b.
Complex tangent_towards(Complex a, Complex b)
{
  auto const c = orthogonal_circle_center(a, b);
  auto t = (a - c) * Complex{0.0, 1.0};
  t /= std::abs(t);
  // Of the two tangent directions pick the one pointing along the arc.
  if (std::real(std::conj(t) * (b - a)) < 0.0)
    t = -t;
  return t;
}

} // namespace

TEST_CASE("disk points stay inside the guard")
{
  CHECK_NOTHROW(DiskPoint(Complex{0.5, 0.5}));
  CHECK_THROWS_AS(DiskPoint(Complex{1.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(DiskPoint(Complex{0.0, 1.0 - 1e-13}), InvalidInput);
  CHECK_THROWS_AS(DiskPoint(Complex{NAN, 0.0}), InvalidInput);
}

TEST_CASE("distance")
{
  DiskPoint const o;
  CHECK(distance(o, o) == 0.0);
  CHECK(distance(o, DiskPoint(Complex{0.5, 0.0})) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(distance(o, DiskPoint(Complex{0.5, 0.0})) ==
        doctest::Approx(1.0986123).epsilon(1e-7));

  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    auto const a = random_point(rng), b = random_point(rng);
    CHECK(distance(a, b) == doctest::Approx(distance(b, a)).epsilon(1e-13));

    // Same value as the arcosh form away from the cancellation regime.
    auto const x = 2.0 * std::norm(a.z() - b.z()) /
                   ((1.0 - std::norm(a.z())) * (1.0 - std::norm(b.z())));
    if (x > 1e-6)
      CHECK(distance(a, b) == doctest::Approx(std::acosh(1.0 + x)).epsilon(1e-10));
  }
}

TEST_CASE("circumradius and inradius")
{
  CHECK(circumradius(4, 6) == doctest::Approx(std::acosh(std::sqrt(3.0))).epsilon(1e-14));
  CHECK(circumradius(4, 6) == doctest::Approx(1.1462158).epsilon(1e-7));
  auto const cot = 1.0 / std::tan(kPi / 5.0);
  CHECK(cot * cot == doctest::Approx(1.8944272).epsilon(1e-7));
  CHECK(circumradius(5, 5) == doctest::Approx(std::acosh(cot * cot)).epsilon(1e-14));

  CHECK_THROWS_AS(circumradius(3, 6), NotHyperbolic);
  CHECK_THROWS_AS(circumradius(4, 4), NotHyperbolic);
  CHECK_THROWS_AS(inradius(3, 5), NotHyperbolic);

  for (int p = 3; p <= 8; ++p) {
    for (int q = 3; q <= 12; ++q) {
      if ((p - 2) * (q - 2) <= 4)
        continue;
      CAPTURE(p);
      CAPTURE(q);
      auto const poly = base_polygon(p, q);

      // The midpoint of e_1 is the point of its orthogonal circle nearest
      // the origin.
      auto const c = orthogonal_circle_center(poly.vertex(p).z(),
                                              poly.vertex(1).z());
      auto const radius = std::sqrt(std::norm(c) - 1.0);
      auto const midpoint = std::abs(c) - radius;
      CHECK(poly.inradius() ==
            doctest::Approx(2.0 * std::atanh(midpoint)).epsilon(1e-12));

      // cosh R = cosh r cosh(edge / 2) in the right triangle.
      CHECK(std::cosh(poly.circumradius()) ==
            doctest::Approx(std::cosh(poly.inradius()) *
                            std::cosh(poly.edge_length(1) / 2.0))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("base polygon")
{
  auto const poly = base_polygon(4, 6);
  auto const R = std::acosh(std::sqrt(3.0));
  CHECK(std::abs(poly.vertex(1).z() - Complex{0.0, std::tanh(R / 2.0)}) < 1e-15);
  CHECK(poly.vertex(0).z() == poly.vertex(4).z());

  // Clockwise: v_2 lies in the right half-plane, below v_1.
  CHECK(poly.vertex(2).re() > 0.0);
  CHECK(poly.vertex(2).im() < poly.vertex(1).im());
  CHECK_THROWS_AS(poly.vertex(5), InvalidInput);
}

TEST_CASE("polygon invariants across the sweep")
{
  for (int p = 3; p <= 8; ++p) {
    for (int q = 3; q <= 30; ++q) {
      if ((p - 2) * (q - 2) <= 4)
        continue;
      CAPTURE(p);
      CAPTURE(q);
      auto const poly = base_polygon(p, q);
      auto const target = 2.0 * kPi / q;
      auto const len = poly.edge_length(1);
      auto const rotate = Isometry::rotation(2.0 * kPi / p);

      for (unsigned k = 1; k <= poly.p(); ++k) {
        CHECK(distance(poly.center(), poly.vertex(k)) ==
              doctest::Approx(poly.circumradius()).epsilon(1e-12));
        CHECK(std::abs(poly.interior_angle(k) - target) < 1e-9);
        CHECK(std::abs(poly.edge_length(k) - len) < 1e-9);

        // Angle from the orthogonal-circle tangents, independent of the
        // translation used by interior_angle.
        auto const at = poly.vertex(k).z();
        auto const t1 = tangent_towards(at, poly.vertex(k - 1 == 0 ? p : k - 1).z());
        auto const t2 = tangent_towards(at, poly.vertex(k % p + 1).z());
        auto const oracle = std::abs(std::arg(t1 / t2));
        CHECK(std::abs(oracle - target) < 1e-9);

        // Rotation by 2pi/p permutes the vertices.
        auto const image = rotate(poly.vertex(k));
        double nearest = 1e9;
        for (auto const &v : poly.vertices())
          nearest = std::min(nearest, distance(image, v));
        CHECK(nearest < 1e-9);
      }
    }
  }
}

TEST_CASE("isometry group operations")
{
  auto const id = Isometry::identity();
  DiskPoint const z(Complex{0.3, -0.2});
  CHECK(apply(id, z).z() == z.z());

  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto const g = random_isometry(rng);
    auto const h = random_isometry(rng);
    auto const a = random_point(rng), b = random_point(rng);

    CHECK(action_distance(compose_iso(g, inverse_iso(g)), id) < 1e-10);
    CHECK(std::abs(distance(g(a), g(b)) - distance(a, b)) < 1e-9);
    CHECK(distance(compose_iso(g, h)(a), g(h(a))) < 1e-10);

    auto const gh = compose_iso(g, h);
    CHECK(std::abs(std::norm(gh.alpha()) - std::norm(gh.beta()) - 1.0) < 1e-12);
  }
}

TEST_CASE("action equality ignores the global sign")
{
  Isometry const g(Complex{1.2, 0.3}, Complex{0.4, -0.5});
  Isometry const neg(-g.alpha(), -g.beta());
  CHECK(same_action(g, neg));
  CHECK(std::abs(neg.sign_normalized().alpha() - g.alpha()) < 1e-15);

  Isometry const imag(Complex{0.0, -1.0}, Complex{});
  CHECK(imag.sign_normalized().alpha() == Complex{0.0, 1.0});

  CHECK_FALSE(same_action(g, Isometry::identity()));
  CHECK_THROWS_AS(Isometry(Complex{0.5, 0.0}, Complex{0.9, 0.0}), InvalidInput);
}

TEST_CASE("isometry from point pairs")
{
  DiskPoint const P(Complex{0.1, 0.2}), Q(Complex{-0.3, 0.4});
  CHECK(same_action(isometry_from_pairs(P, Q, P, Q), Isometry::identity()));

  auto const quarter = isometry_from_pairs(DiskPoint{}, DiskPoint(Complex{0.5, 0.0}),
                                           DiskPoint{}, DiskPoint(Complex{0.0, 0.5}));
  CHECK(same_action(quarter, Isometry::rotation(kPi / 2.0)));

  std::mt19937 rng(99);
  for (int k = 0; k < 200; ++k) {
    auto const g = random_isometry(rng);
    auto const a = random_point(rng, 0.8), b = random_point(rng, 0.8);
    if (distance(a, b) < 1e-3)
      continue;
    auto const found = isometry_from_pairs(a, b, g(a), g(b));
    CHECK(distance(found(a), g(a)) < 1e-9);
    CHECK(distance(found(b), g(b)) < 1e-9);
    CHECK(same_action(found, g));
  }

  CHECK_THROWS_AS(isometry_from_pairs(P, P, P, P), InvalidInput);
  CHECK_THROWS_AS(isometry_from_pairs(DiskPoint{}, DiskPoint(Complex{0.5, 0.0}),
                                      DiskPoint{}, DiskPoint(Complex{0.6, 0.0})),
                  InvalidInput);
}

TEST_CASE("rotation about a point fixes it")
{
  DiskPoint const c(Complex{0.2, -0.6});
  auto const r = Isometry::rotation_about(c, 1.1);
  CHECK(distance(r(c), c) < 1e-12);
  auto const full = compose_iso(Isometry::rotation_about(c, kPi),
                                Isometry::rotation_about(c, kPi));
  CHECK(same_action(full, Isometry::identity()));
}
