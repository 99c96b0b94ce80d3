#include <cmath>

#include "doctest.h"
#include "subord/errors.hpp"
#include "subord/regions.hpp"
#include "support.hpp"

using namespace subord;

TEST_SUITE("regions") {
  TEST_CASE("target values") {
    const auto sq = TargetRegion::sqrt_lemniscate();
    CHECK(target_eval(sq, 0.0) == Complex(1.0));
    CHECK(std::abs(target_eval(sq, 0.21) - 1.1) <= 1e-15);
    CHECK(std::abs(target_eval(TargetRegion::janowski(1.0, 0.0), 0.3) - 1.3) <= 1e-15);
    CHECK_THROWS_AS(target_eval(TargetRegion::janowski(1.0, -1.0), 1.0), Error);
    CHECK_THROWS_AS(TargetRegion::janowski(0.0, 0.5), Error);
    CHECK_THROWS_AS(TargetRegion::janowski(1.5, 0.0), Error);
  }

  TEST_CASE("boundary-accurate evaluation near the singular point") {
    // |1 + e^{it}| = 2 sin(d/2) with d = pi - t
    const double d = 1e-9;
    const DiskPoint z = DiskPoint::polar(1.0, std::acos(-1.0) - d);
    const double expect = 2.0 * std::sin(d / 2.0);
    CHECK(std::abs(std::abs(z.one_plus(1.0)) - expect) <= 1e-6 * expect);
  }

  TEST_CASE("membership examples") {
    const auto sq = TargetRegion::sqrt_lemniscate();
    auto m = membership(sq, 1.0);
    CHECK(m.margin == doctest::Approx(1.0));
    CHECK(m.classification == Classification::Inside);
    m = membership(sq, std::sqrt(2.0));
    CHECK(std::abs(m.margin) <= 1e-12);
    CHECK(m.classification == Classification::Boundary);
    m = membership(TargetRegion::janowski(1.0, -1.0), Complex(0.0, 1.0));
    CHECK(std::abs(m.margin) <= 1e-12);
    CHECK(m.classification == Classification::Boundary);
    // left lobe: |w^2 - 1| < 1 but outside the image of sqrt(1 + z)
    m = membership(sq, -1.0);
    CHECK(m.margin < 0.0);
    CHECK(m.classification == Classification::Outside);
  }

  TEST_CASE("inverse maps") {
    const auto sq = TargetRegion::sqrt_lemniscate();
    CHECK(phi_inverse(sq, 1.0) == Complex(0.0));
    CHECK(std::abs(phi_inverse(sq, std::sqrt(2.0)) - 1.0) <= 1e-15);
    CHECK(std::abs(phi_inverse(TargetRegion::janowski(1.0, 0.0), 1.5) - 0.5) <= 1e-15);
    CHECK_THROWS_AS(phi_inverse(TargetRegion::janowski(0.5, 0.25), 2.0), Error);
  }

  TEST_CASE("boundary curves") {
    const auto lem = region_boundary(TargetRegion::sqrt_lemniscate(), 257);
    bool through_zero = false, through_root2 = false;
    for (const auto& w : lem) {
      CHECK(std::abs(std::abs(w * w - 1.0) - 1.0) <= 1e-12);
      // sqrt magnifies the rounding of e^{i pi} to about 1e-8
      through_zero = through_zero || std::abs(w) <= 1e-7;
      through_root2 = through_root2 || std::abs(w - std::sqrt(2.0)) <= 1e-12;
    }
    CHECK(through_zero);
    CHECK(through_root2);
    for (const auto& w : region_boundary(TargetRegion::janowski(1.0, 0.0), 256)) {
      CHECK(std::abs(std::abs(w - 1.0) - 1.0) <= 1e-12);
    }
  }

  TEST_CASE("property: inverse round trip") {
    auto rng = subord::testing::rng_for(7);
    for (int i = 0; i < 1000; ++i) {
      const Complex z = subord::testing::complex_in_disk(rng, 0.99);
      const auto [a, b] = subord::testing::random_pair(rng, 0.01, false);
      for (const auto& region : {TargetRegion::sqrt_lemniscate(), TargetRegion::janowski(a, b)}) {
        CHECK(std::abs(phi_inverse(region, target_eval(region, z)) - z) <= 1e-10);
      }
    }
  }

  TEST_CASE("property: margin sign agrees with the inverse map") {
    auto rng = subord::testing::rng_for(8);
    for (int i = 0; i < 1000; ++i) {
      const Complex w(subord::testing::uniform(rng, 0.0, 2.0), subord::testing::uniform(rng, -1.5, 1.5));
      const auto [a, b] = subord::testing::random_pair(rng, 0.01, false);
      for (const auto& region : {TargetRegion::sqrt_lemniscate(), TargetRegion::janowski(a, b)}) {
        const double inv = std::abs(phi_inverse(region, w));
        if (std::abs(inv - 1.0) < 1e-9) continue;
        CHECK((membership(region, w).margin > 0.0) == (inv < 1.0));
      }
    }
  }

  TEST_CASE("property: conjugation symmetry") {
    auto rng = subord::testing::rng_for(9);
    for (int i = 0; i < 1000; ++i) {
      const Complex w(subord::testing::uniform(rng, -2.0, 2.0), subord::testing::uniform(rng, -2.0, 2.0));
      const auto [a, b] = subord::testing::random_pair(rng, 0.01, false);
      for (const auto& region : {TargetRegion::sqrt_lemniscate(), TargetRegion::janowski(a, b)}) {
        CHECK(membership(region, std::conj(w)).margin == membership(region, w).margin);
      }
    }
  }

  TEST_CASE("property: lemniscate image is convex on samples") {
    auto rng = subord::testing::rng_for(10);
    const auto sq = TargetRegion::sqrt_lemniscate();
    int pairs = 0;
    while (pairs < 500) {
      const Complex w1 = target_eval(sq, subord::testing::complex_in_disk(rng, 1.0));
      const Complex w2 = target_eval(sq, subord::testing::complex_in_disk(rng, 1.0));
      if (membership(sq, w1).margin <= 0.0 || membership(sq, w2).margin <= 0.0) continue;
      CHECK(membership(sq, 0.5 * (w1 + w2)).margin > 0.0);
      ++pairs;
    }
  }
}
