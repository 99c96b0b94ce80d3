#include <cmath>

#include "doctest.h"
#include "subord/errors.hpp"
#include "subord/generators.hpp"
#include "support.hpp"

using namespace subord;

namespace {

double binom(double a, std::size_t n) {
  double c = 1.0;
  for (std::size_t j = 0; j < n; ++j) c *= (a - static_cast<double>(j)) / static_cast<double>(j + 1);
  return c;
}

LemmaParams beta_at_threshold(LemmaId id, LemmaParams p, double factor) {
  const auto t = closed_form_threshold(id, p);
  p.beta = t.status == ThresholdResult::Status::Feasible ? factor * t.beta_star : 1.0;
  return p;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("Schwarz families") {
    const auto z = make_schwarz(Monomial{1}).series(8);
    CHECK(z[1] == Complex(1.0));
    CHECK(z[2] == Complex(0.0));
    const auto z2 = make_schwarz(Monomial{2}).series(8);
    CHECK(z2[2] == Complex(1.0));
    const auto b0 = make_schwarz(BlaschkeFactor{0.0}).series(8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(b0[n] == Complex(n == 2 ? 1.0 : 0.0));
    CHECK_THROWS_AS(make_schwarz(Monomial{0}), Error);
    CHECK_THROWS_AS(make_schwarz(BlaschkeFactor{1.0}), Error);
    CHECK_THROWS_AS(make_schwarz(std::vector<Complex>{0.0, 0.0}), Error);
  }

  TEST_CASE("Blaschke series matches the closed form inside the disk") {
    const Complex a(0.3, -0.6);
    const auto w = make_schwarz(BlaschkeFactor{a});
    const auto s = w.series(200);
    for (double r : {0.3, 0.7}) {
      for (int j = 0; j < 16; ++j) {
        const Complex z = std::polar(r, 0.4 * j);
        CHECK(std::abs(eval(s, z) - z * (z + a) / (1.0 + std::conj(a) * z)) <= 1e-12);
      }
    }
  }

  TEST_CASE("property: random Schwarz functions are contractions vanishing at 0") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
      const auto w = random_schwarz(rng);
      CHECK(w.series(16)[0] == Complex(0.0));
      CHECK(boundary_sup(w) <= 1.0 + 1e-12);
    }
  }

  TEST_CASE("random draws are reproducible from the seed") {
    std::mt19937_64 a(77), b(77);
    for (int i = 0; i < 10; ++i) CHECK(random_schwarz(a).describe() == random_schwarz(b).describe());
  }

  TEST_CASE("L2 with w = z integrates the binomial series") {
    LemmaParams p;
    p.beta = 3.0;
    const auto sol = solve_premise_ode(LemmaId::L2_full, p, make_schwarz(Monomial{1}), 64);
    CHECK(std::abs(sol.p[1] - 1.0 / 6.0) <= 1e-15);
    CHECK(std::abs(sol.p[2] + 1.0 / 48.0) <= 1e-15);
    for (std::size_t n = 1; n <= 64; ++n) {
      CHECK(std::abs(sol.p[n] - binom(0.5, n) / (3.0 * n)) <= 1e-15);
    }
    CHECK(sol.residual <= 1e-15);
  }

  TEST_CASE("L9 with B = E = 0 and w = z is linear") {
    LemmaParams p;
    p.beta = 2.0;
    const auto sol = solve_premise_ode(LemmaId::L9_DE, p, make_schwarz(Monomial{1}), 64);
    CHECK(std::abs(sol.p[1] - 0.5) <= 1e-15);
    for (std::size_t n = 2; n <= 64; ++n) CHECK(std::abs(sol.p[n]) <= 1e-15);
  }

  TEST_CASE("L5 with w = z: (z p)' = sqrt(1 + z)") {
    LemmaParams p;
    p.beta = 1.0;
    const auto sol = solve_premise_ode(LemmaId::L5_sum, p, make_schwarz(Monomial{1}), 64);
    for (std::size_t n = 0; n <= 64; ++n) {
      CHECK(std::abs(sol.p[n] - binom(0.5, n) / (n + 1.0)) <= 1e-15);
    }
  }

  TEST_CASE("L1 with k = 2, B != 0 and w = z has a logarithmic reciprocal") {
    LemmaParams p;
    p.A = 1.0;
    p.B = -0.5;
    p.k = 2.0;
    p.beta = 20.0;
    const auto sol = solve_premise_ode(LemmaId::L1_kFamily, p, make_schwarz(Monomial{1}), 64);
    const auto recip = PowerSeries::constant(1.0, 64) / sol.p;
    // 1/p = 1 - ((A - B)/(beta B)) log(1 + B z), log series written out
    const double c = (p.A - p.B) / (p.beta * p.B);
    for (std::size_t n = 1; n <= 64; ++n) {
      const double log_n = -std::pow(-p.B, static_cast<double>(n)) / static_cast<double>(n);
      CHECK(std::abs(recip[n] + c * log_n) <= 1e-10);
    }
  }

  TEST_CASE("L1 recursion agrees with substituting the series power") {
    LemmaParams p;
    p.A = 0.7;
    p.B = -0.4;
    p.k = 2.0;
    p.beta = 25.0;
    std::mt19937_64 rng(3);
    const auto w = random_schwarz(rng);
    const auto sol = solve_premise_ode(LemmaId::L1_kFamily, p, w, 64);
    const auto lhs = PowerSeries::constant(1.0, 64) + p.beta * (zderiv(sol.p) / (sol.p * sol.p));
    const auto rhs = premise_target_series(LemmaId::L1_kFamily, p, w.series(64));
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
  }

  TEST_CASE("property: premise residual at N = 64 for every lemma") {
    std::mt19937_64 rng(19);
    for (LemmaId id : kAllLemmas) {
      for (int i = 0; i < 50; ++i) {
        auto p = beta_at_threshold(id, subord::testing::random_params(id, rng), 1.05);
        const auto w = random_schwarz(rng);
        const auto sol = solve_premise_ode(id, p, w, 64);
        CHECK(sol.p[0] == Complex(1.0));
        CHECK(sol.residual <= 1e-9);
      }
    }
  }

  TEST_CASE("adaptive solver reports the tail") {
    LemmaParams p;
    p.beta = 3.0;
    const auto a =
        solve_premise_adaptive(LemmaId::L2_full, p, make_schwarz(Monomial{1}), 0.5, 16, 512);
    CHECK(a.tail_certified);
    CHECK(a.tail_bound < 1e-9);
    CHECK(a.solution.p.order() < 512);
    const auto b =
        solve_premise_adaptive(LemmaId::L2_full, p, make_schwarz(Monomial{1}), 0.999, 64, 512);
    CHECK(b.solution.p.order() == 512);
    CHECK_FALSE(b.tail_certified);
  }
}
