#include <cmath>
#include <numbers>

#include "doctest.h"
#include "subord/errors.hpp"
#include "subord/verifier.hpp"
#include "support.hpp"

using namespace subord;

namespace {

constexpr double kPi = std::numbers::pi;

LemmaParams make(double A, double B, double D = 1.0, double E = 0.0, double k = 0.0,
                 double beta = 1.0) {
  LemmaParams p;
  p.A = A;
  p.B = B;
  p.D = D;
  p.E = E;
  p.k = k;
  p.beta = beta;
  return p;
}

double profile_at(const MarginProfile& m, double t) {
  for (std::size_t i = 0; i < m.t_samples.size(); ++i) {
    if (std::abs(m.t_samples[i] - t) < 1e-12) return m.margins[i];
  }
  return std::nan("");
}

}  // namespace

TEST_SUITE("verifier") {
  TEST_CASE("L9 degenerate point has a constant profile") {
    const auto m = boundary_margin_profile(LemmaId::L9_DE, make(1, 0, 1, 0, 0, 2));
    for (double v : m.margins) CHECK(std::abs(v - 2.0) <= 1e-12);
    CHECK(m.min_margin == doctest::Approx(2.0));
    CHECK(m.argmin_t == 0.0);
  }

  TEST_CASE("L1 with A = 1, B = 0, k = 1, beta = 4: margin 1/cos(t/2)") {
    const auto m = boundary_margin_profile(LemmaId::L1_kFamily, make(1, 0, 1, 0, 1, 4));
    CHECK(std::abs(m.min_margin - 1.0) <= 1e-12);
    CHECK(std::abs(m.argmin_t) <= 1e-8);
    for (std::size_t i = 0; i < m.t_samples.size(); i += 97) {
      CHECK(std::abs(m.margins[i] * std::cos(m.t_samples[i] / 2) - 1.0) <= 1e-10);
    }
    REQUIRE(m.punctures.size() == 1);
    CHECK(m.punctures[0] == doctest::Approx(kPi));
  }

  TEST_CASE("L2 with A = 1, B = 0: margin beta |2 + beta e^{it}|") {
    const double beta = 1 + std::sqrt(2.0);
    const auto m = boundary_margin_profile(LemmaId::L2_full, make(1, 0, 1, 0, 0, beta));
    for (std::size_t i = 0; i < m.t_samples.size(); i += 101) {
      const double t = m.t_samples[i];
      CHECK(std::abs(m.margins[i] - beta * std::abs(2.0 + beta * std::polar(1.0, t))) <= 1e-12);
    }
    CHECK(std::abs(m.min_margin - 1.0) <= 1e-9);
    // the minimum sits where e^{it} = -1
    CHECK(std::abs(std::abs(m.argmin_t) - kPi) <= 1e-6);
  }

  TEST_CASE("property: margin profiles are even in t") {
    auto rng = subord::testing::rng_for(51);
    for (LemmaId id : kAllLemmas) {
      if (!lemma_info(id).has_margin_criterion) continue;
      for (int i = 0; i < 10; ++i) {
        auto p = subord::testing::random_params(id, rng);
        p.beta = subord::testing::uniform(rng, 0.5, 10.0);
        const auto m = boundary_margin_profile(id, p, 512);
        for (std::size_t j = 1; j < 256; j += 5) {
          const double t = -kPi + 2 * kPi * j / 512.0;
          const double a = profile_at(m, t);
          const double b = profile_at(m, -t);
          if (std::isnan(a) || std::isnan(b)) continue;
          CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
        }
      }
    }
  }

  TEST_CASE("criterion pole diagnostic counts denominator zeros") {
    // L9 premise (1+Dz)/(1+Ez) with E != 0: Phi^{-1}(h) = (h-1)/(D - E h) has
    // a pole inside the disk when E h(z) = D somewhere in it.
    const auto m = boundary_margin_profile(LemmaId::L9_DE, make(1, 0, 0.5, 0.4, 0, 3));
    // h = 1 + 3z reaches D/E = 1.25 at z = 1/12
    CHECK(m.denominator_zeros == 1);
    const auto n = boundary_margin_profile(LemmaId::L9_DE, make(1, 0, 0.5, -0.4, 0, 0.2));
    // h = 1 + 0.2 z never reaches D/E = -1.25
    CHECK(n.denominator_zeros == 0);
  }

  TEST_CASE("admissibility constants") {
    const auto p = make(1, 0, 1, 0, 0, 1);
    CHECK(std::abs(admissibility_min(LemmaId::L5_sum, p, AdmissibilityQuantity::ReZQprimeOverQ, 1.0).value - 0.75) <= 1e-9);
    CHECK(std::abs(admissibility_min(LemmaId::L6_sumOverP, p, AdmissibilityQuantity::ReZQprimeOverQ, 1.0).value - 0.5) <= 1e-9);
    CHECK(std::abs(admissibility_min(LemmaId::L7_sumOverP2, p, AdmissibilityQuantity::ReZQprimeOverQ, 1.0).value - 0.25) <= 1e-9);
    CHECK(std::abs(admissibility_min(LemmaId::L9_DE, p, AdmissibilityQuantity::ReZQprimeOverQ, 0.99).value - 1.0) <= 1e-12);
    // 2/(1 + B r) - 1 at B = 0.5, r = 0.999, frozen from a 30-digit evaluation
    const auto a = admissibility_min(LemmaId::L2_full, make(1, 0.5), AdmissibilityQuantity::ReZQprimeOverQ, 0.999);
    CHECK(a.value == doctest::Approx(0.333777925975325108369456485495).epsilon(1e-12));
    CHECK(std::abs(a.argmin_t) <= 1e-8);
    CHECK_THROWS_AS(admissibility_min(LemmaId::L2_full, p, AdmissibilityQuantity::RePhiOfQ, 0.9), Error);
    CHECK_THROWS_AS(admissibility_min(LemmaId::L2_full, p, AdmissibilityQuantity::ReZQprimeOverQ, 1.5), Error);
  }

  TEST_CASE("check_superordination verdicts") {
    CHECK(check_superordination(LemmaId::L2_full, make(1, 0, 1, 0, 0, 3)).verdict == Verdict::Verified);
    CHECK(check_superordination(LemmaId::L2_full, make(1, 0, 1, 0, 0, 2)).verdict == Verdict::CriterionFails);
    CHECK(check_superordination(LemmaId::L2_full, make(1, 0, 1, 0, 0, 1)).verdict == Verdict::HypothesisFails);
    const auto r = check_superordination(LemmaId::L5_sum, make(1, 0, 1, 0, 0, 0.7));
    CHECK(r.verdict == Verdict::Verified);
    CHECK_FALSE(r.margin.has_value());
    CHECK(r.admissibility.size() == 2);
    CHECK_THROWS_AS(check_superordination(LemmaId::L2_full, make(0, 0.5)), Error);
  }

  TEST_CASE("property: verdict is the conjunction of its parts") {
    auto rng = subord::testing::rng_for(52);
    for (LemmaId id : kAllLemmas) {
      for (int i = 0; i < 6; ++i) {
        auto p = subord::testing::random_params(id, rng);
        p.beta = subord::testing::uniform(rng, 0.2, 8.0);
        const auto r = check_superordination(id, p, 512, 512);
        bool ok = r.feasible;
        if (r.margin) ok = ok && r.margin->min_margin >= 1 - 1e-9;
        for (const auto& a : r.admissibility) ok = ok && a.value > 0;
        CHECK((r.verdict == Verdict::Verified) == ok);
      }
    }
  }

  TEST_CASE("numeric thresholds at exact points") {
    CHECK(numeric_threshold(LemmaId::L1_kFamily, make(1, 0, 1, 0, 2)).beta ==
          doctest::Approx(std::pow(2.0, 2.5)).epsilon(1e-6));
    CHECK(numeric_threshold(LemmaId::L2_full, make(1, 0)).beta ==
          doctest::Approx(1 + std::sqrt(2.0)).epsilon(1e-6));
    CHECK(std::abs(numeric_threshold(LemmaId::L9_DE, make(1, 0)).beta - 1.0) <= 1e-6);
    CHECK_THROWS_AS(numeric_threshold(LemmaId::L5_sum, make(1, 0)), Error);
    CHECK_THROWS_AS(numeric_threshold(LemmaId::L10_DE_overP, make(1, -1, 1, -1)), Error);
  }

  TEST_CASE("a minimum held at the puncture is not a decrease") {
    // h -> infinity at t = pi, so the margin there is the limit 1/|B|
    auto p = make(0.85373646482758736, 0.58013964726381007, 1, 0, 1.3315403355288042);
    const double beta_star = closed_form_threshold(LemmaId::L1_kFamily, p).beta_star;
    const auto n = numeric_threshold(LemmaId::L1_kFamily, p);
    CHECK(n.beta <= beta_star);
    CHECK(n.scan_margin.back() == doctest::Approx(1 / p.B).epsilon(1e-6));
  }

  TEST_CASE("subordination semi-decider") {
    const auto sq = TargetRegion::sqrt_lemniscate();
    const auto half = compose(sqrt(PowerSeries::polynomial(std::vector<Complex>{1.0, 1.0}, 64)),
                              PowerSeries::polynomial(std::vector<Complex>{0.0, 0.5}, 64));
    CHECK(subordination_check(half, sq).min_margin > 0.0);
    CHECK(subordination_check(PowerSeries::polynomial(std::vector<Complex>{1.0, 1.0}, 8), sq)
              .min_margin < 0.0);
    const auto q = [](Complex z) { return std::sqrt(1.0 + z); };
    const std::array<double, 1> r{0.999};
    CHECK(std::abs(subordination_check(q, sq, r).min_margin) <= 1.1e-3);
    CHECK_THROWS_AS(
        subordination_check(PowerSeries::polynomial(std::vector<Complex>{2.0, 1.0}, 8), sq), Error);
  }

  TEST_CASE("implication trial examples") {
    const auto r = implication_trial(LemmaId::L2_full, make(1, 0, 1, 0, 0, 3), make_schwarz(Monomial{1}));
    CHECK(r.passed);
    CHECK(r.conclusion.min_margin > 0.0);
    const auto s = implication_trial(LemmaId::L9_DE, make(1, 0, 1, 0, 0, 1.5), make_schwarz(Monomial{1}));
    CHECK(s.passed);
    auto p = make(1, 0, 1, 0, 0, 0);
    p.beta = closed_form_threshold(LemmaId::L1_kFamily, p).beta_star;
    const auto t = implication_trial(LemmaId::L1_kFamily, p, make_schwarz(Monomial{2}));
    CHECK(t.premise_residual <= 1e-9);
    CHECK(t.conclusion.min_margin >= -1e-9);
  }

  TEST_CASE("the L1 lower bound g is minimized at t = 0") {
    auto rng = subord::testing::rng_for(53);
    for (int i = 0; i < 100; ++i) {
      auto p = subord::testing::random_params(LemmaId::L1_kFamily, rng);
      p.beta = subord::testing::uniform(rng, 0.5, 20.0);
      double best_t = 1.0, best = 1e300;
      for (int j = 0; j < 2000; ++j) {
        const double t = -kPi + 1e-6 + (2 * kPi - 2e-6) * j / 1999.0;
        const double g = l1_lower_bound(p, t);
        if (g < best || (g == best && std::abs(t) < std::abs(best_t))) {
          best = g;
          best_t = t;
        }
      }
      CHECK(std::abs(best_t) <= 2 * kPi / 1999.0);
    }
  }
}
