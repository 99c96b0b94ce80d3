#pragma once

// Test-function construction: Schwarz self-maps of the disk and power-series
// solutions p of a lemma's premise taken with equality,
//
//   nu(p) + beta z p'/p^k = Phi(w(z)),   nu(p) = 1 or p,
//
// so that the premise subordination holds by construction.

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "subord/catalog.hpp"
#include "subord/series.hpp"

namespace subord {

struct Monomial {
  unsigned m = 1;
};

struct BlaschkeFactor {
  Complex a = 0.0;  // |a| < 1; w(z) = z (z + a)/(1 + conj(a) z)
};

struct ScaledPolynomial {
  std::vector<Complex> coeffs;  // coeffs[j] multiplies z^(j+1)
  double scale = 1.0;
};

class SchwarzFunction {
 public:
  using Family = std::variant<Monomial, BlaschkeFactor, ScaledPolynomial>;

  const Family& family() const noexcept { return family_; }
  /// Taylor expansion to the given order.
  PowerSeries series(std::size_t order = kDefaultOrder) const;
  Complex operator()(Complex z) const;
  std::string describe() const;

 private:
  explicit SchwarzFunction(Family f) : family_(std::move(f)) {}
  friend SchwarzFunction make_schwarz(Monomial);
  friend SchwarzFunction make_schwarz(BlaschkeFactor);
  friend SchwarzFunction make_schwarz(std::vector<Complex>);

  Family family_;
};

SchwarzFunction make_schwarz(Monomial spec);
SchwarzFunction make_schwarz(BlaschkeFactor spec);
/// ScaledPolynomial from raw coefficients of z, z^2, ...: divided by the
/// measured boundary maximum times 1.0000001. NotAContraction if the
/// polynomial vanishes or the bound cannot be certified.
SchwarzFunction make_schwarz(std::vector<Complex> raw_coeffs);

/// Largest |w(e^{it})| over a uniform grid, refined by golden section.
double boundary_sup(const SchwarzFunction& w, std::size_t samples = 4096);

/// Seeded draw: Monomial(1..4), BlaschkeFactor with |a| <= 0.9, or a
/// ScaledPolynomial of the given degree, each with probability 1/3.
SchwarzFunction random_schwarz(std::mt19937_64& rng, std::size_t degree = 8);

struct PremiseSolution {
  PowerSeries p;
  double residual = 0.0;  // max |[z^n](LHS - Phi(w))|, n <= N
};

/// Phi(w(z)) as a series, Phi the premise region's map.
PowerSeries premise_target_series(LemmaId id, const LemmaParams& params, const PowerSeries& w);

/// nu(p) + beta z p'/p^k evaluated with series arithmetic.
PowerSeries premise_lhs(LemmaId id, const LemmaParams& params, const PowerSeries& p);

/// Coefficient recursion for p, then an independent residual evaluation.
/// Pivot n beta (OnePlus form) or n beta + 1 (PPlus form).
PremiseSolution solve_premise_ode(LemmaId id, const LemmaParams& params,
                                  const SchwarzFunction& w, std::size_t order = kDefaultOrder);

struct AdaptiveSolution {
  PremiseSolution solution;
  double tail_bound = 0.0;  // at the requested radius
  bool tail_certified = false;
};

/// Doubles the order from `initial_order` until residual and tail bound at
/// `radius` pass, stopping at `max_order`. TruncationInsufficient if the
/// residual still fails there; an uncertified tail is only flagged.
AdaptiveSolution solve_premise_adaptive(LemmaId id, const LemmaParams& params,
                                        const SchwarzFunction& w, double radius,
                                        std::size_t initial_order = kDefaultOrder,
                                        std::size_t max_order = kMaxOrder,
                                        const Tolerances& tol = kTolerances);

}  // namespace subord
