#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "subord/catalog.hpp"
#include "subord/series.hpp"

namespace subord::testing {

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex complex_in_disk(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  return std::polar(r, uniform(rng, -3.141592653589793, 3.141592653589793));
}

/// Series with c0 = `c0` and |c_n| <= decay^n, n >= 1.
inline PowerSeries random_series(std::mt19937_64& rng, std::size_t order, Complex c0,
                                 double decay = 0.5) {
  PowerSeries s(order);
  s[0] = c0;
  double scale = 1.0;
  for (std::size_t n = 1; n <= order; ++n) {
    scale *= decay;
    s[n] = scale * Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  }
  return s;
}

inline PowerSeries random_polynomial(std::mt19937_64& rng, std::size_t degree, std::size_t order) {
  PowerSeries s(order);
  for (std::size_t n = 0; n <= degree && n <= order; ++n) {
    s[n] = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
  }
  return s;
}

/// Ordered pair lo < hi in [-1, 1] with a gap of at least `gap`; lo > -1
/// strictly when `open_lower`.
inline std::pair<double, double> random_pair(std::mt19937_64& rng, double gap, bool open_lower) {
  for (;;) {
    double a = uniform(rng, -1.0, 1.0);
    double b = uniform(rng, -1.0, 1.0);
    if (a < b) std::swap(a, b);
    if (a - b < gap) continue;
    if (open_lower && b <= -1.0 + 1e-3) continue;
    return {a, b};
  }
}

/// Valid parameters for the lemma (beta left at 1).
inline LemmaParams random_params(LemmaId id, std::mt19937_64& rng) {
  LemmaParams p;
  const auto [a, b] = random_pair(rng, 0.05, id == LemmaId::L1_kFamily);
  p.A = a;
  p.B = b;
  const auto [d, e] = random_pair(rng, 0.05, false);
  p.D = d;
  p.E = e;
  p.k = uniform(rng, -0.9, 3.0);
  p.beta = 1.0;
  return p;
}

}  // namespace subord::testing
