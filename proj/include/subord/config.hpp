#pragma once

#include <complex>
#include <cstddef>

namespace subord {

using Complex = std::complex<double>;

/// Every numerical tolerance used by the library, with its default.
struct Tolerances {
  double coefficient = 1e-12;        // series identities, constant-term checks
  double evaluation = 1e-10;         // pointwise series evaluation
  double division_pivot = 1e-14;     // |b0| below this is a zero divisor
  double boundary_band = 1e-12;      // |margin| <= band classifies as Boundary
  double verdict = 1e-9;             // criterion holds when min margin >= 1 - verdict
  double premise_residual = 1e-9;    // max coefficient of LHS - Phi(w)
  double tail_bound = 1e-9;          // |c_N| r^N / (1 - r)
  double puncture = 1e-6;            // angular radius excluded around singular points
  double exponent_open_bound = 1e-9; // k must exceed -1 by this much
  double refine_resolution = 1e-8;   // golden-section angular resolution
  double fd_step = 1e-6;             // central finite-difference step
  double fd_agreement = 1e-5;        // closed form vs finite difference
};

inline constexpr Tolerances kTolerances{};

inline constexpr std::size_t kDefaultOrder = 64;
inline constexpr std::size_t kMaxOrder = 512;
inline constexpr std::size_t kDefaultMarginGrid = 4096;
inline constexpr std::size_t kDefaultAdmissibilityGrid = 8192;
inline constexpr std::size_t kDefaultSubordinationAngles = 2048;

}  // namespace subord
