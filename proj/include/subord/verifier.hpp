#pragma once

// Numerical checks behind each lemma: the boundary criterion
// |Phi^{-1}(h(e^{it}))| >= 1, the admissibility real parts, numeric beta
// thresholds, and a sampled subordination semi-decider.

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subord/catalog.hpp"
#include "subord/generators.hpp"
#include "subord/regions.hpp"
#include "subord/series.hpp"

namespace subord {

struct MarginProfile {
  std::vector<double> t_samples;  // sorted, in [-pi, pi]
  std::vector<double> margins;
  double min_margin = 0.0;
  double argmin_t = 0.0;
  bool refined = false;
  std::vector<double> punctures;  // excluded angles, radius tol.puncture
  // Zeros of the denominator of Phi^{-1}(h) in the disk (winding count at
  // radius 1 - 1e-6). Nonzero means Phi^{-1}(h) has poles; the boundary
  // criterion remains meaningful by the argument principle.
  int denominator_zeros = 0;
  // Minimum over samples with Re h(e^{it}) > 0 only. Differs from
  // min_margin for the square-root premise when h enters the left lobe of
  // the lemniscate, which is outside the premise region.
  double principal_min_margin = 0.0;
};

/// |Phi^{-1}(h(e^{it}))| at one angle; SingularPoint at a puncture,
/// InverseMapPole when h hits the pole of Phi^{-1}.
double criterion_margin(LemmaId id, const LemmaParams& params, double t);

/// NotApplicable for L5..L7, InvalidParameters if grid_size < 64.
MarginProfile boundary_margin_profile(LemmaId id, const LemmaParams& params,
                                      std::size_t grid_size = kDefaultMarginGrid,
                                      const Tolerances& tol = kTolerances);

enum class AdmissibilityQuantity { ReZQprimeOverQ, ReZHprimeOverQ, RePhiOfQ };
std::string_view to_string(AdmissibilityQuantity q);

struct AdmissibilityMin {
  AdmissibilityQuantity quantity = AdmissibilityQuantity::ReZQprimeOverQ;
  double radius = 1.0;
  double value = 0.0;
  double argmin_t = 0.0;
  double fd_max_error = 0.0;  // relative disagreement with finite differences
};

/// Minimum of the real part over an angular grid at `radius`, refined by
/// golden section. radius = 1 punctures the singular angles. Internal if
/// the closed form disagrees with central differences.
AdmissibilityMin admissibility_min(LemmaId id, const LemmaParams& params,
                                   AdmissibilityQuantity quantity, double radius,
                                   std::size_t grid_size = kDefaultAdmissibilityGrid,
                                   const Tolerances& tol = kTolerances);

/// Quantities and radius each lemma's route requires.
std::vector<AdmissibilityQuantity> required_admissibility(LemmaId id);
double admissibility_radius(LemmaId id);

enum class Verdict { Verified, HypothesisFails, CriterionFails };
std::string_view to_string(Verdict v);

struct VerificationReport {
  LemmaId lemma = LemmaId::L1_kFamily;
  LemmaParams params;
  bool feasible = false;
  ThresholdResult threshold;
  std::optional<MarginProfile> margin;  // absent for L5..L7
  std::vector<AdmissibilityMin> admissibility;
  Verdict verdict = Verdict::CriterionFails;
  std::vector<std::string> diagnostics;
};

/// CriterionFails if the margin or an admissibility minimum fails, else
/// HypothesisFails if the stated inequality fails, else Verified.
VerificationReport check_superordination(LemmaId id, const LemmaParams& params,
                                         std::size_t grid_size = kDefaultMarginGrid,
                                         std::size_t adm_grid = kDefaultAdmissibilityGrid,
                                         const Tolerances& tol = kTolerances);

struct NumericThreshold {
  double beta = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::vector<double> scan_beta;
  std::vector<double> scan_margin;
};

/// Smallest beta on the terminal run of the scan where min_margin >= 1,
/// bisected to tol.verdict relative. The scan covers [1e-6, 10 beta*]
/// (64 points); margins must be nondecreasing (up to tol.puncture relative)
/// after the last failing scan point, otherwise NonMonotoneMargin. ThresholdNotBracketed when the top
/// of the bracket still fails. InfeasibleParameters without a closed form.
NumericThreshold numeric_threshold(LemmaId id, const LemmaParams& params,
                                   std::size_t grid_size = kDefaultMarginGrid,
                                   const Tolerances& tol = kTolerances);

inline constexpr std::array<double, 3> kDefaultRadii = {0.9, 0.99, 0.999};

struct SubordinationResult {
  double min_margin = 0.0;
  double argmin_radius = 0.0;
  double argmin_t = 0.0;
  std::vector<double> radii;
  std::vector<double> tail_bounds;  // series overload only
  bool tail_certified = true;
};

/// Minimum membership margin of p(r e^{it}) over the radii and `angles`
/// angles. A positive value is sampled evidence of p(D) in q(D), not a
/// proof. ConstantTermMismatch unless p(0) = q(0) = 1.
SubordinationResult subordination_check(const PowerSeries& p, const TargetRegion& region,
                                        std::span<const double> radii = kDefaultRadii,
                                        std::size_t angles = kDefaultSubordinationAngles,
                                        const Tolerances& tol = kTolerances);
SubordinationResult subordination_check(const std::function<Complex(Complex)>& f,
                                        const TargetRegion& region,
                                        std::span<const double> radii = kDefaultRadii,
                                        std::size_t angles = kDefaultSubordinationAngles,
                                        const Tolerances& tol = kTolerances);

struct TrialReport {
  std::string schwarz;
  bool feasible = false;
  std::size_t order = 0;
  double premise_residual = 0.0;
  SubordinationResult conclusion;
  bool passed = false;  // residual and conclusion margin within tolerance
};

/// Premise-exact p for w, then subordination_check against the conclusion
/// region. Feasibility is recorded, not required, so campaigns can probe
/// below the threshold.
TrialReport implication_trial(LemmaId id, const LemmaParams& params, const SchwarzFunction& w,
                              std::size_t order = kDefaultOrder,
                              std::span<const double> radii = kDefaultRadii,
                              const Tolerances& tol = kTolerances);

/// The L1 proof's lower bound |beta| / (2(A-B)(2cos(t/2))^((k+1)/2) + |B beta|).
double l1_lower_bound(const LemmaParams& params, double t);

}  // namespace subord
