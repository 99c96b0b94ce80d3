#pragma once

// The eleven lemmas as data: premise map h, dominant Q, the premise and
// conclusion regions, and the closed-form beta thresholds.
//
//   L1        1 + b z p'/p^k  < (1+Az)/(1+Bz)   =>  p < sqrt(1+z)
//   L2..L4    1 + b z p'/p^n  < sqrt(1+z)       =>  p < (1+Az)/(1+Bz)   n = 0,1,2
//   L5..L7    p + b z p'/p^n  < sqrt(1+z)       =>  p < sqrt(1+z)       n = 0,1,2
//   L8        p + b z p'/p    < sqrt(1+z)       =>  p < (1+Az)/(1+Bz)
//   L9..L11   1 + b z p'/p^n  < (1+Dz)/(1+Ez)   =>  p < (1+Az)/(1+Bz)   n = 0,1,2

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subord/config.hpp"
#include "subord/regions.hpp"

namespace subord {

enum class LemmaId {
  L1_kFamily,
  L2_full,
  L3_overP,
  L4_overP2,
  L5_sum,
  L6_sumOverP,
  L7_sumOverP2,
  L8_sumJanowski,
  L9_DE,
  L10_DE_overP,
  L11_DE_overP2,
};

inline constexpr std::array<LemmaId, 11> kAllLemmas = {
    LemmaId::L1_kFamily,     LemmaId::L2_full,     LemmaId::L3_overP,
    LemmaId::L4_overP2,      LemmaId::L5_sum,      LemmaId::L6_sumOverP,
    LemmaId::L7_sumOverP2,   LemmaId::L8_sumJanowski, LemmaId::L9_DE,
    LemmaId::L10_DE_overP,   LemmaId::L11_DE_overP2,
};

/// "L1".."L11".
std::string_view short_name(LemmaId id);
std::optional<LemmaId> parse_lemma(std::string_view name);

enum class Parameter { A, B, D, E, k, beta };
std::string_view to_string(Parameter p);

/// Every lemma reads only the fields it needs; the rest are ignored.
struct LemmaParams {
  double A = 1.0;
  double B = 0.0;
  double D = 1.0;
  double E = 0.0;
  double k = 0.0;
  double beta = 1.0;

  double get(Parameter p) const;
  void set(Parameter p, double value);
  bool operator==(const LemmaParams&) const = default;
};

/// Left-hand side shape of the premise.
enum class PremiseForm {
  OnePlus,  // 1 + b z p'/p^k
  PPlus,    // p + b z p'/p^k
};

/// Which differential-subordination lemma carries the proof.
enum class Route {
  StarlikeDominant,  // zp'phi(p) < zq'phi(q) with zq'phi(q) starlike
  ConvexTarget,      // p + zp'phi(p) < q with Re phi(q) > 0
  GeneralDominant,   // nu(p) + zp'phi(p) < nu(q) + zq'phi(q)
};

struct LemmaInfo {
  LemmaId id;
  std::string_view statement;
  PremiseForm form;
  Route route;
  bool has_margin_criterion;
  std::vector<Parameter> parameters;  // without beta
};

const LemmaInfo& lemma_info(LemmaId id);

/// Exponent of p in the premise: k for L1, 0/1/2 for the others.
double premise_exponent(LemmaId id, const LemmaParams& params);

/// Region of the premise's right-hand side, Phi(D).
TargetRegion premise_region(LemmaId id, const LemmaParams& params);
/// Region of the conclusion, q(D).
TargetRegion conclusion_region(LemmaId id, const LemmaParams& params);

/// Range problems for the lemma's parameters, empty when valid.
std::vector<std::string> validate_params(LemmaId id, const LemmaParams& params,
                                         bool require_beta = true,
                                         const Tolerances& tol = kTolerances);

/// h = premise functional evaluated at q. SingularPoint at poles.
Complex premise_h_eval(LemmaId id, const LemmaParams& params, const DiskPoint& z);
Complex premise_h_eval(LemmaId id, const LemmaParams& params, Complex z);

/// Q = z q' phi(q); h = 1 + Q for the OnePlus lemmas, h = q + Q otherwise.
Complex dominant_Q_eval(LemmaId id, const LemmaParams& params, const DiskPoint& z);
Complex dominant_Q_eval(LemmaId id, const LemmaParams& params, Complex z);

/// Closed forms used by the admissibility checks.
Complex z_Qprime_over_Q(LemmaId id, const LemmaParams& params, const DiskPoint& z);
Complex z_hprime_over_Q(LemmaId id, const LemmaParams& params, const DiskPoint& z);
/// phi(q(z)) = beta / q^n for L5..L7; NotApplicable elsewhere.
Complex phi_of_q(LemmaId id, const LemmaParams& params, const DiskPoint& z);

/// Angles in (-pi, pi] where h or Q is singular on the unit circle.
std::vector<double> singular_angles(LemmaId id, const LemmaParams& params);

struct ThresholdResult {
  enum class Status { Feasible, AlwaysFeasible, Infeasible };

  Status status = Status::Infeasible;
  double beta_star = 0.0;  // meaningful when Feasible
  std::string binding_constraint;
};

std::string_view to_string(ThresholdResult::Status s);

/// Smallest beta > 0 satisfying the lemma's hypothesis (beta in params is
/// ignored). The returned beta_star passes feasibility_check exactly.
ThresholdResult closed_form_threshold(LemmaId id, const LemmaParams& params);

/// The lemma's hypothesis inequalities, transcribed as stated.
bool feasibility_check(LemmaId id, const LemmaParams& params);

/// Minimal x > 0 with x - |b - E x| >= a (a > 0, |E| <= 1), or nullopt.
/// The left side is nondecreasing in x, so the solution set is a ray.
std::optional<double> solve_abs_linear(double a, double b, double E);

}  // namespace subord
