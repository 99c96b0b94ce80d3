#include "subord/catalog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "subord/errors.hpp"
#include "subord/optimize.hpp"

namespace subord {

namespace {

using P = Parameter;
using std::numbers::sqrt2;

const std::array<LemmaInfo, 11>& table() {
  static const std::array<LemmaInfo, 11> rows = {{
      {LemmaId::L1_kFamily, "1 + beta z p'/p^k < (1+Az)/(1+Bz)  =>  p < sqrt(1+z)",
       PremiseForm::OnePlus, Route::StarlikeDominant, true, {P::A, P::B, P::k}},
      {LemmaId::L2_full, "1 + beta z p' < sqrt(1+z)  =>  p < (1+Az)/(1+Bz)",
       PremiseForm::OnePlus, Route::StarlikeDominant, true, {P::A, P::B}},
      {LemmaId::L3_overP, "1 + beta z p'/p < sqrt(1+z)  =>  p < (1+Az)/(1+Bz)",
       PremiseForm::OnePlus, Route::StarlikeDominant, true, {P::A, P::B}},
      {LemmaId::L4_overP2, "1 + beta z p'/p^2 < sqrt(1+z)  =>  p < (1+Az)/(1+Bz)",
       PremiseForm::OnePlus, Route::StarlikeDominant, true, {P::A, P::B}},
      {LemmaId::L5_sum, "p + beta z p' < sqrt(1+z)  =>  p < sqrt(1+z)", PremiseForm::PPlus,
       Route::ConvexTarget, false, {}},
      {LemmaId::L6_sumOverP, "p + beta z p'/p < sqrt(1+z)  =>  p < sqrt(1+z)",
       PremiseForm::PPlus, Route::ConvexTarget, false, {}},
      {LemmaId::L7_sumOverP2, "p + beta z p'/p^2 < sqrt(1+z)  =>  p < sqrt(1+z)",
       PremiseForm::PPlus, Route::ConvexTarget, false, {}},
      {LemmaId::L8_sumJanowski, "p + beta z p'/p < sqrt(1+z)  =>  p < (1+Az)/(1+Bz)",
       PremiseForm::PPlus, Route::GeneralDominant, true, {P::A, P::B}},
      {LemmaId::L9_DE, "1 + beta z p' < (1+Dz)/(1+Ez)  =>  p < (1+Az)/(1+Bz)",
       PremiseForm::OnePlus, Route::StarlikeDominant, true, {P::A, P::B, P::D, P::E}},
      {LemmaId::L10_DE_overP, "1 + beta z p'/p < (1+Dz)/(1+Ez)  =>  p < (1+Az)/(1+Bz)",
       PremiseForm::OnePlus, Route::StarlikeDominant, true, {P::A, P::B, P::D, P::E}},
      {LemmaId::L11_DE_overP2, "1 + beta z p'/p^2 < (1+Dz)/(1+Ez)  =>  p < (1+Az)/(1+Bz)",
       PremiseForm::OnePlus, Route::StarlikeDominant, true, {P::A, P::B, P::D, P::E}},
  }};
  return rows;
}

constexpr double kUnitTol = 1e-12;

bool is_one(double x) { return std::abs(x - 1.0) <= kUnitTol; }
bool is_minus_one(double x) { return std::abs(x + 1.0) <= kUnitTol; }

Complex checked_div(Complex num, Complex den) {
  if (den == 0.0) throw Error(ErrorKind::SingularPoint, "evaluation at a pole");
  const Complex r = num / den;
  if (!std::isfinite(r.real()) || !std::isfinite(r.imag())) {
    throw Error(ErrorKind::SingularPoint, "evaluation overflowed near a pole");
  }
  return r;
}

// Exponent s in Q = beta z / (2 (1+z)^s) for the sqrt-dominant lemmas.
double sqrt_family_exponent(LemmaId id, const LemmaParams& params) {
  switch (id) {
    case LemmaId::L1_kFamily: return (params.k + 1.0) / 2.0;
    case LemmaId::L5_sum: return 0.5;
    case LemmaId::L6_sumOverP: return 1.0;
    case LemmaId::L7_sumOverP2: return 1.5;
    default: break;
  }
  throw Error(ErrorKind::Internal, "not a sqrt-dominant lemma");
}

bool sqrt_dominant(LemmaId id) {
  return id == LemmaId::L1_kFamily || id == LemmaId::L5_sum || id == LemmaId::L6_sumOverP ||
         id == LemmaId::L7_sumOverP2;
}

// Janowski-dominant lemmas grouped by the denominator of Q.
enum class JanowskiShape { BSquared, AB, ASquared };

JanowskiShape janowski_shape(LemmaId id) {
  switch (id) {
    case LemmaId::L2_full:
    case LemmaId::L9_DE: return JanowskiShape::BSquared;
    case LemmaId::L3_overP:
    case LemmaId::L8_sumJanowski:
    case LemmaId::L10_DE_overP: return JanowskiShape::AB;
    case LemmaId::L4_overP2:
    case LemmaId::L11_DE_overP2: return JanowskiShape::ASquared;
    default: break;
  }
  throw Error(ErrorKind::Internal, "not a Janowski-dominant lemma");
}

LemmaParams with_beta(LemmaParams p, double beta) {
  p.beta = beta;
  return p;
}

// Moves beta up by a few ulps until the verbatim inequality accepts it.
double nudge_feasible(LemmaId id, const LemmaParams& params, double beta) {
  for (int i = 0; i < 64; ++i) {
    if (feasibility_check(id, with_beta(params, beta))) return beta;
    beta = std::nextafter(beta, std::numeric_limits<double>::infinity());
  }
  throw Error(ErrorKind::Internal, "closed-form threshold does not satisfy its inequality");
}

// Independent bisection on the verbatim inequality; the closed form must agree.
void cross_check(LemmaId id, const LemmaParams& params, double beta_star) {
  const auto holds = [&](double b) { return feasibility_check(id, with_beta(params, b)); };
  const double hi = 2.0 * beta_star + 1.0;
  if (holds(0.0) || !holds(hi)) {
    throw Error(ErrorKind::Internal, "threshold cross-check bracket invalid");
  }
  const double b = bisect_threshold(holds, 0.0, hi, 1e-13 * hi);
  if (std::abs(b - beta_star) > 1e-9 * std::max(1.0, beta_star)) {
    std::ostringstream os;
    os.precision(17);
    os << "closed form " << beta_star << " disagrees with bisection " << b;
    throw Error(ErrorKind::Internal, os.str());
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(9);
  os << x;
  return os.str();
}

}  // namespace

std::string_view short_name(LemmaId id) {
  static constexpr std::array<std::string_view, 11> names = {
      "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "L9", "L10", "L11"};
  return names[static_cast<std::size_t>(id)];
}

std::optional<LemmaId> parse_lemma(std::string_view name) {
  for (LemmaId id : kAllLemmas) {
    if (short_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::A: return "A";
    case Parameter::B: return "B";
    case Parameter::D: return "D";
    case Parameter::E: return "E";
    case Parameter::k: return "k";
    case Parameter::beta: return "beta";
  }
  return "?";
}

double LemmaParams::get(Parameter p) const {
  switch (p) {
    case Parameter::A: return A;
    case Parameter::B: return B;
    case Parameter::D: return D;
    case Parameter::E: return E;
    case Parameter::k: return k;
    case Parameter::beta: return beta;
  }
  return 0.0;
}

void LemmaParams::set(Parameter p, double value) {
  switch (p) {
    case Parameter::A: A = value; break;
    case Parameter::B: B = value; break;
    case Parameter::D: D = value; break;
    case Parameter::E: E = value; break;
    case Parameter::k: k = value; break;
    case Parameter::beta: beta = value; break;
  }
}

const LemmaInfo& lemma_info(LemmaId id) { return table()[static_cast<std::size_t>(id)]; }

double premise_exponent(LemmaId id, const LemmaParams& params) {
  switch (id) {
    case LemmaId::L1_kFamily: return params.k;
    case LemmaId::L2_full:
    case LemmaId::L5_sum:
    case LemmaId::L9_DE: return 0.0;
    case LemmaId::L3_overP:
    case LemmaId::L6_sumOverP:
    case LemmaId::L8_sumJanowski:
    case LemmaId::L10_DE_overP: return 1.0;
    case LemmaId::L4_overP2:
    case LemmaId::L7_sumOverP2:
    case LemmaId::L11_DE_overP2: return 2.0;
  }
  return 0.0;
}

TargetRegion premise_region(LemmaId id, const LemmaParams& params) {
  switch (id) {
    case LemmaId::L1_kFamily: return {TargetRegion::Kind::Janowski, params.A, params.B};
    case LemmaId::L9_DE:
    case LemmaId::L10_DE_overP:
    case LemmaId::L11_DE_overP2: return {TargetRegion::Kind::Janowski, params.D, params.E};
    default: return TargetRegion::sqrt_lemniscate();
  }
}

TargetRegion conclusion_region(LemmaId id, const LemmaParams& params) {
  if (sqrt_dominant(id)) return TargetRegion::sqrt_lemniscate();
  return {TargetRegion::Kind::Janowski, params.A, params.B};
}

std::vector<std::string> validate_params(LemmaId id, const LemmaParams& params,
                                         bool require_beta, const Tolerances& tol) {
  std::vector<std::string> issues;
  const LemmaInfo& info = lemma_info(id);
  const auto uses = [&](Parameter p) {
    for (Parameter q : info.parameters) {
      if (q == p) return true;
    }
    return false;
  };
  const std::string name(short_name(id));
  for (Parameter p : {Parameter::A, Parameter::B, Parameter::D, Parameter::E, Parameter::k}) {
    if (uses(p) && !std::isfinite(params.get(p))) {
      issues.push_back(name + ": " + std::string(to_string(p)) + " must be finite");
    }
  }
  if (uses(Parameter::A)) {
    const bool lower_ok = id == LemmaId::L1_kFamily ? params.B > -1.0 : params.B >= -1.0;
    if (!(lower_ok && params.B < params.A && params.A <= 1.0)) {
      issues.push_back(name + (id == LemmaId::L1_kFamily ? ": need -1 < B < A <= 1"
                                                          : ": need -1 <= B < A <= 1"));
    }
  }
  if (uses(Parameter::D) && !(params.E >= -1.0 && params.E < params.D && params.D <= 1.0)) {
    issues.push_back(name + ": need -1 <= E < D <= 1");
  }
  if (uses(Parameter::k) && !(params.k > -1.0 + tol.exponent_open_bound && params.k <= 3.0)) {
    issues.push_back(name + ": need -1 < k <= 3");
  }
  if (require_beta) {
    const bool positive = info.form == PremiseForm::PPlus;
    if (!std::isfinite(params.beta)) {
      issues.push_back(name + ": beta must be finite");
    } else if (positive && !(params.beta > 0.0)) {
      issues.push_back(name + ": need beta > 0");
    } else if (!positive && params.beta == 0.0) {
      issues.push_back(name + ": need beta != 0");
    }
  }
  return issues;
}

Complex dominant_Q_eval(LemmaId id, const LemmaParams& params, const DiskPoint& z) {
  const double beta = params.beta;
  if (sqrt_dominant(id)) {
    const double s = sqrt_family_exponent(id, params);
    return checked_div(beta * z.z(), 2.0 * std::pow(z.one_plus(1.0), s));
  }
  const double scale = beta * (params.A - params.B);
  switch (janowski_shape(id)) {
    case JanowskiShape::BSquared: {
      const Complex d = z.one_plus(params.B);
      return checked_div(scale * z.z(), d * d);
    }
    case JanowskiShape::AB:
      return checked_div(scale * z.z(), z.one_plus(params.A) * z.one_plus(params.B));
    case JanowskiShape::ASquared: {
      const Complex d = z.one_plus(params.A);
      return checked_div(scale * z.z(), d * d);
    }
  }
  return 0.0;
}

Complex dominant_Q_eval(LemmaId id, const LemmaParams& params, Complex z) {
  return dominant_Q_eval(id, params, DiskPoint(z));
}

Complex premise_h_eval(LemmaId id, const LemmaParams& params, const DiskPoint& z) {
  const Complex Q = dominant_Q_eval(id, params, z);
  if (lemma_info(id).form == PremiseForm::OnePlus) return 1.0 + Q;
  return target_eval(conclusion_region(id, params), z) + Q;
}

Complex premise_h_eval(LemmaId id, const LemmaParams& params, Complex z) {
  return premise_h_eval(id, params, DiskPoint(z));
}

Complex z_Qprime_over_Q(LemmaId id, const LemmaParams& params, const DiskPoint& z) {
  if (sqrt_dominant(id)) {
    // 1 - s z/(1+z) = 1 - s + s/(1+z)
    const double s = sqrt_family_exponent(id, params);
    return 1.0 - s + checked_div(s, z.one_plus(1.0));
  }
  switch (janowski_shape(id)) {
    case JanowskiShape::BSquared:  // (1 - Bz)/(1 + Bz)
      return checked_div(2.0, z.one_plus(params.B)) - 1.0;
    case JanowskiShape::AB:  // (1 - AB z^2)/((1 + Az)(1 + Bz))
      return checked_div(1.0, z.one_plus(params.A)) + checked_div(1.0, z.one_plus(params.B)) -
             1.0;
    case JanowskiShape::ASquared:  // (1 - Az)/(1 + Az)
      return checked_div(2.0, z.one_plus(params.A)) - 1.0;
  }
  return 0.0;
}

Complex z_hprime_over_Q(LemmaId id, const LemmaParams& params, const DiskPoint& z) {
  const Complex zq = z_Qprime_over_Q(id, params, z);
  if (lemma_info(id).form == PremiseForm::OnePlus) return zq;
  // h = q + beta z q'/q^n:  z q'/Q = q^n / beta
  const Complex q = target_eval(conclusion_region(id, params), z);
  const double n = premise_exponent(id, params);
  return std::pow(q, n) / params.beta + zq;
}

Complex phi_of_q(LemmaId id, const LemmaParams& params, const DiskPoint& z) {
  switch (id) {
    case LemmaId::L5_sum: return params.beta;
    case LemmaId::L6_sumOverP: return checked_div(params.beta, std::sqrt(z.one_plus(1.0)));
    case LemmaId::L7_sumOverP2: return checked_div(params.beta, z.one_plus(1.0));
    default: break;
  }
  throw Error(ErrorKind::NotApplicable,
              std::string(short_name(id)) + " has no Re phi(q) > 0 condition");
}

std::vector<double> singular_angles(LemmaId id, const LemmaParams& params) {
  std::vector<double> angles;
  const auto add = [&](double t) {
    for (double a : angles) {
      if (a == t) return;
    }
    angles.push_back(t);
  };
  if (sqrt_dominant(id)) {
    add(std::numbers::pi);
    return angles;
  }
  switch (janowski_shape(id)) {
    case JanowskiShape::BSquared:
      if (is_minus_one(params.B)) add(0.0);
      break;
    case JanowskiShape::AB:
      if (is_one(params.A)) add(std::numbers::pi);
      if (is_minus_one(params.B)) add(0.0);
      break;
    case JanowskiShape::ASquared:
      if (is_one(params.A)) add(std::numbers::pi);
      break;
  }
  // q itself is singular at -1/B for L8.
  if (id == LemmaId::L8_sumJanowski && is_minus_one(params.B)) add(0.0);
  return angles;
}

std::string_view to_string(ThresholdResult::Status s) {
  switch (s) {
    case ThresholdResult::Status::Feasible: return "Feasible";
    case ThresholdResult::Status::AlwaysFeasible: return "AlwaysFeasible";
    case ThresholdResult::Status::Infeasible: return "Infeasible";
  }
  return "Unknown";
}

bool feasibility_check(LemmaId id, const LemmaParams& p) {
  const double A = p.A, B = p.B, D = p.D, E = p.E, beta = p.beta;
  switch (id) {
    case LemmaId::L1_kFamily:
      return std::abs(beta) >= std::pow(2.0, (p.k + 3.0) / 2.0) * (A - B) + std::abs(B * beta);
    case LemmaId::L2_full:
      return (A - B) * beta >=
             sqrt2 * (1.0 + std::abs(B)) * (1.0 + std::abs(B)) + (1.0 - B) * (1.0 - B);
    case LemmaId::L3_overP:
      return (A - B) * beta >= (sqrt2 - 1.0) * (1.0 + std::abs(A)) * (1.0 + std::abs(B));
    case LemmaId::L4_overP2:
      return (A - B) * beta >=
             (sqrt2 - 1.0) * (1.0 + std::abs(A)) * (1.0 + std::abs(A)) + (1.0 - A) * (1.0 - A);
    case LemmaId::L5_sum:
    case LemmaId::L6_sumOverP:
    case LemmaId::L7_sumOverP2: return beta > 0.0;
    case LemmaId::L8_sumJanowski: {
      const bool first = (A - B) * beta >=
                         sqrt2 * (1.0 + std::abs(A)) * (1.0 + std::abs(B)) + A * A - 1.0;
      const double m = (A - B) / ((1.0 + std::abs(A)) * (1.0 + std::abs(B))) -
                       (1.0 - std::abs(B)) / (1.0 + std::abs(B));
      const bool second = 1.0 / beta >= std::max(0.0, m);
      return first && second;
    }
    case LemmaId::L9_DE:
      return beta != 0.0 && beta * (A - B) >= (D - E) * (1.0 + B * B) +
                                                  std::abs(2.0 * B * (D - E) - E * beta * (A - B));
    case LemmaId::L10_DE_overP:
      return beta != 0.0 &&
             beta * (A - B) >= (D - E) * (1.0 + std::abs(A * B)) +
                                   std::abs((A + B) * (D - E) - E * beta * (A - B));
    case LemmaId::L11_DE_overP2:
      return beta != 0.0 && std::abs(beta) * (A - B) >=
                                (D - E) * (1.0 + A * A) +
                                    std::abs(2.0 * A * (D - E) - E * beta * (A - B));
  }
  return false;
}

std::optional<double> solve_abs_linear(double a, double b, double E) {
  const auto f = [&](double x) { return x - std::abs(b - E * x); };
  std::optional<double> best;
  const auto consider = [&](double x) {
    if (!(x > 0.0) || !std::isfinite(x)) return;
    if (f(x) < a - 1e-12 * std::max(1.0, a)) return;
    if (!best || x < *best) best = x;
  };
  const double slack = 1e-12;
  if (1.0 + E > 0.0) {
    const double x = (a + b) / (1.0 + E);  // branch b - E x >= 0
    if (b - E * x >= -slack * std::max(1.0, std::abs(b) + std::abs(E * x))) consider(x);
  }
  if (1.0 - E > 0.0) {
    const double x = (a - b) / (1.0 - E);  // branch b - E x <= 0
    if (b - E * x <= slack * std::max(1.0, std::abs(b) + std::abs(E * x))) consider(x);
  }
  return best;
}

ThresholdResult closed_form_threshold(LemmaId id, const LemmaParams& params) {
  using Status = ThresholdResult::Status;
  const double A = params.A, B = params.B, D = params.D, E = params.E;
  ThresholdResult r;
  const auto feasible = [&](double raw, std::string binding, bool implicit) {
    r.status = Status::Feasible;
    r.beta_star = nudge_feasible(id, params, raw);
    r.binding_constraint = std::move(binding);
    if (implicit) cross_check(id, params, r.beta_star);
    return r;
  };
  const auto infeasible = [&](std::string why) {
    r.status = Status::Infeasible;
    r.binding_constraint = std::move(why);
    return r;
  };

  switch (id) {
    case LemmaId::L1_kFamily: {
      const double c = std::pow(2.0, (params.k + 3.0) / 2.0) * (A - B);
      if (std::abs(B) >= 1.0) return infeasible("|beta| >= c + |B beta| has no solution for |B| = 1");
      return feasible(c / (1.0 - std::abs(B)),
                      "|beta| >= 2^((k+3)/2)(A-B) + |B beta|  =>  beta (1-|B|) >= 2^((k+3)/2)(A-B)",
                      true);
    }
    case LemmaId::L2_full:
      return feasible((sqrt2 * (1.0 + std::abs(B)) * (1.0 + std::abs(B)) + (1.0 - B) * (1.0 - B)) /
                          (A - B),
                      "(A-B) beta >= sqrt2 (1+|B|)^2 + (1-B)^2", false);
    case LemmaId::L3_overP:
      return feasible((sqrt2 - 1.0) * (1.0 + std::abs(A)) * (1.0 + std::abs(B)) / (A - B),
                      "(A-B) beta >= (sqrt2-1)(1+|A|)(1+|B|)", false);
    case LemmaId::L4_overP2:
      return feasible(((sqrt2 - 1.0) * (1.0 + std::abs(A)) * (1.0 + std::abs(A)) +
                       (1.0 - A) * (1.0 - A)) /
                          (A - B),
                      "(A-B) beta >= (sqrt2-1)(1+|A|)^2 + (1-A)^2", false);
    case LemmaId::L5_sum:
    case LemmaId::L6_sumOverP:
    case LemmaId::L7_sumOverP2:
      r.status = Status::AlwaysFeasible;
      r.binding_constraint = "beta > 0";
      return r;
    case LemmaId::L8_sumJanowski: {
      const double first =
          (sqrt2 * (1.0 + std::abs(A)) * (1.0 + std::abs(B)) + A * A - 1.0) / (A - B);
      const double m = (A - B) / ((1.0 + std::abs(A)) * (1.0 + std::abs(B))) -
                       (1.0 - std::abs(B)) / (1.0 + std::abs(B));
      if (m > 0.0 && first > 1.0 / m) {
        return infeasible("condition 1 needs beta >= " + fmt(first) +
                          ", condition 2 caps beta <= " + fmt(1.0 / m));
      }
      std::string binding = "(A-B) beta >= sqrt2 (1+|A|)(1+|B|) + |A|^2 - 1";
      binding += m > 0.0 ? "; condition 2 caps beta <= " + fmt(1.0 / m)
                         : "; condition 2 vacuous";
      r.status = Status::Feasible;
      r.beta_star = first;
      for (int i = 0; i < 64 && !feasibility_check(id, with_beta(params, r.beta_star)); ++i) {
        r.beta_star = std::nextafter(r.beta_star, std::numeric_limits<double>::infinity());
      }
      if (!feasibility_check(id, with_beta(params, r.beta_star))) {
        return infeasible("conditions 1 and 2 meet only at beta = " + fmt(first));
      }
      r.binding_constraint = std::move(binding);
      return r;
    }
    case LemmaId::L9_DE:
    case LemmaId::L10_DE_overP:
    case LemmaId::L11_DE_overP2: {
      const double d = D - E;
      double a = 0.0, b = 0.0;
      std::string form;
      if (id == LemmaId::L9_DE) {
        a = d * (1.0 + B * B);
        b = 2.0 * B * d;
        form = "beta(A-B) >= (D-E)(1+B^2) + |2B(D-E) - E beta(A-B)|";
      } else if (id == LemmaId::L10_DE_overP) {
        a = d * (1.0 + std::abs(A * B));
        b = (A + B) * d;
        form = "beta(A-B) >= (D-E)(1+|AB|) + |(A+B)(D-E) - E beta(A-B)|";
      } else {
        a = d * (1.0 + A * A);
        b = 2.0 * A * d;
        form = "|beta|(A-B) >= (D-E)(1+A^2) + |2A(D-E) - E beta(A-B)|";
      }
      const auto x = solve_abs_linear(a, b, E);
      if (!x) return infeasible(form + " has no solution with beta > 0");
      return feasible(*x / (A - B), form, true);
    }
  }
  return infeasible("unknown lemma");
}

}  // namespace subord
