#include "subord/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "subord/errors.hpp"
#include "subord/optimize.hpp"

namespace subord {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kRefineCount = 8;
constexpr double kFdSkip = 1e-3;

double angular_distance(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * kPi)); }

double wrap_angle(double t) {
  if (t < -kPi) return t + 2.0 * kPi;
  if (t > kPi) return t - 2.0 * kPi;
  return t;
}

bool punctured(const std::vector<double>& punctures, double t, double radius) {
  return std::any_of(punctures.begin(), punctures.end(),
                     [&](double s) { return angular_distance(t, s) < radius; });
}

// Shrinks [lo, hi] around `center` so that no puncture disk intrudes.
void clip_bracket(const std::vector<double>& punctures, double radius, double center, double& lo,
                  double& hi) {
  for (double s : punctures) {
    for (double image : {s - 2.0 * kPi, s, s + 2.0 * kPi}) {
      if (image + radius < lo || image - radius > hi) continue;
      if (center < image) {
        hi = std::min(hi, image - radius);
      } else {
        lo = std::max(lo, image + radius);
      }
    }
  }
}

struct Sample {
  double t;
  double value;
};

// Index of the minimum, ties (relative 1e-13) broken by smallest |t|, then
// by the nonnegative angle.
std::size_t tie_broken_argmin(const std::vector<Sample>& s) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& x : s) m = std::min(m, x.value);
  const double band = 1e-13 * std::max(1.0, std::abs(m));
  std::size_t best = s.size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].value > m + band) continue;
    if (best == s.size()) {
      best = i;
      continue;
    }
    const double a = std::abs(s[i].t);
    const double b = std::abs(s[best].t);
    if (a < b || (a == b && s[i].t > s[best].t)) best = i;
  }
  return best;
}

// Uniform grid on [-pi, pi) minus punctures, then golden-section refinement
// around the smallest samples. Returns samples sorted by angle.
template <class F>
std::vector<Sample> scan_and_refine(F&& f, std::size_t n, const std::vector<double>& punctures,
                                    double puncture_radius, double resolution) {
  const double step = 2.0 * kPi / static_cast<double>(n);
  std::vector<Sample> samples;
  samples.reserve(n + kRefineCount);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = -kPi + static_cast<double>(j) * step;
    if (punctured(punctures, t, puncture_radius)) continue;
    const auto v = f(t);
    if (v) samples.push_back({t, *v});
  }
  if (samples.empty()) throw Error(ErrorKind::SingularPoint, "no admissible boundary samples");

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t top = std::min(kRefineCount, samples.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(top), order.end(),
                    [&](std::size_t a, std::size_t b) { return samples[a].value < samples[b].value; });
  const auto objective = [&](double t) {
    const auto v = f(t);
    return v ? *v : std::numeric_limits<double>::max();
  };
  std::vector<Sample> refined;
  for (std::size_t i = 0; i < top; ++i) {
    const double center = samples[order[i]].t;
    double lo = center - step;
    double hi = center + step;
    clip_bracket(punctures, puncture_radius, center, lo, hi);
    if (!(hi > lo)) continue;
    const auto m = golden_section_minimize(objective, lo, hi, resolution);
    if (m.value < samples[order[i]].value) refined.push_back({wrap_angle(m.x), m.value});
  }
  samples.insert(samples.end(), refined.begin(), refined.end());
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.t < b.t; });
  samples.erase(std::unique(samples.begin(), samples.end(),
                            [](const Sample& a, const Sample& b) { return a.t == b.t; }),
                samples.end());
  return samples;
}

// Winding number of f around 0 along |z| = r, with adaptive subdivision so
// that no step turns by more than half a radian.
template <class F>
int winding_number(F&& f, double r) {
  constexpr std::size_t kSegments = 1024;
  double total = 0.0;
  const auto at = [&](double t) { return f(std::polar(r, t)); };
  const auto accumulate = [&](auto&& self, double t0, double t1, Complex f0, Complex f1,
                              int depth) -> void {
    const double d = std::arg(f1 / f0);
    if (std::abs(d) > 0.5 && depth < 48) {
      const double tm = 0.5 * (t0 + t1);
      const Complex fm = at(tm);
      self(self, t0, tm, f0, fm, depth + 1);
      self(self, tm, t1, fm, f1, depth + 1);
      return;
    }
    total += d;
  };
  const double step = 2.0 * kPi / static_cast<double>(kSegments);
  Complex prev = at(-kPi);
  const Complex first = prev;
  for (std::size_t j = 1; j <= kSegments; ++j) {
    const double t1 = -kPi + static_cast<double>(j) * step;
    const Complex cur = j == kSegments ? first : at(t1);
    accumulate(accumulate, t1 - step, t1, prev, cur, 0);
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * kPi)));
}

void require_valid(LemmaId id, const LemmaParams& params, const Tolerances& tol) {
  const auto issues = validate_params(id, params, true, tol);
  if (issues.empty()) return;
  std::string msg;
  for (const auto& s : issues) msg += (msg.empty() ? "" : "; ") + s;
  throw Error(ErrorKind::InvalidParameters, msg);
}

LemmaParams with_beta(LemmaParams p, double beta) {
  p.beta = beta;
  return p;
}

bool margin_holds(double m, const Tolerances& tol) { return m >= 1.0 - tol.verdict; }

}  // namespace

double criterion_margin(LemmaId id, const LemmaParams& params, double t) {
  const Complex h = premise_h_eval(id, params, DiskPoint::polar(1.0, t));
  return std::abs(phi_inverse(premise_region(id, params), h));
}

MarginProfile boundary_margin_profile(LemmaId id, const LemmaParams& params,
                                      std::size_t grid_size, const Tolerances& tol) {
  if (!lemma_info(id).has_margin_criterion) {
    throw Error(ErrorKind::NotApplicable,
                std::string(short_name(id)) + " is proved without a boundary criterion");
  }
  if (grid_size < 64) throw Error(ErrorKind::InvalidParameters, "margin grid must be >= 64");
  require_valid(id, params, tol);

  MarginProfile prof;
  prof.punctures = singular_angles(id, params);
  const TargetRegion premise = premise_region(id, params);
  const auto f = [&](double t) -> std::optional<double> {
    try {
      return criterion_margin(id, params, t);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const auto samples =
      scan_and_refine(f, grid_size, prof.punctures, tol.puncture, tol.refine_resolution);
  prof.refined = true;
  prof.t_samples.reserve(samples.size());
  prof.margins.reserve(samples.size());
  prof.principal_min_margin = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    prof.t_samples.push_back(s.t);
    prof.margins.push_back(s.value);
    const Complex h = premise_h_eval(id, params, DiskPoint::polar(1.0, s.t));
    if (h.real() > 0.0) prof.principal_min_margin = std::min(prof.principal_min_margin, s.value);
  }
  const std::size_t k = tie_broken_argmin(samples);
  prof.min_margin = *std::min_element(prof.margins.begin(), prof.margins.end());
  prof.argmin_t = samples[k].t;
  if (!std::isfinite(prof.principal_min_margin)) prof.principal_min_margin = prof.min_margin;

  if (premise.kind == TargetRegion::Kind::Janowski && premise.B != 0.0) {
    prof.denominator_zeros = winding_number(
        [&](Complex z) { return premise.A - premise.B * premise_h_eval(id, params, z); },
        1.0 - 1e-6);
  }
  return prof;
}

std::string_view to_string(AdmissibilityQuantity q) {
  switch (q) {
    case AdmissibilityQuantity::ReZQprimeOverQ: return "ReZQprimeOverQ";
    case AdmissibilityQuantity::ReZHprimeOverQ: return "ReZHprimeOverQ";
    case AdmissibilityQuantity::RePhiOfQ: return "RePhiOfQ";
  }
  return "?";
}

AdmissibilityMin admissibility_min(LemmaId id, const LemmaParams& params,
                                   AdmissibilityQuantity quantity, double radius,
                                   std::size_t grid_size, const Tolerances& tol) {
  if (!(radius > 0.0 && radius <= 1.0)) {
    throw Error(ErrorKind::InvalidParameters, "admissibility radius must lie in (0, 1]");
  }
  if (grid_size < 64) throw Error(ErrorKind::InvalidParameters, "admissibility grid must be >= 64");
  require_valid(id, params, tol);
  const auto singular = singular_angles(id, params);
  const std::vector<double> punctures = radius == 1.0 ? singular : std::vector<double>{};

  const auto closed = [&](const DiskPoint& z) -> Complex {
    switch (quantity) {
      case AdmissibilityQuantity::ReZQprimeOverQ: return z_Qprime_over_Q(id, params, z);
      case AdmissibilityQuantity::ReZHprimeOverQ: return z_hprime_over_Q(id, params, z);
      case AdmissibilityQuantity::RePhiOfQ: return phi_of_q(id, params, z);
    }
    return 0.0;
  };
  if (quantity == AdmissibilityQuantity::RePhiOfQ) (void)phi_of_q(id, params, DiskPoint(0.0));

  const auto f = [&](double t) -> std::optional<double> {
    try {
      return closed(DiskPoint::polar(radius, t)).real();
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const auto samples =
      scan_and_refine(f, grid_size, punctures, tol.puncture, tol.refine_resolution);
  const std::size_t k = tie_broken_argmin(samples);

  AdmissibilityMin out;
  out.quantity = quantity;
  out.radius = radius;
  out.argmin_t = samples[k].t;
  out.value = samples[k].value;
  for (const auto& s : samples) out.value = std::min(out.value, s.value);

  // Independent evaluation: central differences in t (z d/dz = -i d/dt) or
  // the defining formula beta / q^n.
  const double delta = tol.fd_step;
  const TargetRegion conclusion = conclusion_region(id, params);
  const auto independent = [&](double t) -> Complex {
    const DiskPoint z = DiskPoint::polar(radius, t);
    const DiskPoint zp = DiskPoint::polar(radius, t + delta);
    const DiskPoint zm = DiskPoint::polar(radius, t - delta);
    const Complex I(0.0, 1.0);
    switch (quantity) {
      case AdmissibilityQuantity::ReZQprimeOverQ:
        return -I * (dominant_Q_eval(id, params, zp) - dominant_Q_eval(id, params, zm)) /
               (2.0 * delta * dominant_Q_eval(id, params, z));
      case AdmissibilityQuantity::ReZHprimeOverQ:
        return -I * (premise_h_eval(id, params, zp) - premise_h_eval(id, params, zm)) /
               (2.0 * delta * dominant_Q_eval(id, params, z));
      case AdmissibilityQuantity::RePhiOfQ:
        return params.beta / std::pow(target_eval(conclusion, z), premise_exponent(id, params));
    }
    return 0.0;
  };
  const std::size_t stride = std::max<std::size_t>(1, samples.size() / 256);
  std::vector<double> checks;
  for (std::size_t i = 0; i < samples.size(); i += stride) checks.push_back(samples[i].t);
  checks.push_back(out.argmin_t);
  for (double t : checks) {
    if (punctured(singular, t, kFdSkip)) continue;
    const Complex cf = closed(DiskPoint::polar(radius, t));
    const Complex fd = independent(t);
    out.fd_max_error = std::max(out.fd_max_error, std::abs(cf - fd) / std::max(1.0, std::abs(cf)));
  }
  if (out.fd_max_error > tol.fd_agreement) {
    std::ostringstream os;
    os << to_string(quantity) << " closed form disagrees with finite differences by "
       << out.fd_max_error;
    throw Error(ErrorKind::Internal, os.str());
  }
  return out;
}

std::vector<AdmissibilityQuantity> required_admissibility(LemmaId id) {
  switch (lemma_info(id).route) {
    case Route::ConvexTarget:
      return {AdmissibilityQuantity::ReZQprimeOverQ, AdmissibilityQuantity::RePhiOfQ};
    case Route::GeneralDominant:
      if (lemma_info(id).form == PremiseForm::PPlus) {
        return {AdmissibilityQuantity::ReZQprimeOverQ, AdmissibilityQuantity::ReZHprimeOverQ};
      }
      return {AdmissibilityQuantity::ReZQprimeOverQ};
    case Route::StarlikeDominant: return {AdmissibilityQuantity::ReZQprimeOverQ};
  }
  return {};
}

double admissibility_radius(LemmaId id) {
  return lemma_info(id).route == Route::ConvexTarget ? 1.0 : 0.999;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::HypothesisFails: return "HypothesisFails";
    case Verdict::CriterionFails: return "CriterionFails";
  }
  return "?";
}

VerificationReport check_superordination(LemmaId id, const LemmaParams& params,
                                         std::size_t grid_size, std::size_t adm_grid,
                                         const Tolerances& tol) {
  require_valid(id, params, tol);
  VerificationReport rep;
  rep.lemma = id;
  rep.params = params;
  rep.feasible = feasibility_check(id, params);
  rep.threshold = closed_form_threshold(id, params);

  bool criterion_ok = true;
  if (lemma_info(id).has_margin_criterion) {
    rep.margin = boundary_margin_profile(id, params, grid_size, tol);
    criterion_ok = margin_holds(rep.margin->min_margin, tol);
    std::ostringstream os;
    os.precision(9);
    if (rep.margin->denominator_zeros != 0) {
      os << "denominator of Phi^{-1}(h) has " << rep.margin->denominator_zeros
         << " zero(s) in the disk";
      rep.diagnostics.push_back(os.str());
      os.str("");
    }
    if (!criterion_ok && margin_holds(rep.margin->principal_min_margin, tol)) {
      os << "criterion fails only where Re h < 0 (left lemniscate lobe); principal minimum "
         << rep.margin->principal_min_margin;
      rep.diagnostics.push_back(os.str());
    }
  }
  const double radius = admissibility_radius(id);
  for (auto q : required_admissibility(id)) {
    rep.admissibility.push_back(admissibility_min(id, params, q, radius, adm_grid, tol));
    if (!(rep.admissibility.back().value > 0.0)) criterion_ok = false;
  }

  if (!criterion_ok) {
    rep.verdict = Verdict::CriterionFails;
  } else if (!rep.feasible) {
    rep.verdict = Verdict::HypothesisFails;
  } else {
    rep.verdict = Verdict::Verified;
  }
  return rep;
}

NumericThreshold numeric_threshold(LemmaId id, const LemmaParams& params, std::size_t grid_size,
                                   const Tolerances& tol) {
  if (!lemma_info(id).has_margin_criterion) {
    throw Error(ErrorKind::NotApplicable,
                std::string(short_name(id)) + " has no boundary criterion to threshold");
  }
  const ThresholdResult closed = closed_form_threshold(id, params);
  if (closed.status != ThresholdResult::Status::Feasible) {
    throw Error(ErrorKind::InfeasibleParameters,
                "no closed-form threshold to bracket: " + closed.binding_constraint);
  }
  if (grid_size < 64) throw Error(ErrorKind::InvalidParameters, "margin grid must be >= 64");
  // Only the minimum is needed here, so the profile bookkeeping and the
  // winding diagnostic are skipped.
  const auto punctures = singular_angles(id, params);
  const auto min_margin = [&](double beta) {
    const LemmaParams p = with_beta(params, beta);
    require_valid(id, p, tol);
    const auto f = [&](double t) -> std::optional<double> {
      try {
        return criterion_margin(id, p, t);
      } catch (const Error&) {
        return std::nullopt;
      }
    };
    const auto samples = scan_and_refine(f, grid_size, punctures, tol.puncture,
                                         tol.refine_resolution);
    double m = samples.front().value;
    for (const auto& s : samples) m = std::min(m, s.value);
    return m;
  };

  NumericThreshold out;
  out.bracket_lo = 1e-6;
  out.bracket_hi = 10.0 * closed.beta_star;
  constexpr std::size_t kScan = 64;
  for (std::size_t i = 0; i < kScan; ++i) {
    const double b = out.bracket_lo + (out.bracket_hi - out.bracket_lo) *
                                          static_cast<double>(i) / static_cast<double>(kScan - 1);
    out.scan_beta.push_back(b);
    out.scan_margin.push_back(min_margin(b));
  }
  if (!margin_holds(out.scan_margin.back(), tol)) {
    throw Error(ErrorKind::ThresholdNotBracketed, "criterion still fails at 10 beta*");
  }
  std::size_t last_fail = kScan;
  for (std::size_t i = 0; i < kScan; ++i) {
    if (!margin_holds(out.scan_margin[i], tol)) last_fail = i;
  }
  if (last_fail == kScan) {
    throw Error(ErrorKind::ThresholdNotBracketed, "criterion already holds at beta = 1e-6");
  }
  // Minima that sit at a puncture are limits approached to within about
  // tol.puncture, and drift by that much as beta moves.
  for (std::size_t i = last_fail; i + 1 < kScan; ++i) {
    const double m = out.scan_margin[i];
    if (out.scan_margin[i + 1] < m - tol.puncture * std::max(1.0, std::abs(m))) {
      std::ostringstream os;
      os << "min_margin decreases between beta = " << out.scan_beta[i] << " and "
         << out.scan_beta[i + 1];
      throw Error(ErrorKind::NonMonotoneMargin, os.str());
    }
  }
  const double lo = out.scan_beta[last_fail];
  const double hi = out.scan_beta[last_fail + 1];
  out.beta = bisect_threshold([&](double b) { return margin_holds(min_margin(b), tol); }, lo, hi,
                              tol.verdict * std::max(1.0, hi));
  return out;
}

namespace {

SubordinationResult sample_region(const std::function<Complex(Complex)>& f,
                                  const TargetRegion& region, std::span<const double> radii,
                                  std::size_t angles, const Tolerances& tol) {
  if (radii.empty()) throw Error(ErrorKind::InvalidParameters, "no radii");
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::InvalidParameters, "radii must lie in (0,1)");
  }
  if (angles < 8) throw Error(ErrorKind::InvalidParameters, "too few angles");
  SubordinationResult res;
  res.radii.assign(radii.begin(), radii.end());
  res.min_margin = std::numeric_limits<double>::max();
  const double step = 2.0 * kPi / static_cast<double>(angles);
  for (double r : radii) {
    for (std::size_t j = 0; j < angles; ++j) {
      const double t = -kPi + static_cast<double>(j) * step;
      double m = membership(region, f(std::polar(r, t)), tol).margin;
      if (!std::isfinite(m)) m = std::numeric_limits<double>::lowest();
      if (m < res.min_margin) {
        res.min_margin = m;
        res.argmin_radius = r;
        res.argmin_t = t;
      }
    }
  }
  return res;
}

}  // namespace

SubordinationResult subordination_check(const PowerSeries& p, const TargetRegion& region,
                                        std::span<const double> radii, std::size_t angles,
                                        const Tolerances& tol) {
  if (std::abs(p[0] - Complex(1.0)) > tol.coefficient) {
    throw Error(ErrorKind::ConstantTermMismatch, "p(0) must equal q(0) = 1");
  }
  auto res = sample_region([&](Complex z) { return eval(p, z); }, region, radii, angles, tol);
  for (double r : radii) {
    res.tail_bounds.push_back(tail_bound(p, r));
    if (!(res.tail_bounds.back() < tol.tail_bound)) res.tail_certified = false;
  }
  return res;
}

SubordinationResult subordination_check(const std::function<Complex(Complex)>& f,
                                        const TargetRegion& region, std::span<const double> radii,
                                        std::size_t angles, const Tolerances& tol) {
  if (std::abs(f(0.0) - Complex(1.0)) > tol.evaluation) {
    throw Error(ErrorKind::ConstantTermMismatch, "f(0) must equal q(0) = 1");
  }
  return sample_region(f, region, radii, angles, tol);
}

TrialReport implication_trial(LemmaId id, const LemmaParams& params, const SchwarzFunction& w,
                              std::size_t order, std::span<const double> radii,
                              const Tolerances& tol) {
  require_valid(id, params, tol);
  TrialReport rep;
  rep.schwarz = w.describe();
  rep.feasible = feasibility_check(id, params);
  const double rmax = radii.empty() ? 0.999 : *std::max_element(radii.begin(), radii.end());
  const auto sol =
      solve_premise_adaptive(id, params, w, rmax, order, std::max(order, kMaxOrder), tol);
  rep.order = sol.solution.p.order();
  rep.premise_residual = sol.solution.residual;
  rep.conclusion = subordination_check(sol.solution.p, conclusion_region(id, params), radii,
                                       kDefaultSubordinationAngles, tol);
  rep.passed = rep.premise_residual <= tol.premise_residual &&
               rep.conclusion.min_margin >= -tol.verdict;
  return rep;
}

double l1_lower_bound(const LemmaParams& params, double t) {
  const double c = std::pow(2.0 * std::cos(t / 2.0), (params.k + 1.0) / 2.0);
  return std::abs(params.beta) /
         (2.0 * (params.A - params.B) * c + std::abs(params.B * params.beta));
}

}  // namespace subord
