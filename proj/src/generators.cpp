#include "subord/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "subord/errors.hpp"
#include "subord/optimize.hpp"

namespace subord {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Complex eval_polynomial_part(const ScaledPolynomial& sp, Complex z) {
  Complex acc = 0.0;
  for (std::size_t j = sp.coeffs.size(); j-- > 0;) acc = acc * z + sp.coeffs[j];
  return sp.scale * acc * z;
}

}  // namespace

PowerSeries SchwarzFunction::series(std::size_t order) const {
  return std::visit(
      Overloaded{
          [&](const Monomial& m) {
            PowerSeries s(order);
            if (m.m <= order) s[m.m] = 1.0;
            return s;
          },
          [&](const BlaschkeFactor& b) {
            PowerSeries num(order);
            num[1] = b.a;
            if (order >= 2) num[2] = 1.0;
            PowerSeries den = PowerSeries::constant(1.0, order);
            den[1] = std::conj(b.a);
            return num / den;
          },
          [&](const ScaledPolynomial& sp) {
            PowerSeries s(order);
            for (std::size_t j = 0; j < sp.coeffs.size() && j + 1 <= order; ++j) {
              s[j + 1] = sp.scale * sp.coeffs[j];
            }
            return s;
          },
      },
      family_);
}

Complex SchwarzFunction::operator()(Complex z) const {
  return std::visit(
      Overloaded{
          [&](const Monomial& m) { return std::pow(z, static_cast<int>(m.m)); },
          [&](const BlaschkeFactor& b) { return z * (z + b.a) / (1.0 + std::conj(b.a) * z); },
          [&](const ScaledPolynomial& sp) { return eval_polynomial_part(sp, z); },
      },
      family_);
}

std::string SchwarzFunction::describe() const {
  std::ostringstream os;
  os.precision(9);
  std::visit(Overloaded{
                 [&](const Monomial& m) { os << "Monomial(" << m.m << ")"; },
                 [&](const BlaschkeFactor& b) {
                   os << "BlaschkeFactor(" << b.a.real() << (b.a.imag() < 0 ? "" : "+")
                      << b.a.imag() << "i)";
                 },
                 [&](const ScaledPolynomial& sp) {
                   os << "ScaledPolynomial(degree " << sp.coeffs.size() << ", scale " << sp.scale
                      << ")";
                 },
             },
             family_);
  return os.str();
}

SchwarzFunction make_schwarz(Monomial spec) {
  if (spec.m < 1) throw Error(ErrorKind::InvalidParameters, "monomial degree must be >= 1");
  return SchwarzFunction(spec);
}

SchwarzFunction make_schwarz(BlaschkeFactor spec) {
  if (!(std::abs(spec.a) < 1.0)) {
    throw Error(ErrorKind::InvalidParameters, "Blaschke factor needs |a| < 1");
  }
  return SchwarzFunction(spec);
}

SchwarzFunction make_schwarz(std::vector<Complex> raw_coeffs) {
  if (raw_coeffs.empty()) throw Error(ErrorKind::NotAContraction, "empty polynomial");
  for (const auto& c : raw_coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::NotAContraction, "non-finite coefficient");
    }
  }
  SchwarzFunction raw(ScaledPolynomial{std::move(raw_coeffs), 1.0});
  const double sup = boundary_sup(raw);
  if (!(sup > 0.0) || !std::isfinite(sup)) {
    throw Error(ErrorKind::NotAContraction, "polynomial has no usable boundary maximum");
  }
  auto sp = std::get<ScaledPolynomial>(raw.family());
  sp.scale = 1.0 / (sup * 1.0000001);
  SchwarzFunction w(std::move(sp));
  if (boundary_sup(w) > 1.0 + 1e-12) {
    throw Error(ErrorKind::NotAContraction, "normalized polynomial exceeds 1 on the circle");
  }
  return w;
}

double boundary_sup(const SchwarzFunction& w, std::size_t samples) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  std::vector<double> mod(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    mod[j] = std::abs(w(std::polar(1.0, static_cast<double>(j) * step)));
  }
  std::vector<std::size_t> idx(samples);
  for (std::size_t j = 0; j < samples; ++j) idx[j] = j;
  const std::size_t top = std::min<std::size_t>(8, samples);
  std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(top), idx.end(),
                    [&](std::size_t a, std::size_t b) { return mod[a] > mod[b]; });
  double best = mod[idx[0]];
  for (std::size_t i = 0; i < top; ++i) {
    const double t0 = static_cast<double>(idx[i]) * step;
    const auto m = golden_section_minimize(
        [&](double t) { return -std::abs(w(std::polar(1.0, t))); }, t0 - step, t0 + step,
        1e-12);
    best = std::max(best, -m.value);
  }
  return best;
}

SchwarzFunction random_schwarz(std::mt19937_64& rng, std::size_t degree) {
  std::uniform_int_distribution<int> family(0, 2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  switch (family(rng)) {
    case 0: {
      std::uniform_int_distribution<unsigned> m(1, 4);
      return make_schwarz(Monomial{m(rng)});
    }
    case 1: {
      const double r = 0.9 * std::sqrt(unit(rng));
      const double theta = 2.0 * std::numbers::pi * unit(rng);
      return make_schwarz(BlaschkeFactor{std::polar(r, theta)});
    }
    default: {
      std::vector<Complex> coeffs(std::max<std::size_t>(degree, 1));
      for (auto& c : coeffs) {
        const double re = sym(rng);
        c = Complex(re, sym(rng));
      }
      return make_schwarz(std::move(coeffs));
    }
  }
}

PowerSeries premise_target_series(LemmaId id, const LemmaParams& params, const PowerSeries& w) {
  const TargetRegion region = premise_region(id, params);
  if (region.kind == TargetRegion::Kind::SqrtLemniscate) return sqrt(w + 1.0);
  const std::size_t order = w.order();
  const PowerSeries one = PowerSeries::constant(1.0, order);
  return (one + region.A * w) / (one + region.B * w);
}

PowerSeries premise_lhs(LemmaId id, const LemmaParams& params, const PowerSeries& p) {
  const double k = premise_exponent(id, params);
  PowerSeries v = zderiv(p);
  if (k != 0.0) v = v / power(p, k);
  v *= params.beta;
  if (lemma_info(id).form == PremiseForm::OnePlus) return v + 1.0;
  return v + p;
}

PremiseSolution solve_premise_ode(LemmaId id, const LemmaParams& params,
                                  const SchwarzFunction& w, std::size_t order) {
  const PowerSeries phi = premise_target_series(id, params, w.series(order));
  if (std::abs(phi[0] - Complex(1.0)) > kTolerances.coefficient) {
    throw Error(ErrorKind::ConstantTermMismatch, "Phi(w(0)) must equal 1");
  }
  const double beta = params.beta;
  const bool one_plus = lemma_info(id).form == PremiseForm::OnePlus;
  if (one_plus && beta == 0.0) throw Error(ErrorKind::RecursionBreakdown, "beta = 0");

  // z p' = v p^k,  v = (Phi(w) - nu(p)) / beta
  PowerSeries p(order);
  p[0] = 1.0;
  std::vector<Complex> v(order + 1, 0.0);
  IncrementalPower pk(premise_exponent(id, params), order + 1);
  pk.push(1.0);
  for (std::size_t n = 1; n <= order; ++n) {
    const double nn = static_cast<double>(n);
    if (one_plus) {
      v[n] = phi[n] / beta;
      Complex s = 0.0;
      for (std::size_t j = 1; j <= n; ++j) s += v[j] * pk[n - j];
      p[n] = s / nn;
    } else {
      const double pivot = nn * beta + 1.0;
      if (std::abs(pivot) < 1e-14) throw Error(ErrorKind::RecursionBreakdown, "n beta + 1 = 0");
      Complex s = 0.0;
      for (std::size_t j = 1; j < n; ++j) s += v[j] * pk[n - j];
      p[n] = (phi[n] + beta * s) / pivot;
      v[n] = (phi[n] - p[n]) / beta;
    }
    pk.push(p[n]);
  }

  PremiseSolution out{p, 0.0};
  out.residual = max_abs_diff(premise_lhs(id, params, p), phi);
  if (!std::isfinite(out.residual)) {
    throw Error(ErrorKind::RecursionBreakdown, "premise recursion overflowed");
  }
  return out;
}

AdaptiveSolution solve_premise_adaptive(LemmaId id, const LemmaParams& params,
                                        const SchwarzFunction& w, double radius,
                                        std::size_t initial_order, std::size_t max_order,
                                        const Tolerances& tol) {
  std::size_t order = std::min(initial_order, max_order);
  for (;;) {
    AdaptiveSolution a{solve_premise_ode(id, params, w, order), 0.0, false};
    a.tail_bound = tail_bound(a.solution.p, radius);
    a.tail_certified = a.tail_bound < tol.tail_bound;
    const bool residual_ok = a.solution.residual <= tol.premise_residual;
    if (residual_ok && a.tail_certified) return a;
    if (order >= max_order) {
      if (!residual_ok) {
        std::ostringstream os;
        os << "premise residual " << a.solution.residual << " at order " << order;
        throw Error(ErrorKind::TruncationInsufficient, os.str());
      }
      return a;
    }
    order = std::min(order * 2, max_order);
  }
}

}  // namespace subord
