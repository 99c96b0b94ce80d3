#include "subord/regions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "subord/errors.hpp"

namespace subord {

DiskPoint DiskPoint::polar(double r, double t) {
  DiskPoint p(std::polar(r, t));
  p.r_ = r;
  p.t_ = t;
  return p;
}

Complex DiskPoint::one_plus(double a) const {
  if (r_ == 1.0) {
    const Complex half = std::polar(1.0, t_ / 2.0);
    if (a == 1.0) return 2.0 * std::cos(t_ / 2.0) * half;
    if (a == -1.0) return Complex(0.0, -2.0 * std::sin(t_ / 2.0)) * half;
  }
  return 1.0 + a * z_;
}

TargetRegion TargetRegion::sqrt_lemniscate() { return {}; }

TargetRegion TargetRegion::janowski(double A, double B) {
  if (!(B >= -1.0 && B < A && A <= 1.0)) {
    std::ostringstream os;
    os << "Janowski region needs -1 <= B < A <= 1, got A=" << A << " B=" << B;
    throw Error(ErrorKind::InvalidParameters, os.str());
  }
  return {Kind::Janowski, A, B};
}

std::string TargetRegion::describe() const {
  if (kind == Kind::SqrtLemniscate) return "SqrtLemniscate";
  std::ostringstream os;
  os.precision(9);
  os << "Janowski(" << A << ", " << B << ")";
  return os.str();
}

Complex target_eval(const TargetRegion& region, const DiskPoint& z) {
  if (region.kind == TargetRegion::Kind::SqrtLemniscate) return std::sqrt(z.one_plus(1.0));
  const Complex den = z.one_plus(region.B);
  if (den == 0.0) throw Error(ErrorKind::SingularPoint, "Janowski map has a pole at z = -1/B");
  return z.one_plus(region.A) / den;
}

Complex target_eval(const TargetRegion& region, Complex z) {
  return target_eval(region, DiskPoint(z));
}

namespace {

Classification classify(double margin, const Tolerances& tol) {
  if (std::abs(margin) <= tol.boundary_band) return Classification::Boundary;
  return margin > 0.0 ? Classification::Inside : Classification::Outside;
}

}  // namespace

Membership membership(const TargetRegion& region, Complex w, const Tolerances& tol) {
  double margin = 0.0;
  if (region.kind == TargetRegion::Kind::SqrtLemniscate) {
    const double lemniscate = 1.0 - std::abs(w * w - 1.0);
    margin = w.real() >= 0.0 ? lemniscate : std::min(lemniscate, 0.0) + w.real();
  } else {
    const Complex den = region.A - region.B * w;
    if (den == 0.0) {
      return {-std::numeric_limits<double>::infinity(), Classification::Outside};
    }
    margin = 1.0 - std::abs((w - 1.0) / den);
  }
  return {margin, classify(margin, tol)};
}

Complex phi_inverse(const TargetRegion& region, Complex w) {
  if (region.kind == TargetRegion::Kind::SqrtLemniscate) return w * w - 1.0;
  const Complex den = region.A - region.B * w;
  if (den == 0.0) throw Error(ErrorKind::InverseMapPole, "A - B w vanishes");
  return (w - 1.0) / den;
}

std::vector<Complex> region_boundary(const TargetRegion& region, std::size_t samples) {
  std::vector<Complex> out;
  out.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const double t = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) /
                                             static_cast<double>(samples - 1);
    try {
      const Complex w = target_eval(region, DiskPoint::polar(1.0, t));
      if (std::isfinite(w.real()) && std::isfinite(w.imag())) out.push_back(w);
    } catch (const Error&) {
    }
  }
  return out;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Inside: return "Inside";
    case Classification::Boundary: return "Boundary";
    case Classification::Outside: return "Outside";
  }
  return "Unknown";
}

}  // namespace subord
