#pragma once

// Target functions q, membership in q(D) and the inverse maps used by the
// superordination criteria.
//
//   SqrtLemniscate   q(z) = sqrt(1 + z), principal branch (cut z <= -1);
//                    q(D) is the right lobe of |w^2 - 1| < 1.
//   Janowski(A, B)   q(z) = (1 + A z) / (1 + B z), -1 <= B < A <= 1.

#include <string>
#include <vector>

#include "subord/config.hpp"

namespace subord {

/// Point of the closed unit disk that remembers its polar form, so that
/// 1 + a z stays accurate for |a| = 1 when z is close to -1/a on the circle.
class DiskPoint {
 public:
  explicit DiskPoint(Complex z) : z_(z) {}
  static DiskPoint polar(double r, double t);

  Complex z() const noexcept { return z_; }
  /// 1 + a z without cancellation at the boundary.
  Complex one_plus(double a) const;

 private:
  Complex z_;
  double r_ = -1.0;
  double t_ = 0.0;
};

struct TargetRegion {
  enum class Kind { SqrtLemniscate, Janowski };

  Kind kind = Kind::SqrtLemniscate;
  double A = 0.0;
  double B = 0.0;

  static TargetRegion sqrt_lemniscate();
  /// Throws InvalidParameters unless -1 <= B < A <= 1.
  static TargetRegion janowski(double A, double B);

  std::string describe() const;
  bool operator==(const TargetRegion&) const = default;
};

enum class Classification { Inside, Boundary, Outside };

struct Membership {
  double margin = 0.0;  // > 0 inside q(D), 0 on the boundary, < 0 outside
  Classification classification = Classification::Outside;
};

/// q(z). SingularPoint when 1 + B z vanishes.
Complex target_eval(const TargetRegion& region, Complex z);
Complex target_eval(const TargetRegion& region, const DiskPoint& z);

/// Sqrt: 1 - |w^2 - 1| on Re w >= 0. Points with Re w < 0 lie in the left
/// lobe or beyond, outside q(D); they get min(1 - |w^2 - 1|, 0) + Re w,
/// which is negative and continuous across the imaginary axis.
/// Janowski: 1 - |(w - 1)/(A - B w)|, with -infinity at the pole w = A/B.
Membership membership(const TargetRegion& region, Complex w,
                      const Tolerances& tol = kTolerances);

/// w^2 - 1 or (w - 1)/(A - B w). InverseMapPole at A - B w = 0.
Complex phi_inverse(const TargetRegion& region, Complex w);

/// Boundary curve q(e^{it}) sampled at `samples` angles in [-pi, pi];
/// points at a pole of q are dropped.
std::vector<Complex> region_boundary(const TargetRegion& region, std::size_t samples);

std::string_view to_string(Classification c);

}  // namespace subord
