#pragma once

// Truncated Taylor series of functions analytic on the unit disk.
//
// A PowerSeries of order N holds c_0..c_N. Binary operations truncate to the
// smaller order of their operands. Division, powers and the transcendental
// functions use O(N^2) coefficient recursions.

#include <cstddef>
#include <span>
#include <vector>

#include "subord/config.hpp"

namespace subord {

class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order = kDefaultOrder);
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries constant(Complex c, std::size_t order = kDefaultOrder);
  static PowerSeries identity(std::size_t order = kDefaultOrder);
  /// Polynomial sum_j coeffs[j] z^j, zero padded or truncated to `order`.
  static PowerSeries polynomial(std::span<const Complex> coeffs,
                                std::size_t order = kDefaultOrder);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  Complex operator[](std::size_t n) const { return coeffs_[n]; }
  Complex& operator[](std::size_t n) { return coeffs_[n]; }

  /// Same coefficients at a different order (drops or zero-pads).
  PowerSeries with_order(std::size_t order) const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(Complex s);

 private:
  std::vector<Complex> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator+(const PowerSeries& a, Complex c);
PowerSeries operator-(const PowerSeries& a, Complex c);
PowerSeries operator*(Complex s, const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator/(const PowerSeries& a, const PowerSeries& b);

enum class SeriesOp { Mul, Div };

/// Cauchy product or quotient. Throws DivisionByZeroConstantTerm when the
/// divisor's constant term is below the pivot tolerance.
PowerSeries series_arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op,
                         const Tolerances& tol = kTolerances);

/// p^k for real k, requires p.c0 == 1.
PowerSeries power(const PowerSeries& p, double k, const Tolerances& tol = kTolerances);

PowerSeries sqrt(const PowerSeries& p, const Tolerances& tol = kTolerances);
PowerSeries log(const PowerSeries& p, const Tolerances& tol = kTolerances);
PowerSeries exp(const PowerSeries& p, const Tolerances& tol = kTolerances);

/// z p'(z): c_n -> n c_n.
PowerSeries zderiv(const PowerSeries& p);
/// Antiderivative vanishing at 0, truncated to p's order.
PowerSeries integrate0(const PowerSeries& p);

/// p(w(z)), requires w.c0 == 0.
PowerSeries compose(const PowerSeries& p, const PowerSeries& w,
                    const Tolerances& tol = kTolerances);

/// Horner evaluation of the truncated polynomial.
Complex eval(const PowerSeries& p, Complex z);

double max_abs_diff(const PowerSeries& a, const PowerSeries& b);
double max_abs_coeff(const PowerSeries& p);

/// Tail estimate max(|c_{N-3}|..|c_N|) r^N / (1 - r). The window guards
/// against series whose last coefficient vanishes by parity.
double tail_bound(const PowerSeries& p, double r);

/// Coefficients of p^k produced online: push c_n of p, receive [p^k]_n.
/// Only c_0..c_n are needed for [p^k]_n (J. C. P. Miller recurrence).
class IncrementalPower {
 public:
  IncrementalPower(double exponent, std::size_t capacity);

  Complex push(Complex c);
  std::size_t size() const noexcept { return out_.size(); }
  Complex operator[](std::size_t n) const { return out_[n]; }

 private:
  double k_;
  std::vector<Complex> in_;
  std::vector<Complex> out_;
};

}  // namespace subord
