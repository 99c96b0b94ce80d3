#include "subord/series.hpp"

#include <algorithm>
#include <cmath>

#include "subord/errors.hpp"

namespace subord {

namespace {

std::size_t common_order(const PowerSeries& a, const PowerSeries& b) {
  return std::min(a.order(), b.order());
}

void require_unit_constant(const PowerSeries& p, const Tolerances& tol, const char* what) {
  if (std::abs(p[0] - Complex(1.0)) > tol.coefficient) {
    throw Error(ErrorKind::ConstantTermNotOne,
                std::string(what) + " requires constant term 1");
  }
}

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {
  if (order == 0) throw Error(ErrorKind::InvalidParameters, "truncation order must be positive");
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) {
    throw Error(ErrorKind::InvalidParameters, "truncation order must be positive");
  }
}

PowerSeries PowerSeries::constant(Complex c, std::size_t order) {
  PowerSeries s(order);
  s[0] = c;
  return s;
}

PowerSeries PowerSeries::identity(std::size_t order) {
  PowerSeries s(order);
  s[1] = 1.0;
  return s;
}

PowerSeries PowerSeries::polynomial(std::span<const Complex> coeffs, std::size_t order) {
  PowerSeries s(order);
  const std::size_t n = std::min(coeffs.size(), order + 1);
  std::copy_n(coeffs.begin(), n, s.coeffs_.begin());
  return s;
}

PowerSeries PowerSeries::with_order(std::size_t order) const {
  return polynomial(coeffs_, order);
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r = a;
  r += b;
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r = a;
  r -= b;
  return r;
}

PowerSeries operator-(const PowerSeries& a) {
  PowerSeries r = a;
  r *= -1.0;
  return r;
}

PowerSeries operator+(const PowerSeries& a, Complex c) {
  PowerSeries r = a;
  r[0] += c;
  return r;
}

PowerSeries operator-(const PowerSeries& a, Complex c) {
  PowerSeries r = a;
  r[0] -= c;
  return r;
}

PowerSeries operator*(Complex s, const PowerSeries& a) {
  PowerSeries r = a;
  r *= s;
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  return series_arith(a, b, SeriesOp::Mul);
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  return series_arith(a, b, SeriesOp::Div);
}

PowerSeries series_arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op,
                         const Tolerances& tol) {
  const std::size_t order = common_order(a, b);
  PowerSeries r(order);
  if (op == SeriesOp::Mul) {
    for (std::size_t n = 0; n <= order; ++n) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j <= n; ++j) acc += a[j] * b[n - j];
      r[n] = acc;
    }
    return r;
  }
  if (std::abs(b[0]) < tol.division_pivot) {
    throw Error(ErrorKind::DivisionByZeroConstantTerm, "divisor has vanishing constant term");
  }
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = a[n];
    for (std::size_t j = 1; j <= n; ++j) acc -= b[j] * r[n - j];
    r[n] = acc / b[0];
  }
  return r;
}

IncrementalPower::IncrementalPower(double exponent, std::size_t capacity) : k_(exponent) {
  in_.reserve(capacity);
  out_.reserve(capacity);
}

Complex IncrementalPower::push(Complex c) {
  in_.push_back(c);
  const std::size_t m = in_.size() - 1;
  if (m == 0) {
    out_.push_back(std::pow(c, k_));
    return out_.back();
  }
  // m c0 P_m = sum_{j=1}^m ((k + 1) j - m) c_j P_{m-j}
  Complex acc = 0.0;
  for (std::size_t j = 1; j <= m; ++j) {
    acc += ((k_ + 1.0) * static_cast<double>(j) - static_cast<double>(m)) * in_[j] *
           out_[m - j];
  }
  out_.push_back(acc / (static_cast<double>(m) * in_[0]));
  return out_.back();
}

PowerSeries power(const PowerSeries& p, double k, const Tolerances& tol) {
  require_unit_constant(p, tol, "series power");
  IncrementalPower acc(k, p.order() + 1);
  PowerSeries r(p.order());
  for (std::size_t n = 0; n <= p.order(); ++n) r[n] = acc.push(p[n]);
  r[0] = 1.0;
  return r;
}

PowerSeries sqrt(const PowerSeries& p, const Tolerances& tol) {
  require_unit_constant(p, tol, "series sqrt");
  PowerSeries s(p.order());
  s[0] = 1.0;
  for (std::size_t n = 1; n <= p.order(); ++n) {
    Complex acc = p[n];
    for (std::size_t j = 1; j < n; ++j) acc -= s[j] * s[n - j];
    s[n] = acc / 2.0;
  }
  return s;
}

PowerSeries log(const PowerSeries& p, const Tolerances& tol) {
  require_unit_constant(p, tol, "series log");
  PowerSeries l(p.order());
  // p L' = p'  =>  n L_n = n p_n - sum_{j=1}^{n-1} j L_j p_{n-j}
  for (std::size_t n = 1; n <= p.order(); ++n) {
    Complex acc = static_cast<double>(n) * p[n];
    for (std::size_t j = 1; j < n; ++j) acc -= static_cast<double>(j) * l[j] * p[n - j];
    l[n] = acc / static_cast<double>(n);
  }
  return l;
}

PowerSeries exp(const PowerSeries& p, const Tolerances& tol) {
  if (std::abs(p[0]) > tol.coefficient) {
    throw Error(ErrorKind::ConstantTermNotZero, "series exp requires constant term 0");
  }
  PowerSeries e(p.order());
  e[0] = 1.0;
  for (std::size_t n = 1; n <= p.order(); ++n) {
    Complex acc = 0.0;
    for (std::size_t j = 1; j <= n; ++j) acc += static_cast<double>(j) * p[j] * e[n - j];
    e[n] = acc / static_cast<double>(n);
  }
  return e;
}

PowerSeries zderiv(const PowerSeries& p) {
  PowerSeries r(p.order());
  for (std::size_t n = 1; n <= p.order(); ++n) r[n] = static_cast<double>(n) * p[n];
  return r;
}

PowerSeries integrate0(const PowerSeries& p) {
  PowerSeries r(p.order());
  for (std::size_t n = 0; n < p.order(); ++n) r[n + 1] = p[n] / static_cast<double>(n + 1);
  return r;
}

PowerSeries compose(const PowerSeries& p, const PowerSeries& w, const Tolerances& tol) {
  if (std::abs(w[0]) > tol.coefficient) {
    throw Error(ErrorKind::InnerConstantTermNotZero, "inner series must vanish at 0");
  }
  const std::size_t order = common_order(p, w);
  // Horner in series form: acc <- acc * w + p_m, using w_0 = 0.
  PowerSeries acc = PowerSeries::constant(p[order], order);
  PowerSeries inner = w.with_order(order);
  for (std::size_t m = order; m-- > 0;) {
    PowerSeries next(order);
    for (std::size_t n = 1; n <= order; ++n) {
      Complex s = 0.0;
      for (std::size_t j = 1; j <= n; ++j) s += inner[j] * acc[n - j];
      next[n] = s;
    }
    next[0] = p[m];
    acc = std::move(next);
  }
  return acc;
}

Complex eval(const PowerSeries& p, Complex z) {
  const auto c = p.coeffs();
  Complex acc = 0.0;
  for (std::size_t n = c.size(); n-- > 0;) acc = acc * z + c[n];
  return acc;
}

double max_abs_diff(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = common_order(a, b);
  double m = 0.0;
  for (std::size_t n = 0; n <= order; ++n) m = std::max(m, std::abs(a[n] - b[n]));
  return m;
}

double max_abs_coeff(const PowerSeries& p) {
  double m = 0.0;
  for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double tail_bound(const PowerSeries& p, double r) {
  const std::size_t order = p.order();
  const std::size_t first = order >= 3 ? order - 3 : 0;
  double last = 0.0;
  for (std::size_t n = first; n <= order; ++n) last = std::max(last, std::abs(p[n]));
  if (r <= 0.0 || r >= 1.0) {
    throw Error(ErrorKind::InvalidParameters, "tail bound needs 0 < r < 1");
  }
  return last * std::pow(r, static_cast<double>(order)) / (1.0 - r);
}

}  // namespace subord
