#pragma once

#include "rq/series.hpp"

#include <mpfr.h>

#include <string>

namespace rq {

// MPFR value that owns its precision. Binary operations round to the larger
// of the two operand precisions; nothing reads a global default.
class Real {
 public:
  explicit Real(mpfr_prec_t bits = 128);
  Real(long value, mpfr_prec_t bits);
  Real(const Rational& value, mpfr_prec_t bits);
  // Decimal text such as "0.15" or "1e-30". Throws std::invalid_argument.
  Real(const std::string& text, mpfr_prec_t bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;
  // Nearest integer.
  Integer round() const;
  // floor(log10 |x|); a large negative number for zero.
  long log10_abs() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
inline Real operator-(long a, const Real& b) { return -(b - a); }
inline Real operator+(long a, const Real& b) { return b + a; }
inline Real operator*(long a, const Real& b) { return b * a; }
inline Real operator/(long a, const Real& b) { return Real(a, b.bits()) / b; }

int compare(const Real& a, const Real& b);
inline bool operator<(const Real& a, const Real& b) { return compare(a, b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return compare(a, b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return compare(a, b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return compare(a, b) >= 0; }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, const Rational& y);
Real pow(const Real& x, long n);
Real agm(const Real& a, const Real& b);
Real pi(mpfr_prec_t bits);
Real max(const Real& a, const Real& b);
// 10^e at the given precision.
Real power_of_ten(long e, mpfr_prec_t bits);

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(Real r) : re(std::move(r)), im(0L, re.bits()) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Real abs(const Complex& z);
Real arg(const Complex& z);  // principal value in (-pi, pi]
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
// z^y = exp(y log z) on the principal branch.
Complex pow(const Complex& z, const Rational& y);
Complex pow(const Complex& z, long n);
// e^(i theta)
Complex polar(const Real& modulus, const Real& theta);

}  // namespace rq
