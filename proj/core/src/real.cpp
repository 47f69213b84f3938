#include "rq/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rq {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

template <typename F>
Real unary(const Real& x, F f) {
  Real r(x.bits());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& text, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  if (mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + text);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return buf.data();
}

Integer Real::round() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
  return z;
}

long Real::log10_abs() const {
  if (is_zero()) return -1000000;
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return static_cast<long>(std::floor(std::log10(std::fabs(m)) + static_cast<double>(e) * std::log10(2.0)));
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real operator+(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.bits());
  mpfr_mul_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator/(const Real& a, long b) {
  Real r(a.bits());
  mpfr_div_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, long b) {
  Real r(a.bits());
  mpfr_add_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

Real operator-(const Real& a, long b) {
  Real r(a.bits());
  mpfr_sub_si(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}

int compare(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real atan2(const Real& y, const Real& x) {
  Real r(wider(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Rational& y) {
  if (y.get_den() == 1 && y.get_num().fits_slong_p()) return pow(x, y.get_num().get_si());
  return pow(x, Real(y, x.bits()));
}

Real pow(const Real& x, long n) {
  Real r(x.bits());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real agm(const Real& a, const Real& b) {
  Real r(wider(a, b));
  mpfr_agm(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

Real pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real power_of_ten(long e, mpfr_prec_t bits) { return pow(Real(10L, bits), e); }

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator/(const Complex& a, const Complex& b) {
  Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Real abs(const Complex& z) {
  Real r(wider(z.re, z.im));
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) { return polar(exp(z.re), z.im); }

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex pow(const Complex& z, const Rational& y) {
  Complex l = log(z);
  Real ry(y, z.re.bits());
  return exp(Complex(l.re * ry, l.im * ry));
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(Real(1L, z.re.bits())) / pow(z, -n);
  Complex result(Real(1L, z.re.bits()));
  Complex base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Complex polar(const Real& modulus, const Real& theta) { return {modulus * cos(theta), modulus * sin(theta)}; }

}  // namespace rq
