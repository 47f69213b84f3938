#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rq {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "3", "-7/4" or "2/6" (reduced on return). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& x);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

struct Term {
  Rational exponent;
  Rational coeff;
};

// Truncated series sum_k c_k q^((lead + k)/denom), exact up to and including
// exponent order(). Coefficients past order() are unknown, never zero.
//
// The stored form is canonical: denom is the smallest lattice that holds every
// nonzero exponent, c_0 != 0 unless the series is zero, and coeffs() covers
// every lattice point up to order().
class FormalSeries {
 public:
  // Zero series known up to exponent 0.
  FormalSeries();

  static FormalSeries zero(const Rational& order);
  static FormalSeries constant(const Rational& c, const Rational& order);
  // Zero series when the exponent lies past the order.
  static FormalSeries monomial(const Rational& coeff, const Rational& exponent,
                               const Rational& order);
  // Throws on duplicate exponents or when order sits below every exponent.
  static FormalSeries from_terms(const std::vector<Term>& terms, const Rational& order);
  // Raw lattice form; normalised on construction.
  static FormalSeries from_lattice(std::int64_t denom, std::int64_t lead,
                                   std::vector<Rational> coeffs, const Rational& order);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t denom() const { return denom_; }
  std::int64_t lead() const { return lead_; }
  Rational lead_exponent() const;
  const Rational& lead_coeff() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& order() const { return order_; }

  // Coefficient of q^exponent. Throws std::out_of_range past order().
  Rational coeff(const Rational& exponent) const;
  // Nonzero terms in increasing exponent.
  std::vector<Term> terms() const;
  bool all_integer() const;

  // Same value on the finer lattice D*k; the canonical form is kept for the
  // public result, so this only returns coefficient vectors.
  std::vector<Rational> lattice_coeffs(std::int64_t denom, std::int64_t from, std::int64_t to) const;

  FormalSeries truncated(const Rational& order) const;
  FormalSeries shifted(const Rational& exponent) const;  // times q^exponent
  FormalSeries scaled(const Rational& c) const;
  FormalSeries negated_q() const;  // q -> -q; integer exponents only

  // True when both agree on every exponent up to min(order(), other.order()).
  bool agrees_with(const FormalSeries& other) const;

  // q^(e0/D) * (c0 + c1*q^(1/D) + ...) + O(q^(E/D))
  std::string to_string() const;

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

  FormalSeries operator-() const { return scaled(Rational(-1)); }

 private:
  void normalize();

  std::int64_t denom_ = 1;
  std::int64_t lead_ = 0;
  std::vector<Rational> coeffs_;
  Rational order_;
};

enum class ArithOp { add, sub, mul, div };

FormalSeries arith(ArithOp op, const FormalSeries& a, const FormalSeries& b);
FormalSeries pow_int(const FormalSeries& a, long exponent);

inline FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) { return arith(ArithOp::add, a, b); }
inline FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return arith(ArithOp::sub, a, b); }
inline FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) { return arith(ArithOp::mul, a, b); }
inline FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) { return arith(ArithOp::div, a, b); }

// q -> q^m for rational m > 0.
FormalSeries substitute_power(const FormalSeries& a, const Rational& m);

// (q^a; q^p)_inf up to exponent `order`; a > 0, p > 0.
FormalSeries pochhammer_inf(const Rational& a_exp, const Rational& p_exp, const Rational& order);

// q d/dq, termwise.
FormalSeries q_derivative(const FormalSeries& a);

// Formal log / exp of a series with constant term 1 (resp. 0). Used as
// cross-checks for logarithmic-derivative results.
FormalSeries log_unit(const FormalSeries& a);
FormalSeries exp_nilpotent(const FormalSeries& a);

std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace rq
