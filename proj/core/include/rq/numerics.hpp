#pragma once

#include "rq/characters.hpp"
#include "rq/real.hpp"
#include "rq/series.hpp"

#include <vector>

namespace rq {

// Working precision. Values are computed with `guard` extra decimal digits and
// infinite products and series are cut once a term drops below
// 10^-(digits + guard).
struct PrecisionContext {
  long digits = 50;
  long guard = 15;

  static PrecisionContext with_digits(long d) { return {d, 15}; }

  mpfr_prec_t bits() const;
  Real tail_tolerance() const;
  Real zero() const { return Real(bits()); }
  Real from(long v) const { return Real(v, bits()); }
  Real from(const Rational& v) const { return Real(v, bits()); }
  Real pi() const;
};

// A value with a heuristic error bound from its truncation tail.
struct Evaluated {
  Real value;
  Real error;
};

struct EllipticData {
  Rational r;
  Real k;
  Real kp;  // sqrt(1 - k^2)
  Real K;   // K(k)
  Real Kp;  // K(k')
  Real q;   // exp(-pi sqrt(r))
  int iterations = 0;
};

// K(k) = pi / (2 agm(1, k')). Throws std::domain_error unless 0 <= k < 1.
// `iterations`, when given, receives the number of AGM steps.
Real elliptic_K(const Real& k, const PrecisionContext& ctx, int* iterations = nullptr);

// Solves K(k')/K(k) = sqrt(r). Throws std::domain_error for r <= 0 and
// std::runtime_error when 200 steps do not converge.
EllipticData singular_modulus(const Rational& r, const PrecisionContext& ctx);

// exp(-pi sqrt(r))
Real nome(const Rational& r, const PrecisionContext& ctx);

// A product of factors (1 - q^(start + n*step))^power, n >= 0.
struct Progression {
  Rational start;
  Rational step;
  long power = 1;
};

// [a,p;q] as two progressions; R*(a,b,p) as four.
std::vector<Progression> agile_progressions(const Rational& a, const Rational& p);
std::vector<Progression> rq_star_progressions(const RQSpec& spec);
// f(-q^m) = (q^m; q^m)_inf
std::vector<Progression> euler_progressions(const Rational& m);

// Throws std::domain_error unless 0 < q < 1.
Evaluated eval_product(const std::vector<Progression>& factors, const Real& q, const PrecisionContext& ctx);
// q d/dq log of the product, from the exact termwise derivative
// -power * e q^e / (1 - q^e) of each factor.
Evaluated eval_product_log_derivative(const std::vector<Progression>& factors, const Real& q,
                                      const PrecisionContext& ctx);

Evaluated eval_agile(const Rational& a_exp, const Rational& p_exp, const Real& q, const PrecisionContext& ctx);
// q^Q R*(a,b,p;q)
Evaluated eval_rq(const RQSpec& spec, const Real& q, const PrecisionContext& ctx);
// d/dq R(a,b,p;q) = R (Q + q d/dq log R*) / q
Evaluated eval_rq_derivative(const RQSpec& spec, const Real& q, const PrecisionContext& ctx);

// Sum of the truncated series at q, plus the size of the first unknown term
// estimated from the last known coefficients as the error.
Evaluated eval_series(const FormalSeries& s, const Real& q, const PrecisionContext& ctx);
// Series order needed so that q^order lies below the tail tolerance.
Rational series_order_for(const Real& q, const PrecisionContext& ctx);

// theta_4(iy, q) = 1 + 2 sum (-1)^n q^(n^2) cosh(2ny). Throws
// std::domain_error when the terms do not decay (|y| too large for q).
Evaluated eval_theta4(const Real& y, const Real& q, const PrecisionContext& ctx);
// prod (1 - q^(2n)) (1 - q^(2n-1) e^(2y)) (1 - q^(2n-1) e^(-2y))
Evaluated eval_theta4_product(const Real& y, const Real& q, const PrecisionContext& ctx);
// R(a,b,p;e^-x) = e^(-Qx) theta_4(i(p-2a)x/4, e^(-px/2)) / theta_4(i(p-2b)x/4, e^(-px/2))
Evaluated eval_rq_theta(const RQSpec& spec, const Real& q, const PrecisionContext& ctx);

enum class CfKind { general_P, rr, rgg, cubic, theorem6 };

struct CfParams {
  Real a;  // general_P
  Real b;  // general_P
  long A = 1;  // theorem6
  long B = 2;  // theorem6
};

struct CfValue {
  Real value;
  Real error;  // change when the depth was last doubled
  long depth = 0;
};

// Backward recurrence, doubling the depth until two values agree to the tail
// tolerance. Throws std::runtime_error on a zero denominator or when depth
// 2^16 does not converge.
CfValue eval_cf(CfKind kind, const CfParams& params, const Real& q, const PrecisionContext& ctx);

// The quantity evaluated on the principal branch z^Q = exp(Q log z) for
// complex z with |z| < 1.
Complex eval_rq_complex(const RQSpec& spec, const Complex& z, const PrecisionContext& ctx);

struct Theorem7Report {
  RQSpec spec;
  Real q;
  Real lhs;           // R(q^p)
  Complex rhs;        // product over the p-th roots of unity
  Real abs_mismatch;  // |lhs - rhs|
};

// R(a,b,p;q^p) against prod_{m<p} R(a,b,p; e^(2 pi i m/p) q). Throws
// std::invalid_argument unless the spec is integer with p prime and a,b < p.
Theorem7Report check_theorem7(const RQSpec& spec, const Real& q, const PrecisionContext& ctx);

}  // namespace rq
