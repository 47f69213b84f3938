#include "rq/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace rq {

mpfr_prec_t PrecisionContext::bits() const {
  return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits + guard) * 3.3219280948873623)) + 32;
}

Real PrecisionContext::tail_tolerance() const { return power_of_ten(-(digits + guard), bits()); }

Real PrecisionContext::pi() const { return rq::pi(bits()); }

namespace {

void require_unit_interval(const Real& q) {
  if (q.sign() <= 0 || q >= Real(1L, q.bits())) throw std::domain_error("q must lie in (0, 1)");
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// g(k) = K(k')/K(k) - sqrt(r)
Real modulus_gap(const Real& k, const Real& sqrt_r, const PrecisionContext& ctx) {
  Real kp = sqrt(1L - k * k);
  return elliptic_K(kp, ctx) / elliptic_K(k, ctx) - sqrt_r;
}

EllipticData solve_modulus(const Rational& r, const PrecisionContext& ctx) {
  // r >= 1 here, so k <= 1/sqrt(2); k ~ 4 exp(-pi sqrt(r)/2) for large r.
  // Bisect on log k, which stays well scaled for tiny k.
  const Real sqrt_r = sqrt(ctx.from(r));
  const Real pi = ctx.pi();
  Real lo = -(pi * sqrt_r / 2) - 3L;  // g > 0 here
  Real hi = log(sqrt(ctx.from(Rational(1, 2)))) + Real("1e-6", ctx.bits());  // g < 0 here
  const Real width = Real("1e-10", ctx.bits());
  int iterations = 0;
  while (hi - lo > width) {
    if (++iterations > 200) throw std::runtime_error("singular_modulus: bisection did not converge");
    Real mid = (lo + hi) / 2L;
    if (modulus_gap(exp(mid), sqrt_r, ctx).sign() > 0)
      lo = mid;
    else
      hi = mid;
  }
  Real k = exp((lo + hi) / 2L);
  // Newton with dg/dk = -pi / (2 k k'^2 K^2).
  const Real tol = power_of_ten(-(ctx.digits + ctx.guard / 2), ctx.bits());
  for (;;) {
    if (++iterations > 200) throw std::runtime_error("singular_modulus: Newton did not converge");
    Real kp2 = 1L - k * k;
    Real K = elliptic_K(k, ctx);
    Real g = elliptic_K(sqrt(kp2), ctx) / K - sqrt_r;
    Real dg = -pi / (2L * k * kp2 * K * K);
    Real step = g / dg;
    k -= step;
    if (abs(step) <= tol * k) break;
  }
  EllipticData d{r, k, sqrt(1L - k * k), ctx.zero(), ctx.zero(), nome(r, ctx), iterations};
  d.K = elliptic_K(d.k, ctx);
  d.Kp = elliptic_K(d.kp, ctx);
  return d;
}

// Backward evaluation of b0 + a1/(b1 + a2/(b2 + ...)) truncated at depth n.
template <typename A, typename B>
Real cf_tail(long depth, const A& num, const B& den) {
  Real t = den(depth);
  for (long n = depth; n >= 1; --n) {
    if (t.is_zero()) throw std::runtime_error("eval_cf: zero denominator");
    t = den(n - 1) + num(n) / t;
  }
  return t;
}

template <typename A, typename B>
CfValue cf_converge(const Real& prefactor, const A& num, const B& den, const PrecisionContext& ctx) {
  const Real tol = ctx.tail_tolerance();
  long depth = 16;
  Real prev = prefactor / cf_tail(depth, num, den);
  for (; depth <= (1L << 16); depth *= 2) {
    Real next = prefactor / cf_tail(2 * depth, num, den);
    Real change = abs(next - prev);
    if (change <= tol * max(abs(next), ctx.from(1L))) return {next, change, 2 * depth};
    prev = next;
  }
  throw std::runtime_error("eval_cf: no convergence at depth 65536");
}

// P(a,b,q) = 1/((1-ab) + (a-bq)(b-aq)/((1-ab)(q^2+1) + (a-bq^3)(b-aq^3)/...))
CfValue general_p(const Real& a, const Real& b, const Real& q, const PrecisionContext& ctx) {
  const Real c = 1L - a * b;
  auto num = [&](long n) {
    Real t = pow(q, 2 * n - 1);
    return (a - b * t) * (b - a * t);
  };
  auto den = [&](long n) { return n == 0 ? c : c * (pow(q, 2 * n) + 1L); };
  return cf_converge(ctx.from(1L), num, den, ctx);
}

}  // namespace

Real elliptic_K(const Real& k, const PrecisionContext& ctx, int* iterations) {
  if (k.sign() < 0 || k >= ctx.from(1L)) throw std::domain_error("elliptic_K: k must lie in [0, 1)");
  Real a = ctx.from(1L);
  Real b = sqrt(1L - k * k);
  const Real eps = pow(Real(2L, ctx.bits()), -static_cast<long>(ctx.bits()) + 4);
  int steps = 0;
  while (abs(a - b) > eps * a) {
    Real next = (a + b) / 2L;
    b = sqrt(a * b);
    a = next;
    ++steps;
  }
  if (iterations) *iterations = steps;
  return ctx.pi() / (2L * a);
}

EllipticData singular_modulus(const Rational& r, const PrecisionContext& ctx) {
  if (r <= 0) throw std::domain_error("singular_modulus: r must be positive");
  if (r >= 1) return solve_modulus(r, ctx);
  // k_{1/r} = k'_r
  EllipticData d = solve_modulus(1 / r, ctx);
  return {r, d.kp, d.k, d.Kp, d.K, nome(r, ctx), d.iterations};
}

Real nome(const Rational& r, const PrecisionContext& ctx) { return exp(-(ctx.pi() * sqrt(ctx.from(r)))); }

std::vector<Progression> agile_progressions(const Rational& a, const Rational& p) {
  return {{a, p, 1}, {p - a, p, 1}};
}

std::vector<Progression> rq_star_progressions(const RQSpec& spec) {
  return {{spec.a, spec.p, 1}, {spec.p - spec.a, spec.p, 1}, {spec.b, spec.p, -1}, {spec.p - spec.b, spec.p, -1}};
}

std::vector<Progression> euler_progressions(const Rational& m) { return {{m, m, 1}}; }

Evaluated eval_product(const std::vector<Progression>& factors, const Real& q, const PrecisionContext& ctx) {
  require_unit_interval(q);
  const Real tol = ctx.tail_tolerance();
  Real value = ctx.from(1L);
  Real error = ctx.zero();
  for (const auto& f : factors) {
    if (f.start <= 0 || f.step <= 0) throw std::domain_error("eval_product: exponents must be positive");
    Real t = pow(q, f.start);
    const Real ratio = pow(q, f.step);
    // Remaining factors change log(value) by at most 2|power| t / (1 - ratio)
    // once t < 1/2.
    const Real tail_scale = ctx.from(2L * std::labs(f.power)) / (1L - ratio);
    for (;;) {
      Real factor = 1L - t;
      value *= pow(factor, f.power);
      t *= ratio;
      Real bound = tail_scale * t;
      if (t < ctx.from(Rational(1, 2)) && bound < tol) {
        error += bound;
        break;
      }
    }
  }
  return {value, error * abs(value)};
}

Evaluated eval_product_log_derivative(const std::vector<Progression>& factors, const Real& q,
                                      const PrecisionContext& ctx) {
  require_unit_interval(q);
  const Real tol = ctx.tail_tolerance();
  Real sum = ctx.zero();
  Real error = ctx.zero();
  for (const auto& f : factors) {
    if (f.start <= 0 || f.step <= 0) throw std::domain_error("eval_product: exponents must be positive");
    Real t = pow(q, f.start);
    const Real ratio = pow(q, f.step);
    Real e = ctx.from(f.start);
    const Real step = ctx.from(f.step);
    for (;;) {
      Real term = e * t / (1L - t) * f.power;
      sum -= term;
      Real e_next = e + step;
      Real rho = ratio * e_next / e / (1L - ratio);
      e = e_next;
      t *= ratio;
      if (rho < ctx.from(Rational(1, 2))) {
        Real bound = abs(term) * rho * 2L;
        if (bound < tol) {
          error += bound;
          break;
        }
      }
    }
  }
  return {sum, error};
}

Evaluated eval_agile(const Rational& a_exp, const Rational& p_exp, const Real& q, const PrecisionContext& ctx) {
  return eval_product(agile_progressions(a_exp, p_exp), q, ctx);
}

Evaluated eval_rq(const RQSpec& spec, const Real& q, const PrecisionContext& ctx) {
  Evaluated star = eval_product(rq_star_progressions(spec), q, ctx);
  Real prefactor = pow(q, spec.Q());
  return {star.value * prefactor, star.error * prefactor};
}

Evaluated eval_rq_derivative(const RQSpec& spec, const Real& q, const PrecisionContext& ctx) {
  Evaluated r = eval_rq(spec, q, ctx);
  Evaluated m = eval_product_log_derivative(rq_star_progressions(spec), q, ctx);
  Real m_total = m.value + ctx.from(spec.Q());
  Real value = r.value * m_total / q;
  Real error = (abs(r.error * m_total) + abs(r.value * m.error)) / q;
  return {value, error};
}

Evaluated eval_series(const FormalSeries& s, const Real& q, const PrecisionContext& ctx) {
  require_unit_interval(q);
  Real sum = ctx.zero();
  Real largest_recent = ctx.zero();
  const auto terms = s.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Real term = ctx.from(terms[i].coeff) * pow(q, terms[i].exponent);
    sum += term;
    if (i + 8 >= terms.size()) largest_recent = max(largest_recent, abs(ctx.from(terms[i].coeff)));
  }
  Real error = largest_recent * pow(q, s.order() + Rational(1, s.denom()));
  return {sum, error};
}

Rational series_order_for(const Real& q, const PrecisionContext& ctx) {
  require_unit_interval(q);
  double per_unit = -std::log10(q.to_double());
  return Rational(static_cast<long>(std::ceil(static_cast<double>(ctx.digits + ctx.guard) / per_unit)) + 10);
}

Evaluated eval_theta4(const Real& y, const Real& q, const PrecisionContext& ctx) {
  require_unit_interval(q);
  const Real tol = ctx.tail_tolerance();
  const double log_q = std::log(q.to_double());
  const double ay = std::fabs(y.to_double());
  // Terms grow while 2|y| > (2n+1)|log q|, then decay for good.
  const long peak = static_cast<long>(std::ceil(ay / -log_q)) + 1;
  if (peak > 1000000) throw std::domain_error("eval_theta4: |y| too large for q");
  Real sum = ctx.from(1L);
  Real error = ctx.zero();
  for (long n = 1;; ++n) {
    Real term = pow(q, n * n) * cosh(2L * n * y) * 2L;
    if (n % 2) sum -= term; else sum += term;
    if (n > peak && term < tol * max(abs(sum), ctx.from(1L))) {
      error = term;
      break;
    }
  }
  return {sum, error};
}

Evaluated eval_theta4_product(const Real& y, const Real& q, const PrecisionContext& ctx) {
  require_unit_interval(q);
  const Real tol = ctx.tail_tolerance();
  const Real up = exp(2L * y);
  const Real down = exp(-(2L * y));
  const Real grow = max(up, down);
  Real value = ctx.from(1L);
  for (long n = 1;; ++n) {
    Real odd = pow(q, 2 * n - 1);
    value *= (1L - odd * q) * (1L - odd * up) * (1L - odd * down);
    Real bound = odd * q * q * grow * 4L / (1L - q);
    if (odd * grow < ctx.from(Rational(1, 2)) && bound < tol) return {value, bound * abs(value)};
  }
}

Evaluated eval_rq_theta(const RQSpec& spec, const Real& q, const PrecisionContext& ctx) {
  require_unit_interval(q);
  const Real x = -log(q);
  const Real p = ctx.from(spec.p);
  const Real nome_theta = exp(-(p * x / 2L));
  Evaluated top = eval_theta4((p - ctx.from(2 * spec.a)) * x / 4L, nome_theta, ctx);
  Evaluated bottom = eval_theta4((p - ctx.from(2 * spec.b)) * x / 4L, nome_theta, ctx);
  Real prefactor = exp(-(ctx.from(spec.Q()) * x));
  Real value = prefactor * top.value / bottom.value;
  Real error = abs(value) * (top.error / abs(top.value) + bottom.error / abs(bottom.value));
  return {value, error};
}

CfValue eval_cf(CfKind kind, const CfParams& params, const Real& q, const PrecisionContext& ctx) {
  require_unit_interval(q);
  const Real one = ctx.from(1L);
  switch (kind) {
    case CfKind::general_P:
      return general_p(params.a, params.b, q, ctx);
    case CfKind::rr: {
      auto num = [&](long n) { return pow(q, n); };
      auto den = [&](long) { return one; };
      return cf_converge(pow(q, Rational(1, 5)), num, den, ctx);
    }
    case CfKind::rgg: {
      auto num = [&](long n) { return pow(q, 2 * n); };
      auto den = [&](long n) { return 1L + pow(q, 2 * n + 1); };
      return cf_converge(pow(q, Rational(1, 2)), num, den, ctx);
    }
    case CfKind::cubic: {
      auto num = [&](long n) { return pow(q, n) + pow(q, 2 * n); };
      auto den = [&](long) { return one; };
      return cf_converge(pow(q, Rational(1, 3)), num, den, ctx);
    }
    case CfKind::theorem6: {
      if (params.A <= 0 || params.B <= params.A) throw std::invalid_argument("eval_cf: theorem6 needs 0 < A < B");
      CfValue p = general_p(pow(q, params.A), pow(q, params.B), pow(q, params.A + params.B), ctx);
      Real scale = 1L - pow(q, params.B - params.A);
      return {p.value * scale, p.error * abs(scale), p.depth};
    }
  }
  throw std::invalid_argument("eval_cf: unknown kind");
}

Complex eval_rq_complex(const RQSpec& spec, const Complex& z, const PrecisionContext& ctx) {
  if (!spec.is_integer()) throw std::invalid_argument("eval_rq_complex: integer spec required");
  const Real tol = ctx.tail_tolerance();
  if (abs(z) >= ctx.from(1L)) throw std::domain_error("eval_rq_complex: |z| must be below 1");
  Complex value(ctx.from(1L));
  for (const auto& f : rq_star_progressions(spec)) {
    const long start = f.start.get_num().get_si();
    const long step = f.step.get_num().get_si();
    Complex t = pow(z, start);
    const Complex ratio = pow(z, step);
    for (;;) {
      Complex factor = Complex(ctx.from(1L)) - t;
      value = f.power > 0 ? value * factor : value / factor;
      t = t * ratio;
      if (abs(t) < tol) break;
    }
  }
  return pow(z, spec.Q()) * value;
}

Theorem7Report check_theorem7(const RQSpec& spec, const Real& q, const PrecisionContext& ctx) {
  if (!spec.is_integer() || !is_prime(spec.ip()) || spec.ia() >= spec.ip() || spec.ib() >= spec.ip())
    throw std::invalid_argument("check_theorem7: needs integer a, b < p with p prime");
  const long p = spec.ip();
  Real lhs = eval_rq(spec, pow(q, p), ctx).value;
  Complex rhs(ctx.from(1L));
  const Real turn = ctx.pi() * 2L / p;
  for (long m = 0; m < p; ++m) rhs = rhs * eval_rq_complex(spec, polar(q, turn * m), ctx);
  Real mismatch = abs(Complex(lhs) - rhs);
  return {spec, q, lhs, rhs, mismatch};
}

}  // namespace rq
