#include "rq/checks.hpp"
#include "rq/modeq.hpp"
#include "rq/quantities.hpp"
#include "rq/recognize.hpp"

#include <stdexcept>

namespace rq {

namespace {

const RQSpec kRR = RQSpec::make(1, 2, 5);
const RQSpec kCubic = RQSpec::make(1, 3, 6);
const RQSpec kGollnitz = RQSpec::make(1, 3, 8);
const RQSpec kOctic = RQSpec::make(1, 2, 4);

// d/dq of the exact series, evaluated at q.
Real series_derivative(const RQSpec& spec, const Real& q, const PrecisionContext& ctx) {
  FormalSeries s = rq_series(spec, series_order_for(q, ctx));
  return eval_series(q_derivative(s), q, ctx).value / q;
}

Real value_of(const RQSpec& spec, const Real& q, const PrecisionContext& ctx) { return eval_rq(spec, q, ctx).value; }

Real sqrt2(const PrecisionContext& ctx) { return sqrt(ctx.from(2L)); }

// Gamma(1/4)^4 = 16 pi K(1/sqrt 2)^2
Real gamma_quarter_4(const PrecisionContext& ctx) {
  Real K = elliptic_K(sqrt(ctx.from(Rational(1, 2))), ctx);
  return ctx.pi() * K * K * 16L;
}

// The n-th real root (1-based, ascending), the convention the closed
// forms use for picking a root of an irreducible polynomial.
Real nth_real_root(const IntegerPolynomial& p, std::size_t n, const PrecisionContext& ctx) {
  std::vector<Real> roots = real_roots(p, ctx);
  if (n == 0 || n > roots.size()) throw std::logic_error("polynomial has fewer real roots than requested");
  return roots[n - 1];
}

// (b): f(-q)^4 = 2^(4/3) pi^-2 q^(-1/6) k^(1/3) k'^(4/3) K^2
Real euler4_elliptic(const EllipticData& e, const PrecisionContext& ctx) {
  Real pi = ctx.pi();
  return pow(ctx.from(2L), Rational(4, 3)) / (pi * pi) * pow(e.q, Rational(-1, 6)) * pow(e.k, Rational(1, 3)) *
         pow(e.kp, Rational(4, 3)) * e.K * e.K;
}

long default_tolerance(const PrecisionContext& ctx) { return ctx.digits - 10; }

std::vector<CheckReport> rgg_checks(const Rational& r, const PrecisionContext& ctx) {
  EllipticData e = singular_modulus(r, ctx);
  Real pi = ctx.pi();
  Real lhs = series_derivative(kGollnitz, e.q, ctx);
  Real s = sqrt(1L - e.kp);
  Real dh_dk = s / (e.kp * (e.k * sqrt2(ctx) + 2L * s));
  Real dq_dk_printed = -(e.q * pi * pi) / (2L * e.k * (1L - e.k * e.k) * e.K * e.K);
  // q = exp(-pi K'/K) gives dq/dk = q pi^2 / (2 k k'^2 K^2).
  Real dq_dk = e.q * pi * pi / (2L * e.k * e.kp * e.kp * e.K * e.K);
  long tol = default_tolerance(ctx);
  return {
      make_report("rgg_derivative", "58", "printed", r, e.q, lhs, dq_dk_printed * dh_dk, tol, true, ctx,
                  "dH/dq as printed: dq/dk times dH/dk"),
      make_report("rgg_derivative", "58", "corrected", r, e.q, lhs, dh_dk / dq_dk, tol, true, ctx,
                  "dH/dq = (dH/dk) / (dq/dk) with dq/dk = q pi^2 / (2 k k'^2 K^2)"),
  };
}

std::vector<CheckReport> cubic_checks(const Rational& r, const PrecisionContext& ctx) {
  EllipticData e = singular_modulus(r, ctx);
  Real pi = ctx.pi();
  Real lhs = series_derivative(kCubic, e.q, ctx);
  Real V = value_of(kCubic, e.q, ctx);
  Real core = 4L * e.K * e.K * e.kp * e.kp * (V + pow(V, 4)) / (3L * e.q * pi * pi * sqrt(1L - 8L * pow(V, 3)));
  long tol = default_tolerance(ctx);
  std::vector<CheckReport> out{
      make_report("cubic_derivative", "61", "printed", r, e.q, lhs, core / sqrt(ctx.from(r)), tol, true, ctx,
                  "with the factor 1/sqrt(r)")};
  if (!out.front().passed)
    out.push_back(make_report("cubic_derivative", "61", "corrected", r, e.q, lhs, core, tol, true, ctx,
                              "without the factor 1/sqrt(r)"));
  return out;
}

std::vector<CheckReport> n_function_checks(const Rational& r, const PrecisionContext& ctx) {
  EllipticData e = singular_modulus(r, ctx);
  long tol = default_tolerance(ctx);
  Real f4_product = pow(eval_product(euler_progressions(1), e.q, ctx).value, 4);
  Real f4 = euler4_elliptic(e, ctx);
  Real R = value_of(kRR, e.q, ctx);
  Real lhs = series_derivative(kRR, e.q, ctx);
  Real N = eval_series(n_series(kRR, series_order_for(e.q, ctx)), e.q, ctx).value;
  Real q56 = pow(e.q, Rational(-5, 6));
  Real base = pow(R, -5) - 11L - pow(R, 5);
  std::vector<CheckReport> out{
      make_report("euler_elliptic_form", "", "printed", r, e.q, f4_product, f4, tol, true, ctx,
                  "f(-q)^4 = 2^(4/3) pi^-2 q^(-1/6) k^(1/3) k'^(4/3) K^2"),
      make_report("n_function_derivative", "78", "printed", r, e.q, lhs, q56 * f4 * R * N, tol, true, ctx,
                  "R' = q^(-5/6) f(-q)^4 R N(q), spec (1,2,5)"),
      make_report("rr_derivative_radical", "", "printed", r, e.q, lhs, q56 * f4 * R * pow(base, Rational(-1, 6)) / 5L,
                  tol, true, ctx, "R' = q^(-5/6) f(-q)^4 R (R^-5 - 11 - R^5)^(-1/6) / 5"),
  };
  if (!out.back().passed)
    out.push_back(make_report("rr_derivative_radical", "", "corrected", r, e.q, lhs,
                              q56 * f4 * R * pow(base, Rational(1, 6)) / 5L, tol, true, ctx,
                              "exponent +1/6, from R' = R f(-q)^5 / (5 q f(-q^5))"));
  return out;
}

std::vector<CheckReport> example_checks(const PrecisionContext& ctx) {
  long tol = default_tolerance(ctx);
  Real pi = ctx.pi();
  Real g4 = gamma_quarter_4(ctx);
  Real pi3 = pi * pi * pi;
  Real q1 = nome(1, ctx);
  Real q4 = nome(4, ctx);
  Real epi = 1L / q1;
  Real s2 = sqrt2(ctx);
  std::vector<CheckReport> out;

  out.push_back(make_report("derivative_example_1_2_4", "62", "printed", Rational(1), q1,
                            series_derivative(kOctic, q1, ctx),
                            epi * g4 / (64L * pow(ctx.from(2L), Rational(5, 8)) * pi3), tol, true, ctx,
                            "e^pi Gamma(1/4)^4 / (64 2^(5/8) pi^3)"));

  IntegerPolynomial p1{16, 0, -240, 800, -2900, -6000, -6500, 17500, 625};
  out.push_back(make_report("derivative_example_1_2_5", "63", "printed", Rational(1), q1,
                            series_derivative(kRR, q1, ctx), epi * g4 / (16L * pi3) * nth_real_root(p1, 3, ctx), tol,
                            true, ctx, "e^pi Gamma(1/4)^4 / (16 pi^3) times the third real root of p1"));

  // 64 e^pi pi / Gamma(-1/4)^4 = e^pi Gamma(1/4)^4 / (16 pi^3)
  Real scale = epi * g4 / (16L * pi3);
  Real lhs64 = series_derivative(kGollnitz, q1, ctx);
  Real inner = 7L * s2 / 2L;
  out.push_back(make_report("derivative_example_1_3_8", "64", "printed", Rational(1), q1, lhs64,
                            (2L + s2 - sqrt(5L - inner)) * scale, tol, true, ctx, "2 + sqrt 2 - sqrt(5 - 7 sqrt(2)/2)"));
  out.push_back(make_report("derivative_example_1_3_8", "64", "corrected", Rational(1), q1, lhs64,
                            (2L + s2 - sqrt(5L + inner)) * scale, tol, true, ctx, "2 + sqrt 2 - sqrt(5 + 7 sqrt(2)/2)"));

  IntegerPolynomial p2{16384, 0, -1720320, -6684672, 143104, -18432, -1664, 0, 1};
  out.push_back(make_report("derivative_example_1_3_8", "65", "printed", Rational(4), q4,
                            series_derivative(kGollnitz, q4, ctx),
                            (6L + 4L * s2) / (q4 * 256L * pi3) * g4 * nth_real_root(p2, 3, ctx), tol, true, ctx,
                            "(6 + 4 sqrt 2) e^(2 pi) Gamma(5/4)^4 / pi^3 times the third real root of p2"));
  return out;
}

}  // namespace

CheckReport make_report(std::string check_id, std::string paper_eq, std::string variant, std::optional<Rational> r,
                        const Real& q, const Real& lhs, const Real& rhs, long tolerance_exponent, bool relative,
                        const PrecisionContext& ctx, std::string note) {
  CheckReport rep;
  rep.check_id = std::move(check_id);
  rep.paper_eq = std::move(paper_eq);
  rep.variant = std::move(variant);
  rep.r = std::move(r);
  rep.q = q.to_string(static_cast<int>(ctx.digits));
  rep.digits = ctx.digits;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_err = abs(lhs - rhs);
  rep.rel_err = lhs.is_zero() ? rep.abs_err : rep.abs_err / abs(lhs);
  rep.tolerance_exponent = tolerance_exponent;
  rep.relative = relative;
  rep.passed = (relative ? rep.rel_err : rep.abs_err) < power_of_ten(-tolerance_exponent, ctx.bits());
  rep.note = std::move(note);
  return rep;
}

nlohmann::json to_json(const CheckReport& rep) {
  const int d = static_cast<int>(rep.digits);
  nlohmann::json j{
      {"check_id", rep.check_id},
      {"paper_eq", rep.paper_eq.empty() ? nlohmann::json(nullptr) : nlohmann::json(rep.paper_eq)},
      {"variant", rep.variant},
      {"r", rep.r ? nlohmann::json(to_string(*rep.r)) : nlohmann::json(nullptr)},
      {"q", rep.q},
      {"digits", rep.digits},
      {"lhs", rep.lhs.to_string(d)},
      {"rhs", rep.rhs.to_string(d)},
      {"abs_err", rep.abs_err.to_string(6)},
      {"rel_err", rep.rel_err.to_string(6)},
      {"tolerance", "1e-" + std::to_string(rep.tolerance_exponent)},
      {"relative", rep.relative},
      {"verdict", rep.passed ? "pass" : "fail"},
  };
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

CheckReport check_k1(const PrecisionContext& ctx) {
  EllipticData e = singular_modulus(1, ctx);
  return make_report("singular_modulus_k1", "", "exact", Rational(1), e.q, e.k, sqrt(ctx.from(Rational(1, 2))),
                     default_tolerance(ctx), false, ctx, "k_1 = 2^(-1/2)");
}

CheckReport check_h_closed_form(const Rational& r, const PrecisionContext& ctx) {
  EllipticData e = singular_modulus(r, ctx);
  Real t = e.k / (1L - e.kp);
  return make_report("gollnitz_closed_form", "59", "printed", r, e.q, value_of(kGollnitz, e.q, ctx),
                     sqrt(t * t + 1L) - t, default_tolerance(ctx), false, ctx, "H = -t + sqrt(t^2 + 1), t = k/(1 - k')");
}

std::vector<CheckReport> check_h_radical(const PrecisionContext& ctx) {
  Real q = nome(1, ctx);
  Real H = value_of(kGollnitz, q, ctx);
  Real s2 = sqrt2(ctx);
  long tol = default_tolerance(ctx);
  return {
      make_report("gollnitz_radical_e_pi", "", "printed", Rational(1), q, H, sqrt(4L - 2L * s2) - 1L - s2, tol, false,
                  ctx, "sqrt(4 - 2 sqrt 2) - 1 - sqrt 2, which is negative"),
      make_report("gollnitz_radical_e_pi", "", "corrected", Rational(1), q, H, sqrt(4L + 2L * s2) - 1L - s2, tol,
                  false, ctx, "sqrt(4 + 2 sqrt 2) - 1 - sqrt 2"),
  };
}

std::vector<CheckReport> check_modulus_relations(const Rational& r, const PrecisionContext& ctx) {
  EllipticData e = singular_modulus(r, ctx);
  Real k2 = e.k * e.k;
  Real H = value_of(kGollnitz, e.q, ctx);
  Real V = value_of(kCubic, e.q, ctx);
  Real T = sqrt(1L - 8L * pow(V, 3));
  Real h2 = H * H;
  Real ratio = (1L - h2) / (1L + h2);
  long tol = default_tolerance(ctx);
  std::vector<CheckReport> out{
      make_report("modulus_from_gollnitz", "103", "printed", r, e.q, k2, 16L * h2 * ratio * ratio, tol, false, ctx,
                  "16 H^2 ((1 - H^2)/(1 + H^2))^2")};
  if (!out.front().passed)
    out.push_back(make_report("modulus_from_gollnitz", "103", "corrected", r, e.q, k2,
                              16L * h2 * ratio * ratio / ((1L + h2) * (1L + h2)), tol, false, ctx,
                              "16 H^2 (1 - H^2)^2 / (1 + H^2)^4"));
  out.push_back(make_report("modulus_from_cubic", "103", "printed", r, e.q, k2,
                            (1L - T) * pow(3L + T, 3) / ((1L + T) * pow(3L - T, 3)), tol, false, ctx,
                            "(1 - T)(3 + T)^3 / ((1 + T)(3 - T)^3), T = sqrt(1 - 8 V^3)"));
  return out;
}

std::vector<CheckReport> check_derivative_formulas(DerivativeCase which, const Rational& r,
                                                   const PrecisionContext& ctx) {
  switch (which) {
    case DerivativeCase::rgg: return rgg_checks(r, ctx);
    case DerivativeCase::cubic: return cubic_checks(r, ctx);
    case DerivativeCase::n_function: return n_function_checks(r, ctx);
    case DerivativeCase::examples: return example_checks(ctx);
  }
  throw std::invalid_argument("check_derivative_formulas: unknown case");
}

CheckReport check_y_q4(const Rational& r, const PrecisionContext& ctx) {
  EllipticData e = singular_modulus(r, ctx);
  const Real& kp = e.kp;
  Real s = sqrt(1L + kp);
  Real t1 = sqrt(3L * kp + kp * kp + 2L * sqrt2(ctx) * kp * s);
  Real one_minus = 1L - kp;
  Real rhs = sqrt((1L - kp * kp + 2L * (s - sqrt2(ctx)) * t1) / (2L * one_minus * one_minus));
  return make_report("octic_at_fourth_power", "113", "printed", r, e.q, value_of(kOctic, pow(e.q, 4), ctx), rhs,
                     default_tolerance(ctx), false, ctx, "R(1,2,4;q^4) in radicals of k'_r");
}

CheckReport check_v1(const Rational& r, const PrecisionContext& ctx) {
  Real q = nome(r, ctx);
  Real V = value_of(kCubic, q, ctx);
  Real T = sqrt(1L - 8L * pow(V, 3));
  Real T32 = pow(T, Rational(3, 2));
  Real T3 = pow(T, 3);
  Real rhs = (-1L + T32 - sqrt(3L - 2L * T32 - T3)) / (2L * pow(1L - T3, Rational(1, 3)));
  return make_report("cubic_twelve_radical", "115", "printed", r, q, value_of(RQSpec::make(1, 3, 12), q, ctx), rhs,
                     default_tolerance(ctx), false, ctx, "R(1,3,12;q) in radicals of T = sqrt(1 - 8 V^3)");
}

}  // namespace rq
