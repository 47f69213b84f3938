#include "rq/checks.hpp"
#include "rq/numerics.hpp"
#include "rq/quantities.hpp"
#include "rq/recognize.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using rq::Evaluated;
using rq::IntegerPolynomial;
using rq::PrecisionContext;
using rq::Rational;
using rq::Real;
using rq::RQSpec;

namespace {

const PrecisionContext ctx60 = PrecisionContext::with_digits(60);

Real tol(long e, const PrecisionContext& ctx) { return rq::power_of_ten(-e, ctx.bits()); }

Real dec(const char* text, const PrecisionContext& ctx) { return Real(std::string(text), ctx.bits()); }

// Gamma(1/4)^2 / (4 sqrt(pi)) from MPFR's gamma function.
Real lemniscate_K(const PrecisionContext& ctx) {
  Real g(ctx.bits());
  mpfr_gamma(g.get(), Real(Rational(1, 4), ctx.bits()).get(), MPFR_RNDN);
  return g * g / (4L * rq::sqrt(ctx.pi()));
}

// theta_2(q)^2 / theta_3(q)^2 by direct summation.
Real modulus_from_thetas(const Real& q, const PrecisionContext& ctx) {
  Real t2 = ctx.zero(), t3 = ctx.from(1L);
  const Real cut = tol(ctx.digits + ctx.guard, ctx);
  for (long n = 0;; ++n) {
    Real a = rq::pow(q, Rational((2 * n + 1) * (2 * n + 1), 4));
    Real b = rq::pow(q, (n + 1) * (n + 1));
    t2 += 2L * a;
    t3 += 2L * b;
    if (a < cut && b < cut) break;
  }
  return t2 * t2 / (t3 * t3);
}

// [a,p;q]/[b,p;q] q^Q with a plain factor loop.
Real naive_rq(long a, long b, long p, const Real& q, const PrecisionContext& ctx) {
  const auto s = RQSpec::make(a, b, p);
  Real v = rq::pow(q, s.Q());
  const Real cut = tol(ctx.digits + ctx.guard + 5, ctx);
  for (long n = 0;; n += p) {
    Real qa = rq::pow(q, n + a), qpa = rq::pow(q, n + p - a);
    Real qb = rq::pow(q, n + b), qpb = rq::pow(q, n + p - b);
    v = v * (1L - qa) * (1L - qpa) / ((1L - qb) * (1L - qpb));
    if (qa < cut && qb < cut) break;
  }
  return v;
}

bool close(const Real& a, const Real& b, long digits) { return rq::abs(a - b) < tol(digits, PrecisionContext{digits, 15}); }

IntegerPolynomial poly(std::initializer_list<long> c) { return IntegerPolynomial(c.begin(), c.end()); }

}  // namespace

TEST_CASE("real wrapper") {
  Real x(Rational(1, 3), 200);
  CHECK(x.bits() == 200);
  Real y = x * 3L;
  CHECK(close(y, Real(1L, 200), 55));
  CHECK_THROWS_AS(Real(std::string("nope"), 100), std::invalid_argument);
  CHECK(Real(std::string("2.7"), 100).round() == 3);
  CHECK(rq::power_of_ten(-3, 100).log10_abs() == -3);
  // wider precision wins
  Real wide(Rational(1, 3), 400);
  CHECK((wide + Real(0L, 64)).bits() == 400);
}

TEST_CASE("complete elliptic integral") {
  int iterations = 0;
  CHECK(close(rq::elliptic_K(ctx60.zero(), ctx60), ctx60.pi() / 2L, 60));
  Real s = rq::sqrt(ctx60.from(Rational(1, 2)));
  Real K = rq::elliptic_K(s, ctx60, &iterations);
  CHECK(close(K, lemniscate_K(ctx60), 60));
  CHECK(std::abs(K.to_double() - 1.854074677301372) < 1e-15);
  CHECK(iterations <= std::log2(60.0 + 15.0) + 4);
  CHECK_THROWS_AS(rq::elliptic_K(ctx60.from(1L), ctx60), std::domain_error);
  CHECK_THROWS_AS(rq::elliptic_K(ctx60.from(-1L), ctx60), std::domain_error);
}

TEST_CASE("singular moduli") {
  auto e1 = rq::singular_modulus(1, ctx60);
  CHECK(close(e1.k, rq::sqrt(ctx60.from(Rational(1, 2))), 60));

  auto e4 = rq::singular_modulus(4, ctx60);
  CHECK(close(e4.k, 3L - 2L * rq::sqrt(ctx60.from(2L)), 60));
  auto rec = rq::recognize_algebraic(e4.k, 2, ctx60);
  REQUIRE(rec);
  CHECK(rec->poly == poly({1, -6, 1}));

  Real prev = ctx60.from(1L);
  for (Rational r : {Rational(1, 10), Rational(1, 3), Rational(1), Rational(2), Rational(7, 2), Rational(10),
                     Rational(40), Rational(100)}) {
    auto e = rq::singular_modulus(r, ctx60);
    CHECK(e.k < prev);
    prev = e.k;
    CHECK(close(e.k * e.k + e.kp * e.kp, ctx60.from(1L), 58));
    CHECK(close(e.Kp / e.K, rq::sqrt(ctx60.from(r)), 55));
    CHECK(close(e.k, modulus_from_thetas(e.q, ctx60), 55));
  }

  auto small = rq::singular_modulus(Rational(1, 4), ctx60);
  CHECK(close(small.k, e4.kp, 58));
  CHECK_THROWS_AS(rq::singular_modulus(0, ctx60), std::domain_error);
}

TEST_CASE("agile and quantity products") {
  Real tiny = dec("1e-30", ctx60);
  CHECK(close(rq::eval_agile(1, 5, tiny, ctx60).value, ctx60.from(1L), 29));

  const PrecisionContext c30 = PrecisionContext::with_digits(30);
  Real q = dec("0.1", c30);
  Real lhs = rq::eval_agile(1, 5, q, c30).value * rq::eval_agile(2, 5, q, c30).value;
  Real num = c30.from(1L), den = c30.from(1L);
  for (long n = 1; n < 80; ++n) {
    num *= 1L - rq::pow(q, n);
    if (5 * n < 80) den *= 1L - rq::pow(q, 5 * n);
  }
  CHECK(close(lhs, num / den, 25));

  Real q3 = dec("0.3", c30);
  auto series = rq::pochhammer_inf(1, 4, 400) * rq::pochhammer_inf(3, 4, 400);
  CHECK(close(rq::eval_agile(1, 4, q3, c30).value, rq::eval_series(series, q3, c30).value, 20));

  CHECK_THROWS_AS(rq::eval_agile(1, 5, c30.from(1L), c30), std::domain_error);
  CHECK_THROWS_AS(rq::eval_agile(1, 5, c30.zero(), c30), std::domain_error);
}

TEST_CASE("products against a naive loop") {
  for (auto [a, b, p] : {std::tuple{1L, 2L, 5L}, {1L, 3L, 8L}, {2L, 5L, 12L}}) {
    for (const char* qs : {"0.05", "0.4", "0.7"}) {
      Real q = dec(qs, ctx60);
      auto v = rq::eval_rq(RQSpec::make(a, b, p), q, ctx60);
      CHECK(close(v.value, naive_rq(a, b, p, q, ctx60), 55));
      CHECK(v.error < tol(50, ctx60));
    }
  }
}

TEST_CASE("series and products agree") {
  for (const char* qs : {"0.1", "0.2", "0.3"}) {
    Real q = dec(qs, ctx60);
    const Rational order = rq::series_order_for(q, ctx60);
    for (auto [a, b, p] : {std::tuple{1L, 2L, 5L}, {1L, 3L, 6L}, {1L, 3L, 8L}, {1L, 2L, 4L}}) {
      auto s = RQSpec::make(a, b, p);
      auto prod = rq::eval_rq(s, q, ctx60);
      auto ser = rq::eval_series(rq::rq_series(s, order), q, ctx60);
      CHECK(close(prod.value, ser.value, 50));
      CHECK(ser.error < tol(50, ctx60));

      auto dprod = rq::eval_rq_derivative(s, q, ctx60);
      auto dser = rq::eval_series(rq::q_derivative(rq::rq_series(s, order)), q, ctx60);
      CHECK(rq::abs(dprod.value - dser.value / q) < tol(48, ctx60) * rq::abs(dprod.value));
    }
  }
}

TEST_CASE("log derivative of a product") {
  Real q = dec("0.25", ctx60);
  auto f = rq::euler_progressions(1);
  // q d/dq log f(-q) = -L1(q)
  auto lhs = rq::eval_product_log_derivative(f, q, ctx60);
  auto l1 = rq::eval_series(rq::eta_series(rq::EtaKind::L1, 200), q, ctx60);
  CHECK(close(lhs.value, -l1.value, 55));
}

TEST_CASE("theta function") {
  Real tiny = dec("1e-40", ctx60);
  CHECK(close(rq::eval_theta4(ctx60.zero(), tiny, ctx60).value, ctx60.from(1L), 39));

  Real y = dec("0.3", ctx60), q = dec("0.2", ctx60);
  CHECK(close(rq::eval_theta4(y, q, ctx60).value, rq::eval_theta4_product(y, q, ctx60).value, 55));

  const PrecisionContext c30 = PrecisionContext::with_digits(30);
  Real x = rq::exp(c30.from(-1L));
  for (auto [a, b, p] : {std::tuple{1L, 2L, 5L}, {1L, 3L, 8L}, {2L, 3L, 7L}}) {
    auto s = RQSpec::make(a, b, p);
    CHECK(close(rq::eval_rq_theta(s, x, c30).value, rq::eval_rq(s, x, c30).value, 25));
  }
  CHECK_THROWS_AS(rq::eval_theta4(dec("1e7", ctx60), dec("0.5", ctx60), ctx60), std::domain_error);
}

TEST_CASE("continued fractions") {
  Real q = dec("0.1", ctx60);
  rq::CfParams zero{ctx60.zero(), ctx60.zero()};
  CHECK(close(rq::eval_cf(rq::CfKind::general_P, zero, q, ctx60).value, ctx60.from(1L), 60));

  rq::CfParams none{ctx60.zero(), ctx60.zero()};
  CHECK(close(rq::eval_cf(rq::CfKind::rr, none, q, ctx60).value, naive_rq(1, 2, 5, q, ctx60), 55));
  Real q2 = dec("0.2", ctx60);
  CHECK(close(rq::eval_cf(rq::CfKind::rgg, none, q2, ctx60).value, naive_rq(1, 3, 8, q2, ctx60), 55));
  CHECK(close(rq::eval_cf(rq::CfKind::cubic, none, q2, ctx60).value, naive_rq(1, 3, 6, q2, ctx60), 55));

  rq::CfParams t6{ctx60.zero(), ctx60.zero(), 1, 2};
  auto cf = rq::eval_cf(rq::CfKind::theorem6, t6, q2, ctx60);
  auto prod = rq::eval_product(rq::rq_star_progressions(RQSpec::make(11, 7, 12)), q2, ctx60);
  CHECK(close(cf.value, prod.value, 55));
  CHECK(cf.depth >= 16);

  rq::CfParams bad{ctx60.zero(), ctx60.zero(), 2, 1};
  CHECK_THROWS_AS(rq::eval_cf(rq::CfKind::theorem6, bad, q2, ctx60), std::invalid_argument);
}

TEST_CASE("root of unity product") {
  auto r1 = rq::check_theorem7(RQSpec::make(1, 2, 5), dec("0.15", ctx60), ctx60);
  CHECK(r1.abs_mismatch < tol(52, ctx60));
  auto r2 = rq::check_theorem7(RQSpec::make(1, 3, 7), dec("0.1", ctx60), ctx60);
  CHECK(r2.abs_mismatch < tol(52, ctx60));
  CHECK(rq::abs(r2.rhs.im) < tol(52, ctx60));
  CHECK_THROWS_AS(rq::check_theorem7(RQSpec::make(1, 2, 6), dec("0.1", ctx60), ctx60), std::invalid_argument);
}

TEST_CASE("two-term root of unity sum is the even part") {
  // y(x) + y(-x) = 2 * (even part of y)(x) for y = log R*(1,2,5)
  auto y = rq::log_rq_series(RQSpec::make(1, 2, 5), 300);
  std::vector<rq::Term> even;
  for (const auto& t : y.terms())
    if (t.exponent.get_den() == 1 && t.exponent.get_num() % 2 == 0) even.push_back(t);
  auto e = rq::FormalSeries::from_terms(even, 300);
  Real x = dec("0.3", ctx60);
  Real both = rq::eval_series(y, x, ctx60).value + rq::eval_series(y.negated_q(), x, ctx60).value;
  CHECK(close(both, 2L * rq::eval_series(e, x, ctx60).value, 55));
}

TEST_CASE("complex evaluation on the real axis") {
  Real q = dec("0.3", ctx60);
  auto z = rq::eval_rq_complex(RQSpec::make(1, 2, 5), rq::Complex(q), ctx60);
  CHECK(close(z.re, naive_rq(1, 2, 5, q, ctx60), 55));
  CHECK(rq::abs(z.im) < tol(55, ctx60));
}

TEST_CASE("real roots") {
  auto r = rq::real_roots(poly({-2, 0, 1}), ctx60);
  REQUIRE(r.size() == 2);
  CHECK(close(r[1], rq::sqrt(ctx60.from(2L)), 58));
  CHECK(close(r[0], -rq::sqrt(ctx60.from(2L)), 58));

  auto d = rq::real_roots(poly({2, -3, 0, 1}), ctx60);  // (x-1)^2 (x+2)
  REQUIRE(d.size() == 2);
  CHECK(close(d[0], ctx60.from(-2L), 58));
  CHECK(close(d[1], ctx60.from(1L), 58));

  CHECK(rq::real_roots(poly({1, 0, 1}), ctx60).empty());
  CHECK_THROWS_AS(rq::real_roots(poly({0}), ctx60), std::invalid_argument);
  CHECK(rq::polynomial_text(poly({-1, 2})) == "2*x - 1");
}

TEST_CASE("lattice reduction") {
  std::vector<std::vector<rq::Integer>> b{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  auto det = [](const std::vector<std::vector<rq::Integer>>& m) -> rq::Integer {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const rq::Integer d0 = abs(det(b));
  rq::lll_reduce(b);
  CHECK(abs(det(b)) == d0);
  rq::Integer n0 = b[0][0] * b[0][0] + b[0][1] * b[0][1] + b[0][2] * b[0][2];
  CHECK(n0 <= 1);
  std::vector<std::vector<rq::Integer>> dep{{1, 2}, {2, 4}};
  CHECK_THROWS(rq::lll_reduce(dep));
}

TEST_CASE("recognition") {
  const PrecisionContext c40 = PrecisionContext::with_digits(40);
  auto half = rq::recognize_algebraic(c40.from(Rational(1, 2)), 1, c40);
  REQUIRE(half);
  CHECK(half->poly == poly({-1, 2}));

  auto s = rq::recognize_algebraic(rq::sqrt(c40.from(2L)) - 1L, 2, c40);
  REQUIRE(s);
  CHECK(s->poly == poly({-1, 2, 1}));
  CHECK(s->residual < tol(20, c40));

  Real h = rq::eval_rq(RQSpec::make(1, 3, 8), rq::nome(1, ctx60), ctx60).value;
  auto hr = rq::recognize_algebraic(h, 4, ctx60);
  REQUIRE(hr);
  CHECK(hr->poly.size() <= 5);
  CHECK(rq::abs(rq::evaluate(hr->poly, h)) < tol(30, ctx60));

  CHECK_FALSE(rq::recognize_algebraic(ctx60.pi(), 4, ctx60));
  CHECK_THROWS_AS(rq::recognize_algebraic(h, 8, ctx60), std::invalid_argument);
}

TEST_CASE("weighted agile recognition probe") {
  const PrecisionContext c130 = PrecisionContext::with_digits(130);
  for (long r : {1L, 2L}) {
    Real q = rq::nome(r, c130);
    for (auto [a, p] : {std::pair{1L, 4L}, {1L, 5L}, {1L, 6L}, {1L, 8L}}) {
      Real x = rq::eval_agile(a, p, q, c130).value * rq::pow(q, rq::agile_weight(a, p));
      auto rec = rq::recognize_algebraic(x, 12, c130);
      if (rec)
        MESSAGE("[" << a << "," << p << "] r=" << r << ": " << rq::polynomial_text(rec->poly) << " residual "
                    << rec->residual.to_string(3));
      else
        MESSAGE("[" << a << "," << p << "] r=" << r << ": no polynomial of degree <= 12");
      if (p == 4) {
        REQUIRE(rec);
        CHECK(rec->poly == (r == 1 ? poly({-2, 0, 0, 0, 0, 0, 0, 0, 1}) : poly({-2, 0, 0, 0, 1})));
      }
    }
  }
}

TEST_CASE("doubling the precision keeps the leading digits") {
  const PrecisionContext lo = PrecisionContext::with_digits(40), hi = PrecisionContext::with_digits(80);
  auto lead20 = [](const Real& a, const Real& b) { return rq::abs(a - b) <= rq::abs(a) * tol(21, PrecisionContext{21, 15}); };
  CHECK(lead20(rq::singular_modulus(3, lo).k, rq::singular_modulus(3, hi).k));
  CHECK(lead20(rq::eval_rq(RQSpec::make(1, 2, 5), rq::nome(2, lo), lo).value,
               rq::eval_rq(RQSpec::make(1, 2, 5), rq::nome(2, hi), hi).value));
  rq::CfParams none{lo.zero(), lo.zero()};
  CHECK(lead20(rq::eval_cf(rq::CfKind::cubic, none, dec("0.4", lo), lo).value,
               rq::eval_cf(rq::CfKind::cubic, none, dec("0.4", hi), hi).value));
  for (auto which : {rq::DerivativeCase::rgg, rq::DerivativeCase::cubic, rq::DerivativeCase::examples}) {
    auto a = rq::check_derivative_formulas(which, 2, lo);
    auto b = rq::check_derivative_formulas(which, 2, hi);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(lead20(a[i].lhs, b[i].lhs));
      CHECK(lead20(a[i].rhs, b[i].rhs));
    }
  }
}

TEST_CASE("elliptic checks") {
  CHECK(rq::check_k1(ctx60).passed);
  for (long r : {1L, 2L, 3L}) CHECK(rq::check_h_closed_form(r, ctx60).passed);

  auto rad = rq::check_h_radical(ctx60);
  REQUIRE(rad.size() == 2);
  CHECK(rad[0].variant == "printed");
  CHECK_FALSE(rad[0].passed);
  CHECK(rad[0].rhs.sign() < 0);
  CHECK(rad[1].variant == "corrected");
  CHECK(rad[1].passed);

  for (long r : {1L, 2L, 3L}) {
    auto reps = rq::check_modulus_relations(r, ctx60);
    for (const auto& rep : reps) {
      CAPTURE(rep.check_id);
      CAPTURE(rep.variant);
      if (rep.check_id == "modulus_from_gollnitz" && rep.variant == "printed")
        CHECK_FALSE(rep.passed);
      else
        CHECK(rep.passed);
    }
  }

  CHECK(rq::check_y_q4(1, ctx60).passed);
  CHECK_FALSE(rq::check_v1(1, ctx60).passed);
}

TEST_CASE("derivative formulas") {
  auto by_id = [](const std::vector<rq::CheckReport>& reps, const std::string& id, const std::string& variant) {
    for (const auto& r : reps)
      if (r.check_id == id && r.variant == variant) return r;
    throw std::out_of_range(id + "/" + variant);
  };
  for (long r : {1L, 2L}) {
    auto rgg = rq::check_derivative_formulas(rq::DerivativeCase::rgg, r, ctx60);
    CHECK_FALSE(by_id(rgg, "rgg_derivative", "printed").passed);
    CHECK(by_id(rgg, "rgg_derivative", "corrected").passed);

    auto nf = rq::check_derivative_formulas(rq::DerivativeCase::n_function, r, ctx60);
    CHECK(by_id(nf, "euler_elliptic_form", "printed").passed);
    CHECK(by_id(nf, "n_function_derivative", "printed").passed);
    CHECK(by_id(nf, "rr_derivative_radical", "corrected").passed);
  }
  CHECK(by_id(rq::check_derivative_formulas(rq::DerivativeCase::cubic, 1, ctx60), "cubic_derivative", "printed").passed);
  auto c2 = rq::check_derivative_formulas(rq::DerivativeCase::cubic, 2, ctx60);
  CHECK_FALSE(by_id(c2, "cubic_derivative", "printed").passed);
  CHECK(by_id(c2, "cubic_derivative", "corrected").passed);

  auto ex = rq::check_derivative_formulas(rq::DerivativeCase::examples, 1, ctx60);
  CHECK(by_id(ex, "derivative_example_1_2_4", "printed").passed);
  CHECK(by_id(ex, "derivative_example_1_2_5", "printed").passed);
  CHECK(by_id(ex, "derivative_example_1_3_8", "corrected").passed);
  for (const auto& rep : ex) CHECK(rep.lhs.is_finite());
}

TEST_CASE("check report json") {
  auto j = rq::to_json(rq::check_k1(ctx60));
  CHECK(j.at("check_id") == "singular_modulus_k1");
  CHECK(j.at("verdict") == "pass");
  CHECK(j.at("digits") == 60);
  CHECK(j.at("lhs").get<std::string>().size() > 50);
  CHECK(j.at("tolerance") == "1e-50");
}
