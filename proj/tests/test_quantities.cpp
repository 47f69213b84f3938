#include "oracle.hpp"
#include "rq/quantities.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using rq::FormalSeries;
using rq::Rational;
using rq::RQSpec;

namespace {

Rational R(long n, long d = 1) {
  Rational x(n, d);
  x.canonicalize();
  return x;
}

FormalSeries from_integers(const std::vector<rq::Integer>& c) {
  std::vector<Rational> rc(c.begin(), c.end());
  return FormalSeries::from_lattice(1, 0, rc, R(static_cast<long>(c.size()) - 1));
}

// [a,p;q] / [b,p;q] by direct factor multiplication.
FormalSeries brute_rq_star(long a, long b, long p, long n) {
  std::vector<std::pair<long, long>> f;
  oracle::add_agile(f, a, p, 1, n);
  oracle::add_agile(f, b, p, -1, n);
  return from_integers(oracle::expand_product(f, n));
}

FormalSeries one(long order) { return FormalSeries::constant(1, order); }

}  // namespace

TEST_CASE("agile series against direct products") {
  CHECK(rq::agile_series(1, 2, 4) == FormalSeries::from_terms({{0, 1}, {1, -2}, {2, 1}, {3, -2}, {4, 4}}, 4));
  for (long p = 2; p <= 12; ++p)
    for (long a = 1; a < p; ++a) {
      std::vector<std::pair<long, long>> f;
      oracle::add_agile(f, a, p, 1, 60);
      REQUIRE(rq::agile_series(a, p, 60) == from_integers(oracle::expand_product(f, 60)));
    }
  CHECK_THROWS_AS(rq::agile_series(5, 5, 10), std::invalid_argument);
}

TEST_CASE("agiles mod 5 factor f(-q)") {
  const long N = 100;
  auto lhs = rq::agile_series(1, 5, N) * rq::agile_series(2, 5, N);
  auto rhs = rq::eta_series(rq::EtaKind::f_minus_q, N) / rq::pochhammer_inf(5, 5, N);
  CHECK(lhs == rhs);
}

TEST_CASE("agile at the midpoint is a square") {
  auto half = rq::pochhammer_inf(3, 6, 80);
  CHECK(rq::agile_series(3, 6, 80) == half * half);
}

TEST_CASE("agile weight is symmetric under a -> p - a") {
  for (long p = 2; p <= 20; ++p)
    for (long a = 1; a < p; ++a) CHECK(rq::agile_weight(a, p) == rq::agile_weight(p - a, p));
  CHECK(rq::agile_weight(1, 5) == R(1, 60));
}

TEST_CASE("rq series") {
  auto s = RQSpec::make(1, 2, 5);
  CHECK(s.Q() == R(1, 5));
  auto r = rq::rq_series(s, 40);
  CHECK(r.lead_exponent() == R(1, 5));
  CHECK(r == brute_rq_star(1, 2, 5, 40).shifted(R(1, 5)).truncated(40));
  CHECK(r.coeff(R(6, 5)) == -1);
  CHECK(r.coeff(R(11, 5)) == 1);
  CHECK(r.coeff(R(16, 5)) == 0);
  CHECK(r.coeff(R(21, 5)) == -1);

  CHECK(RQSpec::make(1, 3, 8).Q() == R(1, 2));
  CHECK(rq::rq_series(RQSpec::make(1, 3, 8), 50) == brute_rq_star(1, 3, 8, 50).shifted(R(1, 2)).truncated(50));
}

TEST_CASE("reciprocal law") {
  for (auto [a, b, p] : {std::tuple{1, 2, 4}, {1, 2, 5}, {1, 3, 8}, {2, 5, 12}}) {
    auto x = rq::rq_series(RQSpec::make(a, b, p), 100);
    auto y = rq::rq_series(RQSpec::make(b, a, p), 100);
    CHECK((x * y).agrees_with(one(100)));
  }
}

TEST_CASE("product over the character matches the quotient") {
  for (long p = 3; p <= 12; ++p)
    for (long a = 1; a < p; ++a)
      for (long b = 1; b < p; ++b) {
        if (a == b || a == p - b || 2 * a == p || 2 * b == p) continue;
        auto s = RQSpec::make(a, b, p);
        auto lhs = rq::rq_series(s, 150 + s.Q()).shifted(-s.Q());
        REQUIRE(lhs == rq::product_over_X(s, 150));
      }
  CHECK(rq::product_over_X(RQSpec::make(1, 2, 5), 0) == one(0));
}

TEST_CASE("log of the quantity") {
  auto s = RQSpec::make(1, 2, 5);
  auto l = rq::log_rq_series(s, 100);
  CHECK(l.coeff(1) == -1);
  CHECK(l.coeff(6) == R(-1, 3));
  CHECK(rq::exp_nilpotent(l) == rq::product_over_X(s, 100));
  CHECK(rq::log_unit(rq::product_over_X(s, 100)) == l);
}

TEST_CASE("M(q) is the logarithmic derivative") {
  auto s = RQSpec::make(1, 2, 5);
  auto m = rq::m_series(s, 50);
  CHECK(m.coeff(0) == R(1, 5));
  CHECK(m.coeff(1) == -1);
  for (auto [a, b, p] : {std::tuple{1, 2, 5}, {1, 3, 8}, {1, 4, 17}, {2, 5, 12}}) {
    auto sp = RQSpec::make(a, b, p);
    auto r = rq::rq_series(sp, 50 + sp.Q());
    CHECK((rq::m_series(sp, 50) * r).agrees_with(rq::q_derivative(r)));
  }
}

TEST_CASE("2M(q^2) - M(q) - M(-q) for (1,3,8)") {
  auto s = RQSpec::make(1, 3, 8);
  auto m = rq::m_series(s, 200);
  auto lhs = rq::substitute_power(m, 2).truncated(200).scaled(2) - m - m.negated_q();
  CHECK(lhs.is_zero());
  CHECK(lhs.order() == 200);
}

TEST_CASE("eta series") {
  auto f = rq::eta_series(rq::EtaKind::f_minus_q, 40);
  CHECK(f.coeff(5) == 1);
  CHECK(f.coeff(7) == 1);
  CHECK(f.coeff(12) == -1);
  std::vector<std::pair<long, long>> fac;
  for (long e = 1; e <= 40; ++e) fac.push_back({e, 1});
  CHECK(f == from_integers(oracle::expand_product(fac, 40)));

  auto l1 = rq::eta_series(rq::EtaKind::L1, 40);
  CHECK(l1.coeff(6) == 12);
  for (long n = 1; n <= 40; ++n) {
    long sigma = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sigma += d;
    CHECK(l1.coeff(n) == sigma);
  }
  auto L = rq::eisenstein_L(10);
  CHECK(L.coeff(0) == 1);
  CHECK(L.coeff(1) == -24);
  // L1 = -q d/dq log f(-q)
  CHECK(l1 == -rq::q_derivative(rq::log_unit(f)));
}

TEST_CASE("odd product") {
  std::vector<std::pair<long, long>> fac;
  for (long e = 3; e <= 60; e += 6) fac.push_back({e, 1});
  CHECK(rq::odd_product(3, 60) == from_integers(oracle::expand_product(fac, 60)));
}

TEST_CASE("eta quotient of the (2,6,12) decomposition") {
  auto d = rq::decompose_character(RQSpec::make(2, 6, 12), 12);
  REQUIRE(d);
  auto eq = rq::eta_quotient_from(*d, R(2, 3));
  CHECK(eq == rq::EtaQuotient{R(2, 3), {{2, 1}, {4, -1}, {6, -2}, {12, 2}}});
  const Rational N = 120;
  auto series = rq::eta_quotient_series(eq, N);
  // The quotient counts residue 6 once.
  auto once = (rq::agile_series(2, 12, N) / rq::pochhammer_inf(6, 12, N)).shifted(R(2, 3)).truncated(N);
  CHECK(series == once);
  CHECK_FALSE(series.agrees_with(rq::rq_series(RQSpec::make(2, 6, 12), N)));
}

TEST_CASE("eta quotient for the indicator of 3 not dividing n") {
  rq::EtaQuotient eq{0, {{1, 1}, {3, -1}}};
  std::vector<std::pair<long, long>> fac;
  for (long e = 1; e <= 90; ++e)
    if (e % 3 != 0) fac.push_back({e, 1});
  CHECK(rq::eta_quotient_series(eq, 90) == from_integers(oracle::expand_product(fac, 90)));
  CHECK(eq.to_string() == "q^(0) * f(-q^1)^1 * f(-q^3)^-1");
}

TEST_CASE("eta form of R(1,2,6)") {
  rq::EtaQuotient eq{R(1, 4), {{1, 1}, {6, 2}, {2, -2}, {3, -1}}};
  CHECK(rq::eta_quotient_series(eq, 150) == rq::rq_series(RQSpec::make(1, 2, 6), 150));
}

TEST_CASE("rational spec normalisation") {
  auto n = rq::normalize_rational_spec(RQSpec::make(1, 2, 5));
  CHECK(n.spec == RQSpec::make(1, 2, 5));
  CHECK(n.substitution == 1);
  CHECK_FALSE(n.inverted);

  auto z = rq::normalize_rational_spec(RQSpec::parse("1,1/2,2"));
  CHECK(z.spec == RQSpec::make(1, 2, 4));
  CHECK(z.substitution == R(1, 2));
  CHECK(z.inverted);

  for (const char* text : {"1,1/2,2", "1/2,3/2,5/2", "1/3,1/2,1", "2/3,1/5,3/4"}) {
    auto spec = RQSpec::parse(text);
    auto ns = rq::normalize_rational_spec(spec);
    CHECK(ns.spec.is_integer());
    CHECK(ns.spec.a < ns.spec.b);
    const Rational N = 40;
    auto w = rq::substitute_power(rq::rq_series(ns.spec, N / ns.substitution + 1), ns.substitution);
    if (ns.inverted) w = one(static_cast<long>(N.get_d()) + 2) / w;
    CHECK(rq::rq_series(spec, N).agrees_with(w));
  }
  auto q8 = rq::normalize_rational_spec(RQSpec::parse("1/2,3/2,5/2"));
  CHECK(q8.substitution == R(1, 8));
}

TEST_CASE("continued fractions as series") {
  const Rational N = 100;
  // 1/(1 + q/(1 + q^2/(1 + ...))) = [1,5;q]/[2,5;q]
  rq::FormalCF rr{
      [](long k, const Rational& o) { return FormalSeries::monomial(1, k, o); },
      [](long, const Rational& o) { return FormalSeries::constant(1, o); },
      1};
  CHECK(rq::cf_series(rr, N) == brute_rq_star(1, 2, 5, 100));

  CHECK(rq::theorem6_spec(1, 2) == RQSpec::make(11, 7, 12));
  for (auto [A, B] : {std::pair{1L, 2L}, {1L, 3L}, {2L, 3L}})
    CHECK(rq::theorem6_series(A, B, 80).agrees_with(rq::rq_star_series(rq::theorem6_spec(A, B), 80)));
  CHECK_THROWS_AS(rq::theorem6_series(2, 2, 10), std::invalid_argument);
}

TEST_CASE("octic fraction matches its product only through q^8") {
  auto cf = rq::octic_cf_series(1, 12);
  auto product = rq::rq_star_series(RQSpec::make(2, 1, 4), 12);
  CHECK(cf.truncated(8) == product.truncated(8));
  CHECK(cf.coeff(9) != product.coeff(9));
}

TEST_CASE("identity registry") {
  const auto& reg = rq::identity_registry();
  std::set<std::string> ids;
  for (const auto& rec : reg) {
    CHECK(ids.insert(rec.id).second);
    CHECK(rec.residual);
    CHECK_FALSE(rec.statement.empty());
  }

  auto find = [&](const std::string& id) -> const rq::IdentityRecord& {
    for (const auto& rec : reg)
      if (rec.id == id) return rec;
    throw std::out_of_range(id);
  };

  auto o106 = rq::verify_identity(find("rr_times_rr_squared_argument"), 200);
  CHECK(o106.verified);
  CHECK(o106.verified_order >= 200);
  CHECK(o106.paper_eq == "106");

  auto o128 = rq::verify_identity(find("rr_fifth_power_eta"), 100);
  CHECK(o128.verified);

  auto o130 = rq::verify_identity(find("weighted_agile_6_cubed"), 100);
  CHECK(o130.paper_status == rq::PaperStatus::conjectured);
  CHECK(o130.verified);

  auto o120 = rq::verify_identity(find("square_1_2_10"), 60);
  CHECK(o120.verified);
  CHECK(o120.printed_checked);
  CHECK(o120.printed_first_failure.has_value());

  auto bad = rq::verify_identity(find("cubic_cross_1_3_12_degree_17"), 60);
  CHECK_FALSE(bad.verified);
  REQUIRE(bad.first_failure_exponent);
  CHECK(*bad.first_failure_exponent == 8);

  auto j = rq::to_json(bad);
  CHECK(j.at("status") == "failed");
  CHECK(j.at("first_failure_exponent") == "8");
  CHECK(j.at("paper_status") == "paper-conjectured");
  CHECK(rq::to_json(o106).at("status") == "verified-here");
}
