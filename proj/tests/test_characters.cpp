#include "oracle.hpp"
#include "rq/characters.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <string>

using rq::IntegerVector;
using rq::RQSpec;
using rq::TauTable;

namespace {

IntegerVector relation(long J, std::initializer_list<std::pair<long, long>> entries) {
  IntegerVector v(J, 0);
  for (auto [j, c] : entries) v[j - 1] = c;
  return v;
}

std::vector<IntegerVector> coeffs_of(const rq::TauScan& scan) {
  std::vector<IntegerVector> out;
  for (const auto& r : scan.relations) out.push_back(r.coeffs);
  return out;
}

std::vector<int> period_of(const RQSpec& spec) {
  std::vector<int> period(spec.ip());
  for (long r = 0; r < spec.ip(); ++r) period[r] = rq::residue_character(spec, r);
  return period;
}

}  // namespace

TEST_CASE("spec construction") {
  auto s = RQSpec::make(1, 2, 5);
  CHECK(s.Q() == rq::Rational(1, 5));
  CHECK(RQSpec::make(1, 3, 8).Q() == rq::Rational(1, 2));
  CHECK(RQSpec::parse("1,1/2,2").b == rq::Rational(1, 2));
  CHECK_THROWS_AS(RQSpec::make(2, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(RQSpec::make(1, 6, 5), std::invalid_argument);
  CHECK_THROWS_AS(RQSpec::parse("1,2"), std::invalid_argument);
}

TEST_CASE("chi examples") {
  auto s = RQSpec::make(1, 2, 5);
  CHECK(rq::chi(s, 1) == 1);
  CHECK(rq::chi(s, 7) == -1);
  CHECK(rq::chi(s, 10) == 0);
  CHECK(rq::chi(s, 4) == 1);
  CHECK(rq::chi(s, 3) == -1);
}

TEST_CASE("residue collisions name the residues") {
  // 1 = p - b for (1,4,5)
  try {
    (void)rq::chi(RQSpec::make(1, 4, 5), 1);
    FAIL("collision accepted");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("residues") != std::string::npos);
    CHECK(msg.find("p-b") != std::string::npos);
  }
  CHECK_THROWS_AS(TauTable(RQSpec::make(1, 3, 6)), std::invalid_argument);
  // The set-valued character still covers b = p/2.
  CHECK(rq::residue_character(RQSpec::make(1, 3, 6), 3) == -1);
}

TEST_CASE("tau against the explicit divisor sum") {
  auto s = RQSpec::make(1, 2, 5);
  TauTable t(s);
  CHECK(t.tau(1) == 1);
  // 1*chi(1) + 2*chi(2) + 3*chi(3) + 6*chi(6) = 1 - 2 - 3 + 6
  CHECK(t.tau(6) == 2);
  CHECK(t.tau(30) == t.tau(6));
  auto period = period_of(s);
  for (long n = 1; n <= 500; ++n) CHECK(t.tau(n) == oracle::divisor_sum(period, n));
  CHECK_THROWS_AS(t.tau(0), std::invalid_argument);
}

TEST_CASE("chi has period p") {
  for (long p = 3; p <= 50; ++p)
    for (long a = 1; a < p; ++a)
      for (long b = 1; b < p; ++b) {
        if (a == b || a == p - b || 2 * a == p || 2 * b == p) continue;
        auto s = RQSpec::make(a, b, p);
        for (long n = 1; n <= 10 * p; ++n) REQUIRE(rq::chi(s, n + p) == rq::chi(s, n));
      }
}

TEST_CASE("tau(p n) = tau(n) for prime p") {
  for (auto [a, b, p] : {std::tuple{1, 2, 5}, {1, 3, 7}, {1, 4, 17}, {2, 3, 11}, {2, 5, 13}}) {
    TauTable t(RQSpec::make(a, b, p));
    t.reserve(5000L * p);
    for (long n = 1; n <= 5000; ++n) REQUIRE(t.tau(p * n) == t.tau(n));
  }
}

TEST_CASE("doubling conjecture probe") {
  for (auto [a, b, p] : {std::tuple{1, 3, 8}, {1, 3, 6}, {1, 5, 12}}) {
    auto s = RQSpec::make(a, b, p);
    CHECK(rq::doubling_conjecture_applies(s));
    auto period = period_of(s);
    long first = 0;
    for (long n = 1; n <= 2000 && first == 0; ++n)
      if (oracle::divisor_sum(period, 2 * n) != oracle::divisor_sum(period, n)) first = n;
    if (first == 0)
      MESSAGE("spec (" << s.to_string() << "): tau(2n) = tau(n) for n <= 2000");
    else
      MESSAGE("spec (" << s.to_string() << "): tau(2n) != tau(n) first at n = " << first);
  }
  CHECK_FALSE(rq::doubling_conjecture_applies(RQSpec::make(1, 2, 5)));

  TauTable t(RQSpec::make(1, 3, 8));
  auto lib = rq::first_multiplier_failure(t, 2, 2000);
  auto period = period_of(t.spec());
  std::optional<long> brute;
  for (long n = 1; n <= 2000 && !brute; ++n)
    if (oracle::divisor_sum(period, 2 * n) != oracle::divisor_sum(period, n)) brute = n;
  CHECK(lib == brute);
}

TEST_CASE("multiplier conjecture predicate") {
  CHECK(rq::multiplier_conjecture_applies(RQSpec::make(1, 5, 12), 3));
  CHECK_FALSE(rq::multiplier_conjecture_applies(RQSpec::make(1, 3, 12), 3));
  CHECK_FALSE(rq::multiplier_conjecture_applies(RQSpec::make(1, 2, 5), 3));
}

TEST_CASE("tau scan for (1,4,17)") {
  TauTable t(RQSpec::make(1, 4, 17));
  auto scan = rq::tau_relation_scan(t, 17, 289);
  auto basis = coeffs_of(scan);
  CHECK(scan.dropped.empty());
  CHECK(rq::in_span(basis, relation(17, {{1, -4}, {4, 3}, {16, 1}})));
  CHECK(rq::in_span(basis, relation(17, {{1, -4}, {2, 4}, {4, -1}, {8, 1}})));
  for (const auto& r : scan.relations) {
    CHECK(r.status == "re-verified");
    CHECK(r.verified_to == 4 * 289);
    CHECK(r.coeffs == rq::canonical_relation(r.coeffs));
    CHECK_FALSE(rq::first_relation_violation(t, r.coeffs, 1, 4 * 289));
  }
}

TEST_CASE("tau scan for (1,2,5) contains tau(5n) = tau(n)") {
  TauTable t(RQSpec::make(1, 2, 5));
  auto scan = rq::tau_relation_scan(t, 5, 25);
  CHECK(rq::in_span(coeffs_of(scan), relation(5, {{1, 1}, {5, -1}})));
}

TEST_CASE("tau scan for (1,5,26)") {
  TauTable t(RQSpec::make(1, 5, 26));
  auto scan = rq::tau_relation_scan(t, 25, 676);
  auto basis = coeffs_of(scan);
  CHECK(rq::in_span(basis, relation(25, {{1, -5}, {5, 4}, {25, 1}})));

  // The other four displayed relations for this spec fail on small n; the
  // scan must not contain them.
  const std::vector<IntegerVector> printed = {
      relation(25, {{1, -1}, {3, 1}, {5, -1}, {15, 1}}),
      relation(25, {{1, -26}, {3, -187}, {7, 187}, {11, -51}, {17, 77}}),
      relation(25, {{1, -134}, {3, 209}, {7, -209}, {11, 57}, {19, 77}}),
      relation(25, {{1, -34}, {11, 23}, {23, 11}}),
  };
  for (const auto& v : printed) {
    CHECK_FALSE(rq::in_span(basis, v));
    auto bad = rq::first_relation_violation(t, v, 1, 676);
    REQUIRE(bad);
    MESSAGE("first violation at n = " << *bad);
  }
}

TEST_CASE("canonical relations") {
  CHECK(rq::canonical_relation({0, -4, 6}) == IntegerVector{0, 2, -3});
  CHECK(rq::canonical_relation({3, 0}) == IntegerVector{1, 0});
}

TEST_CASE("relation records") {
  TauTable t(RQSpec::make(1, 2, 5));
  auto scan = rq::tau_relation_scan(t, 5, 25);
  REQUIRE_FALSE(scan.relations.empty());
  auto j = rq::relation_record(scan, scan.relations.front());
  CHECK(j.at("spec") == "1,2,5");
  CHECK(j.at("J") == 5);
  CHECK(j.at("n_max") == 25);
  CHECK(j.at("coefficients").size() == 5);
  CHECK(j.at("status") == "re-verified");
}

TEST_CASE("character decompositions") {
  auto d = rq::decompose_character(RQSpec::make(2, 6, 12), 12);
  REQUIRE(d);
  rq::DivisorCombination want{{2, 1}, {4, -1}, {6, -2}, {12, 2}};
  CHECK(*d == want);

  CHECK_FALSE(rq::decompose_character(RQSpec::make(1, 3, 5), 5));

  for (long g : {2L, 3L, 5L, 7L, 11L}) {
    std::vector<int> values(g, 1);
    values[g - 1] = 0;  // n = g
    auto c = rq::decompose_periodic(values, g);
    REQUIRE(c);
    CHECK(*c == rq::DivisorCombination{{1, 1}, {g, -1}});
  }
}

TEST_CASE("decompositions reproduce chi on a period") {
  for (long p = 3; p <= 24; ++p)
    for (long a = 1; a < p; ++a)
      for (long b = 1; b < p; ++b) {
        if (a == b || a == p - b) continue;
        auto s = RQSpec::make(a, b, p);
        auto d = rq::decompose_character(s, p);
        if (!d) continue;
        for (long n = 1; n <= p; ++n) {
          rq::Integer sum = 0;
          for (const auto& [div, c] : *d)
            if (n % div == 0) sum += c;
          REQUIRE(sum == rq::residue_character(s, n));
        }
      }
}
