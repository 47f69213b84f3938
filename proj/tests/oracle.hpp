#pragma once
// Brute-force reference computations kept apart from the library code paths.

#include "rq/series.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using rq::Integer;
using rq::Rational;

// Coefficients 0..n of prod (1 - q^e)^k over (e, k), by repeated
// multiplication with (1 - q^e) or with the geometric series 1/(1 - q^e).
inline std::vector<Integer> expand_product(const std::vector<std::pair<long, long>>& factors, long n) {
  std::vector<Integer> c(n + 1, 0);
  c[0] = 1;
  for (auto [e, k] : factors) {
    if (e > n) continue;
    for (long rep = 0; rep < (k < 0 ? -k : k); ++rep) {
      if (k > 0) {
        for (long i = n; i >= e; --i) c[i] -= c[i - e];
      } else {
        for (long i = e; i <= n; ++i) c[i] += c[i - e];
      }
    }
  }
  return c;
}

// Factors of [a,p;q] = (q^a;q^p)(q^(p-a);q^p) with exponents <= n.
inline void add_agile(std::vector<std::pair<long, long>>& f, long a, long p, long power, long n) {
  for (long e = a; e <= n; e += p) f.push_back({e, power});
  for (long e = p - a; e <= n; e += p) f.push_back({e, power});
}

// sum_{d | n} chi(d) d with chi read from a table of one period.
inline std::int64_t divisor_sum(const std::vector<int>& chi_period, long n) {
  long p = static_cast<long>(chi_period.size());
  std::int64_t s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += chi_period[d % p] * d;
  return s;
}

// Random series with small rational coefficients on the lattice 1/denom.
inline rq::FormalSeries random_series(std::mt19937& rng, std::int64_t denom, long terms, bool unit_constant) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(terms);
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  if (unit_constant) c[0] = 1;
  Rational order(terms - 1, denom);
  order.canonicalize();
  return rq::FormalSeries::from_lattice(denom, 0, c, order);
}

}  // namespace oracle
