#include "rq/quantities.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace rq {

namespace {

using Order = Rational;

Rational half_up(const Rational& x) { return x < 0 ? Rational(0) : x; }

FormalSeries R(long a, long b, long p, const Order& o) { return rq_series(RQSpec::make(a, b, p), o); }

// R(a,b,p; q^m)
FormalSeries Rm(long a, long b, long p, long m, const Order& o) {
  return substitute_power(rq_series(RQSpec::make(a, b, p), o / m), m);
}

FormalSeries f(long m, const Order& o) { return pochhammer_inf(m, m, half_up(o)); }

FormalSeries agile(long a, long p, const Order& o) { return agile_series(a, p, half_up(o)); }

// X(-q^m)^2 = [1,2; q^m]
FormalSeries X2(long m, const Order& o) { return agile_series(m, 2 * m, half_up(o)); }

// weighted agile at q^m
FormalSeries wag(long a, long p, long m, const Order& o) {
  return substitute_power(weighted_agile_series(a, p, o / m), m);
}

FormalSeries one(const Order& o) { return FormalSeries::constant(1, o); }

// sum_{n in Z} (-1)^n q^(A n^2 + B n), A > 0, |B| <= A.
FormalSeries theta_sum(long A, long B, const Order& o) {
  std::vector<Term> terms;
  std::map<long, Integer> acc;
  for (long n = -1000; n <= 1000; ++n) {
    const long e = A * n * n + B * n;
    if (Rational(e) > o) continue;
    acc[e] += (n % 2 == 0) ? 1 : -1;
  }
  for (const auto& [e, c] : acc)
    if (sgn(c) != 0) terms.push_back({Rational(e), Rational(c)});
  return FormalSeries::from_terms(terms, o);
}

struct Mono {
  long i, j;
  long c;
};

// sum c x^i y^j
FormalSeries poly(const std::vector<Mono>& p, const FormalSeries& x, const FormalSeries& y) {
  std::map<long, FormalSeries> xp, yp;
  auto power = [](std::map<long, FormalSeries>& cache, const FormalSeries& s, long k) -> const FormalSeries& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, pow_int(s, k)).first;
    return it->second;
  };
  FormalSeries sum;
  bool first = true;
  for (const auto& m : p) {
    FormalSeries t = (power(xp, x, m.i) * power(yp, y, m.j)).scaled(m.c);
    sum = first ? t : sum + t;
    first = false;
  }
  return sum;
}

// f(-q) f(-q^10) / (f(-q^2) f(-q^5))
FormalSeries F10(const Order& o) { return f(1, o) * f(10, o) / (f(2, o) * f(5, o)); }

// R(q) R(q^2)
FormalSeries RR2(const Order& o) { return R(1, 2, 5, o) * Rm(1, 2, 5, 2, o); }

std::vector<IdentityRecord> build_registry() {
  std::vector<IdentityRecord> reg;
  auto add = [&](std::string id, std::string eq, std::string statement, PaperStatus st, std::string note,
                 std::function<FormalSeries(const Order&)> residual,
                 std::function<FormalSeries(const Order&)> printed = nullptr) {
    IdentityRecord r;
    r.id = std::move(id);
    r.paper_eq = std::move(eq);
    r.statement = std::move(statement);
    r.paper_status = st;
    r.note = std::move(note);
    r.residual = std::move(residual);
    r.printed_residual = std::move(printed);
    reg.push_back(std::move(r));
  };
  const auto proved = PaperStatus::proved;
  const auto open = PaperStatus::conjectured;

  // Continued-fraction expansions of R*.
  add("cf_theorem6_A1_B2", "28", "R*(11,7,12;q) = (1-q) P(q, q^2, q^3)", proved, "",
      [](const Order& o) { return rq_star_series(theorem6_spec(1, 2), o) - theorem6_series(1, 2, o); });
  add("cf_theorem6_A1_B3", "28", "R*(14,10,16;q) = (1-q^2) P(q, q^3, q^4)", proved, "",
      [](const Order& o) { return rq_star_series(theorem6_spec(1, 3), o) - theorem6_series(1, 3, o); });

  // Root-of-unity product, compared on logarithms: log R*(q^p) = p * (p-section of log R*).
  for (auto [a, b, p] : {std::tuple{1L, 2L, 5L}, std::tuple{1L, 3L, 7L}, std::tuple{2L, 3L, 11L}}) {
    add("root_of_unity_product_" + std::to_string(a) + "_" + std::to_string(b) + "_" + std::to_string(p), "36",
        "R(a,b,p;q^p) = prod_m R(a,b,p; e^(2 pi i m/p) q), on logarithms", proved,
        "compared as log R*(q^p) = p * sum_{p | n} c_n q^n with c_n the log R* coefficients",
        [a, b, p](const Order& o) {
          const auto spec = RQSpec::make(a, b, p);
          const long n = floor(o).get_si();
          const FormalSeries L = log_rq_series(spec, n);
          const FormalSeries lhs = substitute_power(log_rq_series(spec, n / p + 1), p).truncated(o);
          std::vector<Term> t;
          for (const auto& term : L.terms())
            if (term.exponent.get_den() == 1 && term.exponent.get_num() % p == 0)
              t.push_back({term.exponent, term.coeff * p});
          return lhs - FormalSeries::from_terms(t, L.order());
        });
  }

  add("rr_times_rr_squared_argument", "106", "R(q) R(q^2) = R(1,3,10;q)", proved,
      "the paper marks this with '?'; proved-list membership follows the acceptance classification",
      [](const Order& o) { return RR2(o) - R(1, 3, 10, o); });
  add("agile_quotient_1_3_10", "111", "q^(3/5) [1,10;q]/[3,10;q] = R(q) R(q^2)", proved, "",
      [](const Order& o) { return (agile(1, 10, o) / agile(3, 10, o)).shifted(Rational(3, 5)) - RR2(o); });
  add("agile_product_1_3_10", "112", "[1,10;q][3,10;q] = f(-q)f(-q^10)/(f(-q^2)f(-q^5))", proved, "",
      [](const Order& o) { return agile(1, 10, o) * agile(3, 10, o) - F10(o); });
  add("eta_form_1_2_6", "116", "R(1,2,6;q) = q^(1/4) f(-q)f(-q^6)^2/(f(-q^2)^2 f(-q^3))", proved, "",
      [](const Order& o) {
        return R(1, 2, 6, o) - (f(1, o) * pow_int(f(6, o), 2) / (pow_int(f(2, o), 2) * f(3, o))).shifted(Rational(1, 4));
      });
  add("octic_fraction_eta", "117", "q^(1/8)/R(1,2,4;q) = f(-q^2) X(-q^2)^2 / f(-q)", proved,
      "X(-q)^2 expanded as the agile [1,2;q]", [](const Order& o) {
        return one(o + 1).shifted(Rational(1, 8)) / R(1, 2, 4, o + 1) - f(2, o) * X2(2, o) / f(1, o);
      });
  add("octic_fraction_expansion", "117", "q^(1/8)/R(1,2,4;q) = (1+q)/(1+ q^2/(1+ (q+q^3)/(1+ q^4/(1+ (q^3+q^5)/...))))",
      proved,
      "the printed fraction agrees through q^8 only; after q^4 no partial numerator of positive valuation continues "
      "the expansion, so no reading of the pattern repairs it",
      [](const Order& o) { return octic_cf_series(1, o) - one(o + 1).shifted(Rational(1, 8)) / R(1, 2, 4, o + 1); });
  add("eta_form_cubic", "118", "R(1,3,6;q) = q^(1/3) f(-q)f(-q^6)/(f(-q^2)f(-q^3)X(-q^3)^2)", proved, "",
      [](const Order& o) {
        return R(1, 3, 6, o) - (f(1, o) * f(6, o) / (f(2, o) * f(3, o) * X2(3, o))).shifted(Rational(1, 3));
      });
  add("eta_form_2_3_6", "119", "R(2,3,6;q) = q^(1/12) f(-q^2)/(f(-q^6) X(-q^3)^2)", proved, "",
      [](const Order& o) {
        return R(2, 3, 6, o) - (f(2, o) / (f(6, o) * X2(3, o))).shifted(Rational(1, 12));
      });

  // Squares of the modulus-10 quantities; the printed right-hand sides lack the q-power.
  const auto tenth = [](const Order& o) { return f(1, o) * pow_int(f(10, o), 2) / (pow_int(f(2, o), 2) * f(5, o)); };
  add("square_1_2_10", "120", "R(1,2,10;q)^2 = q^(1/2) f(-q)f(-q^10)^2 R(q)/(f(-q^2)^2 f(-q^5))", proved,
      "printed without q^(1/2); the leading exponents differ by 1/2",
      [tenth](const Order& o) { return pow_int(R(1, 2, 10, o), 2) - (tenth(o) * R(1, 2, 5, o)).shifted(Rational(1, 2)); },
      [tenth](const Order& o) { return pow_int(R(1, 2, 10, o), 2) - tenth(o) * R(1, 2, 5, o); });
  add("square_1_4_10", "121", "R(1,4,10;q)^2 = q^(1/2) f(-q)f(-q^10)^2 R(q)R(q^2)^2/(f(-q^2)^2 f(-q^5))", proved,
      "printed without q^(1/2); the leading exponents differ by 1/2",
      [tenth](const Order& o) {
        return pow_int(R(1, 4, 10, o), 2) -
               (tenth(o) * R(1, 2, 5, o) * pow_int(Rm(1, 2, 5, 2, o), 2)).shifted(Rational(1, 2));
      },
      [tenth](const Order& o) {
        return pow_int(R(1, 4, 10, o), 2) - tenth(o) * R(1, 2, 5, o) * pow_int(Rm(1, 2, 5, 2, o), 2);
      });
  add("square_2_3_10", "122", "R(2,3,10;q)^2 = q^(-1/2) f(-q^2)^2 f(-q^5) R(q)R(q^2)^2/(f(-q) f(-q^10)^2)", proved,
      "printed without q^(-1/2); the leading exponents differ by 1/2",
      [tenth](const Order& o) {
        return pow_int(R(2, 3, 10, o), 2) -
               (R(1, 2, 5, o + 1) * pow_int(Rm(1, 2, 5, 2, o + 1), 2) / tenth(o + 1)).shifted(Rational(-1, 2));
      },
      [tenth](const Order& o) {
        return pow_int(R(2, 3, 10, o), 2) - R(1, 2, 5, o) * pow_int(Rm(1, 2, 5, 2, o), 2) / tenth(o);
      });
  add("square_3_4_10", "123", "R(3,4,10;q)^2 = q^(1/2) f(-q)f(-q^10)^2/(f(-q^2)^2 f(-q^5) R(q))", proved,
      "printed without q^(1/2); the leading exponents differ by 1/2",
      [tenth](const Order& o) {
        return pow_int(R(3, 4, 10, o), 2) - (tenth(o + 1) / R(1, 2, 5, o + 1)).shifted(Rational(1, 2));
      },
      [tenth](const Order& o) { return pow_int(R(3, 4, 10, o), 2) - tenth(o + 1) / R(1, 2, 5, o + 1); });
  add("agile_1_10_root", "124", "[1,10;q] = q^(-3/10) sqrt(R(q)R(q^2) F), F = f(-q)f(-q^10)/(f(-q^2)f(-q^5))", proved,
      "checked squared", [](const Order& o) {
        return pow_int(agile(1, 10, o), 2) - (RR2(o + 1) * F10(o + 1)).shifted(Rational(-3, 5));
      });
  add("agile_3_10_root", "125", "[3,10;q] = q^(3/10) sqrt(F / (R(q)R(q^2)))", proved, "checked squared",
      [](const Order& o) { return pow_int(agile(3, 10, o), 2) - (F10(o) / RR2(o)).shifted(Rational(3, 5)); });
  add("quantity_1_5_10_root", "126", "R(1,5,10;q) = q^(1/2) X(-q^5)^(-2) sqrt(R(q)R(q^2) F)", proved,
      "printed with R(1,3,10) and [3,10] on the left; the right side equals q^(4/5)[1,10]/[5,10] = R(1,5,10). "
      "Checked squared",
      [](const Order& o) {
        return pow_int(R(1, 5, 10, o), 2) - (RR2(o) * F10(o) / pow_int(X2(5, o), 2)).shifted(1);
      },
      [](const Order& o) {
        return pow_int(R(1, 3, 10, o), 2) - (RR2(o) * F10(o) / pow_int(X2(5, o), 2)).shifted(1);
      });
  add("rr_fifth_root_eta", "127", "1/R(q) - 1 - R(q) = f(-q^(1/5))/(q^(1/5) f(-q^5))", proved, "",
      [](const Order& o) {
        const Order w = o + 1;
        const FormalSeries r = R(1, 2, 5, w);
        const FormalSeries lhs = one(w) / r - one(w) - r;
        const FormalSeries f5 = substitute_power(f(1, 5 * w), Rational(1, 5));
        return lhs - (f5 / f(5, w)).shifted(Rational(-1, 5));
      });
  add("rr_fifth_power_eta", "128", "1/R(q)^5 - 11 - R(q)^5 = f(-q)^6/(q f(-q^5)^6)", proved, "",
      [](const Order& o) {
        const Order w = o + 2;
        const FormalSeries r5 = pow_int(R(1, 2, 5, w), 5);
        return one(w) / r5 - one(w).scaled(11) - r5 - (pow_int(f(1, w) / f(5, w), 6)).shifted(-1);
      });
  add("weighted_agile_mod5", "129", "x^10 - y^10 + 11 x^5 y^5 + x^11 y^11 = 0, x = [1,5;q], y = [3,5;q]", proved,
      "agiles weighted by q^(p/12 - a/2 + a^2/(2p))",
      [](const Order& o) {
        const Order w = o + 4;
        return poly({{10, 0, 1}, {0, 10, -1}, {5, 5, 11}, {11, 11, 1}}, wag(1, 5, 1, w), wag(3, 5, 1, w));
      });

  add("weighted_agile_6_cubed", "130", "8x^9 - y^3 + x^12 y^3 + x^3 y^6 = 0, x = [1,6;q^3], y = [3,6;q]", open,
      "agiles weighted by q^(p/12 - a/2 + a^2/(2p))", [](const Order& o) {
        const Order w = o + 4;
        return poly({{9, 0, 8}, {0, 3, -1}, {12, 3, 1}, {3, 6, 1}}, wag(1, 6, 3, w), wag(3, 6, 1, w));
      });
  add("weighted_agile_6_squared", "131", "-9x^8 + y^4 + x^12 y^4 - x^4 y^8 = 0, x = [1,6;q^2], y = [2,6;q]", open,
      "agiles weighted by q^(p/12 - a/2 + a^2/(2p))", [](const Order& o) {
        const Order w = o + 4;
        return poly({{8, 0, -9}, {0, 4, 1}, {12, 4, 1}, {4, 8, -1}}, wag(1, 6, 2, w), wag(2, 6, 1, w));
      });
  add("weighted_agile_4", "132", "16x^8 + x^16 y^4 - y^8 = 0, x = [1,4;q], y = [2,4;q]", open,
      "agiles weighted by q^(p/12 - a/2 + a^2/(2p))", [](const Order& o) {
        const Order w = o + 4;
        return poly({{8, 0, 16}, {16, 4, 1}, {0, 8, -1}}, wag(1, 4, 1, w), wag(2, 4, 1, w));
      });
  add("octic_power_24", "133", "1/R(1,2,4;q)^16 - 16/R(1,2,4;q)^8 = q^(-2) X(-q^2)^24", open,
      "X(-q^2)^24 expanded as [1,2;q^2]^12", [](const Order& o) {
        const Order w = o + 4;
        const FormalSeries r8 = pow_int(R(1, 2, 4, w), 8);
        const FormalSeries inv8 = one(w) / r8;
        return inv8 * inv8 - inv8.scaled(16) - pow_int(X2(2, w), 12).shifted(-2);
      });
  add("weighted_agile_6", "134", "8x^3 - y^3 + x^12 y^3 + x^9 y^6 = 0, x = [1,6;q], y = [3,6;q]", open,
      "agiles weighted by q^(p/12 - a/2 + a^2/(2p))", [](const Order& o) {
        const Order w = o + 4;
        return poly({{3, 0, 8}, {0, 3, -1}, {12, 3, 1}, {9, 6, 1}}, wag(1, 6, 1, w), wag(3, 6, 1, w));
      });
  add("cubic_power_24", "135", "(1 - 8V^3)/(V^9 (1 + V^3)) = q^(-3) X(-q^3)^24, V = R(1,3,6;q)", open,
      "X(-q^3)^24 expanded as [1,2;q^3]^12", [](const Order& o) {
        const Order w = o + 6;
        const FormalSeries v = R(1, 3, 6, w);
        const FormalSeries v3 = pow_int(v, 3);
        const FormalSeries lhs = (one(w) - v3.scaled(8)) / (pow_int(v, 9) * (one(w) + v3));
        return lhs - pow_int(X2(3, w), 12).shifted(-3);
      });

  add("rr_1_3_10_cross", "102", "u^3 - uv + u^2 v^3 + v^4 = 0, u = R(1,3,10;q), v = R(q)", open, "",
      [](const Order& o) {
        const Order w = o + 2;
        return poly({{3, 0, 1}, {1, 1, -1}, {2, 3, 1}, {0, 4, 1}}, R(1, 3, 10, w), R(1, 2, 5, w));
      });
  add("rr_1_3_10_negative_argument", "104", "u(q) |u(-q)| = u(q^2), u = R(1,3,10;q)", open,
      "|u(-q)| taken as q^Q R*(-q), positive for small q > 0", [](const Order& o) {
        const auto spec = RQSpec::make(1, 3, 10);
        return R(1, 3, 10, o) * rq_at_negative_q_abs(spec, o) - Rm(1, 3, 10, 2, o);
      });
  add("rr_negative_argument", "105", "-v + (-1)^(1/5) v' - ... - (-1)^(1/5) v^5 v'^6 = 0, v = R(q), v' = |R(-q)|",
      open,
      "the complex coefficients collapse to integers when v' is read as R(-q) = e^(-i pi/5) |R(-q)|: "
      "-v + w - v^5 w + 5v^4 w^2 - 10v^3 w^3 + 5v^2 w^4 - v w^5 - v^6 w^5 + v^5 w^6 with w = |R(-q)|",
      [](const Order& o) {
        const Order w = o + 2;
        const auto spec = RQSpec::make(1, 2, 5);
        return poly({{1, 0, -1},
                     {0, 1, 1},
                     {5, 1, -1},
                     {4, 2, 5},
                     {3, 3, -10},
                     {2, 4, 5},
                     {1, 5, -1},
                     {6, 5, -1},
                     {5, 6, 1}},
                    R(1, 2, 5, w), rq_at_negative_q_abs(spec, w));
      });
  add("doubling_log_derivative_1_3_8", "40", "2M(q^2) = M(q) + M(-q), spec (1,3,8)", open, "",
      [](const Order& o) {
        const auto spec = RQSpec::make(1, 3, 8);
        const long n = floor(o).get_si();
        const FormalSeries m = m_series(spec, n);
        return substitute_power(m_series(spec, n / 2 + 1), 2).scaled(2).truncated(o) - m - m.negated_q();
      });
  add("doubling_quantity_1_3_8", "41", "R(q^2) = R(q) |R(-q)|, spec (1,3,8)", open,
      "|R(-q)| taken as q^Q R*(-q)", [](const Order& o) {
        const auto spec = RQSpec::make(1, 3, 8);
        return Rm(1, 3, 8, 2, o) - R(1, 3, 8, o) * rq_at_negative_q_abs(spec, o);
      });

  // Further displayed relations without equation numbers.
  add("theta_sum_1_3_10", "", "R(1,3,10;q) = q^(3/5) f(-q^2)f(-q^5)/(f(-q)f(-q^10)^3) (sum (-1)^n q^(5n^2+4n))^2",
      proved, "", [](const Order& o) {
        const FormalSeries s = theta_sum(5, 4, o);
        return R(1, 3, 10, o) -
               (f(2, o) * f(5, o) / (f(1, o) * pow_int(f(10, o), 3)) * s * s).shifted(Rational(3, 5));
      });
  add("theta_sum_1_2_8", "", "R(1,2,8;q) = q^(5/16) f(-q)f(-q^4)f(-q^8)/f(-q^2)^2 / sum (-1)^n q^(4n^2+n)", proved,
      "", [](const Order& o) {
        return R(1, 2, 8, o) -
               (f(1, o) * f(4, o) * f(8, o) / (pow_int(f(2, o), 2) * theta_sum(4, 1, o))).shifted(Rational(5, 16));
      });
  add("half_period_product_7", "", "[1,7;q][2,7;q][3,7;q] = f(-q)/f(-q^7)", proved, "",
      [](const Order& o) { return agile(1, 7, o) * agile(2, 7, o) * agile(3, 7, o) - f(1, o) / f(7, o); });
  add("character_example_14", "", "[1,14;q][3,14;q][5,14;q] = f(-q)f(-q^14)/(f(-q^2)f(-q^7))", open, "",
      [](const Order& o) {
        return agile(1, 14, o) * agile(3, 14, o) * agile(5, 14, o) - f(1, o) * f(14, o) / (f(2, o) * f(7, o));
      });
  add("rr_modular_degree_2", "", "(y - v^2)/(y + v^2) = v y^2, v = R(q), y = R(q^2)", proved,
      "checked as y - v^2 - v y^3 - v^3 y^2 = 0", [](const Order& o) {
        const Order w = o + 2;
        return poly({{0, 1, 1}, {2, 0, -1}, {1, 3, -1}, {3, 2, -1}}, R(1, 2, 5, w), Rm(1, 2, 5, 2, w));
      });
  add("octic_gollnitz_cross", "", "-u + v + 2u^2 v - u v^2 = 0, u = R(1,2,4;q^8), v = R(1,3,8;q^2)", open, "",
      [](const Order& o) {
        const Order w = o + 4;
        return poly({{1, 0, -1}, {0, 1, 1}, {2, 1, 2}, {1, 2, -1}}, Rm(1, 2, 4, 8, w), Rm(1, 3, 8, 2, w));
      });
  add("cubic_cross_1_3_12", "", "u^3 - uv + v^3 + u v^4 = 0, u = R(1,3,6;q^3), v = R(1,3,12;q^3)", open, "",
      [](const Order& o) {
        const Order w = o + 4;
        return poly({{3, 0, 1}, {1, 1, -1}, {0, 3, 1}, {1, 4, 1}}, Rm(1, 3, 6, 3, w), Rm(1, 3, 12, 3, w));
      });
  add("cubic_cross_1_3_12_degree_17", "",
      "u^8 + u^11 v - u^7 v^2 - u^3 v^3 - u^10 v^3 + u^6 v^4 + 3u^2 v^5 - u^9 v^5 + 5u^5 v^6 - 3u v^7 + u^8 v^7 + "
      "2u^4 v^8 + v^9 = 0, same u, v",
      open, "", [](const Order& o) {
        const Order w = o + 8;
        return poly({{8, 0, 1},
                     {11, 1, 1},
                     {7, 2, -1},
                     {3, 3, -1},
                     {10, 3, -1},
                     {6, 4, 1},
                     {2, 5, 3},
                     {9, 5, -1},
                     {5, 6, 5},
                     {1, 7, -3},
                     {8, 7, 1},
                     {4, 8, 2},
                     {0, 9, 1}},
                    Rm(1, 3, 6, 3, w), Rm(1, 3, 12, 3, w));
      });
  add("heptagonal_cross_uv", "", "u + u^3 v - v^3 = 0, u = R(1,3,7;q), v = R(2,3,7;q)", open, "",
      [](const Order& o) {
        const Order w = o + 2;
        return poly({{1, 0, 1}, {3, 1, 1}, {0, 3, -1}}, R(1, 3, 7, w), R(2, 3, 7, w));
      });
  add("heptagonal_cross_uw", "", "-u^2 + u^3 w^2 + w^3 = 0, u = R(1,3,7;q), w = R(1,2,7;q)", open, "",
      [](const Order& o) {
        const Order w = o + 2;
        return poly({{2, 0, -1}, {3, 2, 1}, {0, 3, 1}}, R(1, 3, 7, w), R(1, 2, 7, w));
      });
  return reg;
}

}  // namespace

const std::vector<IdentityRecord>& identity_registry() {
  static const std::vector<IdentityRecord> reg = build_registry();
  return reg;
}

namespace {

// Residual to at least `order`, widening the build order if truncation eats into it.
FormalSeries residual_to(const std::function<FormalSeries(const Order&)>& build, const Rational& order) {
  Rational margin = 0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    FormalSeries r = build(order + margin);
    if (r.order() >= order) return r.truncated(order);
    margin += (order - r.order()) + 1;
  }
  throw std::runtime_error("identity residual cannot reach the requested order");
}

}  // namespace

IdentityOutcome verify_identity(const IdentityRecord& rec, const Rational& order) {
  IdentityOutcome out{rec.id, rec.paper_eq, rec.paper_status, false, order, std::nullopt, rec.note, std::nullopt};
  const FormalSeries r = residual_to(rec.residual, order);
  if (r.is_zero()) {
    out.verified = true;
  } else {
    out.first_failure_exponent = r.lead_exponent();
    out.verified_order = r.lead_exponent();
  }
  if (rec.printed_residual) {
    const FormalSeries p = residual_to(rec.printed_residual, order);
    out.printed_first_failure = p.is_zero() ? std::optional<Rational>() : std::optional<Rational>(p.lead_exponent());
    out.printed_checked = true;
  }
  return out;
}

std::string to_string(PaperStatus s) { return s == PaperStatus::proved ? "paper-proved" : "paper-conjectured"; }

nlohmann::json to_json(const IdentityOutcome& o) {
  nlohmann::json j{{"id", o.id},
                   {"paper_eq", o.paper_eq.empty() ? nlohmann::json(nullptr) : nlohmann::json(o.paper_eq)},
                   {"paper_status", to_string(o.paper_status)},
                   {"status", o.verified ? "verified-here" : "failed"},
                   {"verified_order", o.verified ? nlohmann::json(o.verified_order.get_str()) : nlohmann::json(nullptr)}};
  if (o.first_failure_exponent) j["first_failure_exponent"] = o.first_failure_exponent->get_str();
  if (!o.note.empty()) j["note"] = o.note;
  if (o.printed_checked) {
    j["printed_form"] = o.printed_first_failure
                            ? nlohmann::json{{"status", "failed"}, {"first_failure_exponent", o.printed_first_failure->get_str()}}
                            : nlohmann::json{{"status", "verified-here"}};
  }
  return j;
}

}  // namespace rq
