#include "rq/quantities.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rq {

namespace {

Rational max_q(const Rational& a, const Rational& b) { return a < b ? b : a; }

FormalSeries series_from_integers(const std::vector<Integer>& c, const Rational& order) {
  std::vector<Rational> r(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) r[k] = Rational(c[k]);
  return FormalSeries::from_lattice(1, 0, std::move(r), order);
}

}  // namespace

FormalSeries agile_series(const Rational& a_exp, const Rational& p_exp, const Rational& order) {
  if (sgn(a_exp) <= 0 || a_exp >= p_exp) throw std::invalid_argument("agile needs 0 < a < p");
  return pochhammer_inf(a_exp, p_exp, order) * pochhammer_inf(p_exp - a_exp, p_exp, order);
}

Rational agile_weight(const Rational& a_exp, const Rational& p_exp) {
  Rational w = p_exp / 12 - a_exp / 2 + a_exp * a_exp / (2 * p_exp);
  w.canonicalize();
  return w;
}

FormalSeries weighted_agile_series(const Rational& a_exp, const Rational& p_exp, const Rational& order) {
  const Rational w = agile_weight(a_exp, p_exp);
  return agile_series(a_exp, p_exp, max_q(order - w, Rational(0))).shifted(w).truncated(order);
}

FormalSeries rq_star_series(const RQSpec& spec, const Rational& order) {
  const Rational o = max_q(order, Rational(0));
  return agile_series(spec.a, spec.p, o) / agile_series(spec.b, spec.p, o);
}

FormalSeries rq_series(const RQSpec& spec, const Rational& order) {
  const Rational Q = spec.Q();
  if (order < Q) return FormalSeries::zero(order);
  return rq_star_series(spec, order - Q).shifted(Q);
}

FormalSeries product_over_X(const RQSpec& spec, long order) {
  const TauTable table(spec);
  if (order < 0) return FormalSeries::zero(order);
  std::vector<Integer> c(static_cast<std::size_t>(order + 1));
  c[0] = 1;
  for (long n = 1; n <= order; ++n) {
    const int x = table.chi(n);
    if (x == 1) {
      for (long k = order; k >= n; --k) c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - n)];
    } else if (x == -1) {
      for (long k = n; k <= order; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - n)];
    }
  }
  return series_from_integers(c, order);
}

FormalSeries log_rq_series(const RQSpec& spec, long order) {
  const TauTable table(spec);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0L) + 1));
  for (long n = 1; n <= order; ++n) {
    Rational x{Integer(-table.tau(n)), Integer(n)};
    x.canonicalize();
    c[static_cast<std::size_t>(n)] = x;
  }
  return FormalSeries::from_lattice(1, 0, std::move(c), order);
}

FormalSeries m_series(const RQSpec& spec, long order) {
  const TauTable table(spec);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0L) + 1));
  c[0] = spec.Q();
  for (long n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = Rational(-table.tau(n));
  return FormalSeries::from_lattice(1, 0, std::move(c), order);
}

FormalSeries rq_at_negative_q_abs(const RQSpec& spec, const Rational& order) {
  if (!spec.is_integer()) throw std::invalid_argument("R(-q) needs an integer spec");
  const Rational Q = spec.Q();
  return rq_star_series(spec, max_q(order - Q, Rational(0))).negated_q().shifted(Q).truncated(order);
}

FormalSeries eta_series(EtaKind kind, long order) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  if (kind == EtaKind::f_minus_q) return pochhammer_inf(1, 1, order);
  std::vector<Integer> c(static_cast<std::size_t>(order + 1));
  for (long d = 1; d <= order; ++d)
    for (long m = d; m <= order; m += d) c[static_cast<std::size_t>(m)] += d;
  return series_from_integers(c, order);
}

FormalSeries eisenstein_L(long order) {
  return FormalSeries::constant(1, order) - eta_series(EtaKind::L1, order).scaled(24);
}

FormalSeries odd_product(long m, const Rational& order) {
  if (m < 1) throw std::invalid_argument("odd_product needs m >= 1");
  return pochhammer_inf(m, 2 * m, max_q(order, Rational(0)));
}

std::string EtaQuotient::to_string() const {
  std::ostringstream out;
  out << "q^(" << prefactor_exp.get_str() << ")";
  for (const auto& [m, e] : factors) out << " * f(-q^" << m << ")^" << e;
  return out.str();
}

FormalSeries eta_quotient_series(const EtaQuotient& eq, const Rational& order) {
  const Rational rel = max_q(order - eq.prefactor_exp, Rational(0));
  FormalSeries prod = FormalSeries::constant(1, rel);
  for (const auto& [m, e] : eq.factors) {
    if (m < 1) throw std::invalid_argument("eta quotient factor needs m >= 1");
    if (e == 0) continue;
    prod = prod * pow_int(pochhammer_inf(m, m, rel), e);
  }
  return prod.shifted(eq.prefactor_exp).truncated(order);
}

EtaQuotient eta_quotient_from(const DivisorCombination& comb, const Rational& prefactor) {
  EtaQuotient eq{prefactor, {}};
  for (const auto& [d, b] : comb) {
    if (!b.fits_slong_p()) throw std::overflow_error("eta exponent too large");
    if (sgn(b) != 0) eq.factors[d] = b.get_si();
  }
  return eq;
}

NormalizedSpec normalize_rational_spec(const RQSpec& spec) {
  const Integer a1 = spec.a.get_num(), a2 = spec.a.get_den();
  const Integer b1 = spec.b.get_num(), b2 = spec.b.get_den();
  const Integer p1 = spec.p.get_num(), p2 = spec.p.get_den();
  const Integer L = a2 * b2 * p2;
  Rational wa(a1 * b2 * p2), wb(b1 * a2 * p2), wp(p1 * a2 * b2);
  NormalizedSpec out{RQSpec::make(wa, wb, wp), Rational(1) / Rational(L), false};
  if (wa > wb) {
    out.spec = RQSpec::make(wb, wa, wp);
    out.inverted = true;
  }
  return out;
}

FormalSeries cf_series(const FormalCF& cf, const Rational& order) {
  if (sgn(cf.min_valuation) <= 0) throw std::invalid_argument("continued fraction needs positive numerator valuations");
  // Each partial numerator lifts the tail by at least its valuation; collect
  // them until the dropped tail lies beyond the order.
  std::vector<FormalSeries> nums;
  Rational reach = 0;
  for (long k = 1; reach <= order; ++k) {
    nums.push_back(cf.numerator(k, order));
    const Rational v = nums.back().is_zero() ? order + 1 : nums.back().lead_exponent();
    if (v < cf.min_valuation) throw std::domain_error("continued fraction numerator below declared valuation");
    reach += v;
    if (k > 100000) throw std::runtime_error("continued fraction depth cap reached");
  }
  FormalSeries tail = FormalSeries::zero(order + 1);
  for (std::size_t k = nums.size(); k-- > 0;) {
    // the last collected numerator only bounds the tail; it is not used.
    if (k + 1 == nums.size()) continue;
    tail = nums[k] / (cf.denominator(static_cast<long>(k + 1), order) + tail);
  }
  const FormalSeries K = cf.denominator(0, order) + tail;
  return (FormalSeries::constant(1, order) / K).truncated(order);
}

RQSpec theorem6_spec(long A, long B) {
  return RQSpec::make(Rational(5 * A + 3 * B), Rational(A + 3 * B), Rational(4 * (A + B)));
}

FormalSeries theorem6_series(long A, long B, const Rational& order) {
  if (A < 1 || B < 1 || A == B) throw std::invalid_argument("theorem6 needs positive A != B");
  const Rational o = order + 2 * (A + B);
  auto mono = [&](long c, long e) { return FormalSeries::monomial(c, e, o); };
  const FormalSeries one = FormalSeries::constant(1, o);
  const FormalSeries one_minus_xy = one - mono(1, A + B);
  FormalCF cf;
  cf.min_valuation = A + B;
  cf.numerator = [=](long k, const Rational&) {
    const long zk = (2 * k - 1) * (A + B);
    return (mono(1, A) - mono(1, B + zk)) * (mono(1, B) - mono(1, A + zk));
  };
  cf.denominator = [=](long k, const Rational&) {
    if (k == 0) return one_minus_xy;
    return one_minus_xy * (one + mono(1, 2 * k * (A + B)));
  };
  const FormalSeries P = cf_series(cf, o);
  const Rational shift = B - A;
  // (1 - q^(B-A)) P
  const FormalSeries factor = shift > 0 ? one - mono(1, B - A)
                                        : FormalSeries::from_terms({{0, 1}, {shift, -1}}, o);
  return (factor * P).truncated(order);
}

FormalSeries octic_cf_series(long m, const Rational& order) {
  if (m < 1) throw std::invalid_argument("octic fraction needs m >= 1");
  const Rational o = order / m + 4;
  auto mono = [&](long e) { return FormalSeries::monomial(1, e, o); };
  FormalCF cf;
  cf.min_valuation = 1;
  // numerators after (1+q): q^2, q+q^3, q^4, q^3+q^5, ...
  cf.numerator = [=](long k, const Rational&) {
    const long j = (k + 1) / 2;
    if (k % 2 == 1) return mono(2 * j);
    return mono(2 * j - 1) + mono(2 * j + 1);
  };
  cf.denominator = [=](long, const Rational&) { return FormalSeries::constant(1, o); };
  const FormalSeries inner = cf_series(cf, o);
  // cf_series returns 1/(1 + ...); the fraction is (1+q) times that.
  const FormalSeries value = (FormalSeries::constant(1, o) + mono(1)) * inner;
  return substitute_power(value, m).truncated(order);
}

}  // namespace rq
