#include "rq/series.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rq {

namespace {

std::int64_t to_i64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw std::overflow_error(std::string("exponent lattice overflow: ") + what);
  return z.get_si();
}

Integer floor_times(const Rational& x, std::int64_t d) {
  Rational y = x * Rational(d);
  return floor(y);
}

bool is_integral(const Rational& x) { return x.get_den() == 1; }

Rational frac(std::int64_t n, std::int64_t d) {
  Rational r{Integer(static_cast<long>(n)), Integer(static_cast<long>(d))};
  r.canonicalize();
  return r;
}

// Dense product on one lattice; result indices [0, n].
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b,
                               std::size_t n) {
  std::vector<std::size_t> nz_a, nz_b;
  for (std::size_t i = 0; i < a.size() && i <= n; ++i)
    if (sgn(a[i]) != 0) nz_a.push_back(i);
  for (std::size_t j = 0; j < b.size() && j <= n; ++j)
    if (sgn(b[j]) != 0) nz_b.push_back(j);

  const bool integral = std::all_of(nz_a.begin(), nz_a.end(), [&](std::size_t i) { return is_integral(a[i]); }) &&
                        std::all_of(nz_b.begin(), nz_b.end(), [&](std::size_t j) { return is_integral(b[j]); });
  std::vector<Rational> out(n + 1);
  if (integral) {
    // mpz accumulation skips the gcd normalisation of mpq on every step.
    std::vector<Integer> acc(n + 1);
    for (std::size_t i : nz_a) {
      const mpz_srcptr ai = a[i].get_num_mpz_t();
      for (std::size_t j : nz_b) {
        if (i + j > n) break;
        mpz_addmul(acc[i + j].get_mpz_t(), ai, b[j].get_num_mpz_t());
      }
    }
    for (std::size_t k = 0; k <= n; ++k) out[k] = Rational(acc[k]);
    return out;
  }
  for (std::size_t i : nz_a) {
    for (std::size_t j : nz_b) {
      if (i + j > n) break;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Inverse of a series with nonzero constant term, indices [0, n].
std::vector<Rational> unit_inverse(const std::vector<Rational>& b, std::size_t n) {
  std::vector<Rational> c(n + 1);
  const Rational b0 = b.at(0);
  std::vector<std::size_t> nz;
  for (std::size_t k = 1; k < b.size() && k <= n; ++k)
    if (sgn(b[k]) != 0) nz.push_back(k);
  const bool integral = (b0 == 1 || b0 == -1) &&
                        std::all_of(nz.begin(), nz.end(), [&](std::size_t k) { return is_integral(b[k]); });
  if (integral) {
    std::vector<Integer> z(n + 1);
    z[0] = b0.get_num();
    for (std::size_t m = 1; m <= n; ++m) {
      Integer s;
      for (std::size_t k : nz) {
        if (k > m) break;
        mpz_addmul(s.get_mpz_t(), b[k].get_num_mpz_t(), z[m - k].get_mpz_t());
      }
      z[m] = b0 == 1 ? Integer(-s) : s;
    }
    for (std::size_t m = 0; m <= n; ++m) c[m] = Rational(z[m]);
    return c;
  }
  c[0] = 1 / b0;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s;
    for (std::size_t k : nz) {
      if (k > m) break;
      s += b[k] * c[m - k];
    }
    c[m] = -s / b0;
  }
  return c;
}

}  // namespace

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Rational r{Integer(num), Integer(den)};
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), Integer(static_cast<long>(a)).get_mpz_t(), Integer(static_cast<long>(b)).get_mpz_t());
  if (l > Integer(static_cast<long>(std::numeric_limits<std::int32_t>::max())))
    throw std::overflow_error("exponent lattice overflow: lcm(" + std::to_string(a) + ", " + std::to_string(b) + ")");
  return l.get_si();
}

FormalSeries::FormalSeries() : order_(0) {}

FormalSeries FormalSeries::zero(const Rational& order) {
  FormalSeries s;
  s.order_ = order;
  return s;
}

FormalSeries FormalSeries::constant(const Rational& c, const Rational& order) {
  return monomial(c, Rational(0), order);
}

FormalSeries FormalSeries::monomial(const Rational& coeff, const Rational& exponent, const Rational& order) {
  if (order < exponent || sgn(coeff) == 0) return zero(order);
  return from_terms({{exponent, coeff}}, order);
}

FormalSeries FormalSeries::from_terms(const std::vector<Term>& terms, const Rational& order) {
  if (terms.empty()) return zero(order);
  std::int64_t d = 1;
  Rational lowest = terms.front().exponent;
  for (const auto& t : terms) {
    d = checked_lcm(d, to_i64(t.exponent.get_den(), "exponent denominator"));
    lowest = std::min(lowest, t.exponent);
  }
  if (order < lowest) throw std::invalid_argument("truncation order below every exponent");
  const std::int64_t lead = to_i64(Integer(lowest.get_num() * (d / lowest.get_den())), "lead");
  const std::int64_t top = to_i64(floor_times(order, d), "order");
  std::vector<Rational> c(static_cast<std::size_t>(top - lead + 1));
  std::vector<bool> seen(c.size(), false);
  for (const auto& t : terms) {
    if (t.exponent > order) throw std::invalid_argument("term exponent above truncation order");
    const std::int64_t k = to_i64(Integer(t.exponent.get_num() * (d / t.exponent.get_den())), "exponent") - lead;
    if (seen[static_cast<std::size_t>(k)])
      throw std::invalid_argument("duplicate exponent " + t.exponent.get_str());
    seen[static_cast<std::size_t>(k)] = true;
    c[static_cast<std::size_t>(k)] = t.coeff;
  }
  return from_lattice(d, lead, std::move(c), order);
}

FormalSeries FormalSeries::from_lattice(std::int64_t denom, std::int64_t lead, std::vector<Rational> coeffs,
                                        const Rational& order) {
  if (denom <= 0) throw std::invalid_argument("lattice denominator must be positive");
  FormalSeries s;
  s.denom_ = denom;
  s.lead_ = lead;
  s.order_ = order;
  const Integer top = floor_times(order, denom);
  const Integer want = top - lead + 1;
  if (want <= 0) {
    coeffs.clear();
  } else if (Integer(static_cast<long>(coeffs.size())) > want) {
    coeffs.resize(want.get_ui());
  } else if (Integer(static_cast<long>(coeffs.size())) < want) {
    throw std::invalid_argument("coefficient vector shorter than the truncation order claims");
  }
  for (auto& c : coeffs) c.canonicalize();
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

void FormalSeries::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    denom_ = 1;
    lead_ = 0;
    return;
  }
  const auto skip = first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  lead_ += skip;

  std::int64_t g = denom_;
  for (std::size_t k = 0; k < coeffs_.size() && g > 1; ++k)
    if (sgn(coeffs_[k]) != 0) g = std::gcd(g, lead_ + static_cast<std::int64_t>(k));
  if (g > 1) {
    const std::int64_t new_denom = denom_ / g;
    const std::int64_t new_lead = lead_ / g;
    const std::int64_t top = floor_times(order_, new_denom).get_si();
    std::vector<Rational> c(static_cast<std::size_t>(top - new_lead + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (sgn(coeffs_[k]) != 0) c[k / static_cast<std::size_t>(g)] = coeffs_[k];
    coeffs_ = std::move(c);
    denom_ = new_denom;
    lead_ = new_lead;
  }
}

Rational FormalSeries::lead_exponent() const {
  if (is_zero()) return order_ + 1;
  return frac(lead_, denom_);
}

const Rational& FormalSeries::lead_coeff() const {
  if (is_zero()) throw std::domain_error("zero series has no leading coefficient");
  return coeffs_.front();
}

Rational FormalSeries::coeff(const Rational& exponent) const {
  if (exponent > order_)
    throw std::out_of_range("coefficient of q^" + exponent.get_str() + " lies past truncation order " +
                            order_.get_str());
  if (is_zero()) return 0;
  Rational scaled = exponent * Rational(denom_);
  if (scaled.get_den() != 1) return 0;
  const Integer k = scaled.get_num() - lead_;
  if (k < 0) return 0;
  return coeffs_.at(k.get_ui());
}

std::vector<Term> FormalSeries::terms() const {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    out.push_back({frac(lead_ + static_cast<std::int64_t>(k), denom_), coeffs_[k]});
  }
  return out;
}

bool FormalSeries::all_integer() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<Rational> FormalSeries::lattice_coeffs(std::int64_t denom, std::int64_t from, std::int64_t to) const {
  if (denom % denom_ != 0) throw std::invalid_argument("target lattice does not refine the series lattice");
  if (frac(to, denom) > order_) throw std::out_of_range("lattice window extends past truncation order");
  const std::int64_t k = denom / denom_;
  std::vector<Rational> out(static_cast<std::size_t>(std::max<std::int64_t>(0, to - from + 1)));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t e = (lead_ + static_cast<std::int64_t>(i)) * k;
    if (e >= from && e <= to) out[static_cast<std::size_t>(e - from)] = coeffs_[i];
  }
  return out;
}

FormalSeries FormalSeries::truncated(const Rational& order) const {
  if (order >= order_) return *this;
  FormalSeries s = *this;
  s.order_ = order;
  const Integer keep = floor_times(order, denom_) - lead_ + 1;
  if (keep <= 0) return zero(order);
  s.coeffs_.resize(keep.get_ui());
  s.normalize();
  return s;
}

FormalSeries FormalSeries::shifted(const Rational& exponent) const {
  if (is_zero()) return zero(order_ + exponent);
  const std::int64_t d = checked_lcm(denom_, to_i64(exponent.get_den(), "shift"));
  const std::int64_t k = d / denom_;
  const std::int64_t add = to_i64(Integer(exponent.get_num() * (d / exponent.get_den())), "shift");
  std::vector<Rational> c((coeffs_.size() - 1) * static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(k)] = coeffs_[i];
  const Rational order = order_ + exponent;
  const Integer top = floor_times(order, d);
  const std::int64_t lead = lead_ * k + add;
  c.resize(Integer(top - lead + 1).get_ui());
  return from_lattice(d, lead, std::move(c), order);
}

FormalSeries FormalSeries::scaled(const Rational& c) const {
  if (sgn(c) == 0) return zero(order_);
  FormalSeries s = *this;
  for (auto& x : s.coeffs_) x *= c;
  return s;
}

FormalSeries FormalSeries::negated_q() const {
  if (denom_ != 1) throw std::domain_error("q -> -q needs integer exponents");
  FormalSeries s = *this;
  for (std::size_t k = 0; k < s.coeffs_.size(); ++k)
    if ((lead_ + static_cast<std::int64_t>(k)) % 2 != 0) s.coeffs_[k] = -s.coeffs_[k];
  return s;
}

bool FormalSeries::agrees_with(const FormalSeries& other) const {
  const Rational order = std::min(order_, other.order_);
  return arith(ArithOp::sub, truncated(order), other.truncated(order)).is_zero();
}

std::string FormalSeries::to_string() const {
  std::ostringstream out;
  auto exp_text = [](const Rational& e) {
    if (e == 1) return std::string("q");
    if (e.get_den() == 1) return "q^" + e.get_str();
    return "q^(" + e.get_str() + ")";
  };
  const Integer first_unknown = floor_times(order_, denom_) + 1;
  Rational tail{first_unknown, Integer(static_cast<long>(denom_))};
  tail.canonicalize();
  if (is_zero()) {
    out << "0 + O(" << exp_text(tail) << ")";
    return out.str();
  }
  const Rational e0 = lead_exponent();
  const bool wrap = sgn(e0) != 0;
  if (wrap) out << exp_text(e0) << " * (";
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const Rational e = frac(static_cast<std::int64_t>(k), denom_);
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (sgn(e) == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << exp_text(e);
    }
  }
  if (wrap) out << ")";
  out << " + O(" << exp_text(tail) << ")";
  return out.str();
}

FormalSeries arith(ArithOp op, const FormalSeries& a, const FormalSeries& b) {
  switch (op) {
    case ArithOp::add:
    case ArithOp::sub: {
      const Rational order = std::min(a.order(), b.order());
      const std::int64_t d = checked_lcm(a.denom(), b.denom());
      const std::int64_t top = floor_times(order, d).get_si();
      std::int64_t lead = top + 1;
      if (!a.is_zero()) lead = std::min(lead, a.lead() * (d / a.denom()));
      if (!b.is_zero()) lead = std::min(lead, b.lead() * (d / b.denom()));
      if (lead > top) return FormalSeries::zero(order);
      std::vector<Rational> c(static_cast<std::size_t>(top - lead + 1));
      auto accumulate = [&](const FormalSeries& s, bool negate) {
        const std::int64_t k = d / s.denom();
        for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
          const std::int64_t e = (s.lead() + static_cast<std::int64_t>(i)) * k;
          if (e > top) break;
          if (negate) c[static_cast<std::size_t>(e - lead)] -= s.coeffs()[i];
          else c[static_cast<std::size_t>(e - lead)] += s.coeffs()[i];
        }
      };
      accumulate(a, false);
      accumulate(b, op == ArithOp::sub);
      return FormalSeries::from_lattice(d, lead, std::move(c), order);
    }
    case ArithOp::mul: {
      if (a.is_zero() || b.is_zero()) {
        const Rational ea = a.is_zero() ? a.order() : a.lead_exponent();
        const Rational eb = b.is_zero() ? b.order() : b.lead_exponent();
        Rational order = std::min(a.order() + eb, b.order() + ea);
        return FormalSeries::zero(order);
      }
      const Rational order = std::min(a.order() + b.lead_exponent(), b.order() + a.lead_exponent());
      const std::int64_t d = checked_lcm(a.denom(), b.denom());
      const std::int64_t ka = d / a.denom(), kb = d / b.denom();
      const std::int64_t lead = a.lead() * ka + b.lead() * kb;
      const std::int64_t top = floor_times(order, d).get_si();
      const std::size_t n = static_cast<std::size_t>(top - lead);
      auto spread = [n](const FormalSeries& s, std::int64_t k) {
        std::vector<Rational> v(std::min(n + 1, (s.coeffs().size() - 1) * static_cast<std::size_t>(k) + 1));
        for (std::size_t i = 0; i < s.coeffs().size() && i * static_cast<std::size_t>(k) <= n; ++i)
          v[i * static_cast<std::size_t>(k)] = s.coeffs()[i];
        return v;
      };
      return FormalSeries::from_lattice(d, lead, convolve(spread(a, ka), spread(b, kb), n), order);
    }
    case ArithOp::div: {
      if (b.is_zero()) throw std::domain_error("division by the zero series");
      const Rational eb = b.lead_exponent();
      // b = q^eb * (b0 + ...), relative precision order(b) - eb.
      const Rational rel = b.order() - eb;
      const std::int64_t top_rel = floor_times(rel, b.denom()).get_si();
      const auto inv = unit_inverse(b.coeffs(), static_cast<std::size_t>(top_rel));
      FormalSeries binv = FormalSeries::from_lattice(b.denom(), -b.lead(), inv, rel - eb);
      if (a.is_zero()) return FormalSeries::zero(Rational(a.order() - eb));
      return arith(ArithOp::mul, a, binv);
    }
  }
  throw std::logic_error("unknown arithmetic op");
}

FormalSeries pow_int(const FormalSeries& a, long exponent) {
  if (exponent < 0) {
    if (a.is_zero()) throw std::domain_error("negative power of the zero series");
    return pow_int(arith(ArithOp::div, FormalSeries::constant(1, a.order() - a.lead_exponent()), a), -exponent);
  }
  // order of a^0 follows the relative precision of a so a^0 * a keeps a's order.
  FormalSeries result = FormalSeries::constant(1, a.is_zero() ? a.order() : a.order() - a.lead_exponent());
  FormalSeries base = a;
  bool first = true;
  while (exponent > 0) {
    if (exponent & 1) {
      result = first ? base : arith(ArithOp::mul, result, base);
      first = false;
    }
    exponent >>= 1;
    if (exponent > 0) base = arith(ArithOp::mul, base, base);
  }
  return result;
}

FormalSeries substitute_power(const FormalSeries& a, const Rational& m) {
  if (sgn(m) <= 0) throw std::invalid_argument("substitution power must be positive");
  const Rational order = a.order() * m;
  if (a.is_zero()) return FormalSeries::zero(order);
  const std::int64_t r = to_i64(m.get_num(), "power numerator");
  const std::int64_t s = to_i64(m.get_den(), "power denominator");
  // exponent (lead+k)/D -> (lead+k)*r/(D*s)
  if (a.denom() > std::numeric_limits<std::int32_t>::max() / s) throw std::overflow_error("exponent lattice overflow");
  const std::int64_t d = a.denom() * s;
  const std::int64_t lead = a.lead() * r;
  const Integer top = floor_times(order, d);
  std::vector<Rational> c(Integer(top - lead + 1).get_ui());
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const std::size_t at = k * static_cast<std::size_t>(r);
    if (at < c.size()) c[at] = a.coeffs()[k];
  }
  return FormalSeries::from_lattice(d, lead, std::move(c), order);
}

FormalSeries pochhammer_inf(const Rational& a_exp, const Rational& p_exp, const Rational& order) {
  if (sgn(a_exp) <= 0) throw std::invalid_argument("pochhammer_inf needs a positive first exponent");
  if (sgn(p_exp) <= 0) throw std::invalid_argument("pochhammer_inf needs a positive step");
  if (sgn(order) < 0) return FormalSeries::zero(order);
  const std::int64_t d = checked_lcm(to_i64(a_exp.get_den(), "a"), to_i64(p_exp.get_den(), "p"));
  const std::int64_t a = to_i64(Integer(a_exp.get_num() * (d / a_exp.get_den())), "a");
  const std::int64_t p = to_i64(Integer(p_exp.get_num() * (d / p_exp.get_den())), "p");
  const std::int64_t top = floor_times(order, d).get_si();
  std::vector<Integer> c(static_cast<std::size_t>(top + 1));
  c[0] = 1;
  for (std::int64_t e = a; e <= top; e += p)
    for (std::int64_t k = top; k >= e; --k) c[static_cast<std::size_t>(k)] -= c[static_cast<std::size_t>(k - e)];
  std::vector<Rational> out(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) out[k] = Rational(c[k]);
  return FormalSeries::from_lattice(d, 0, std::move(out), order);
}

FormalSeries q_derivative(const FormalSeries& a) {
  if (a.is_zero()) return a;
  std::vector<Rational> c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] *= frac(a.lead() + static_cast<std::int64_t>(k), a.denom());
  return FormalSeries::from_lattice(a.denom(), a.lead(), std::move(c), a.order());
}

FormalSeries log_unit(const FormalSeries& a) {
  if (a.is_zero() || a.lead() != 0 || a.lead_coeff() != 1)
    throw std::domain_error("log needs constant term 1");
  const FormalSeries ratio = arith(ArithOp::div, q_derivative(a), a);
  if (ratio.is_zero()) return FormalSeries::zero(ratio.order());
  std::vector<Rational> c(static_cast<std::size_t>(floor_times(ratio.order(), ratio.denom()).get_si() + 1));
  for (std::size_t k = 0; k < ratio.coeffs().size(); ++k) {
    const std::int64_t e = ratio.lead() + static_cast<std::int64_t>(k);
    if (e == 0) continue;
    c[static_cast<std::size_t>(e)] = ratio.coeffs()[k] / frac(e, ratio.denom());
  }
  return FormalSeries::from_lattice(ratio.denom(), 0, std::move(c), ratio.order());
}

FormalSeries exp_nilpotent(const FormalSeries& a) {
  if (!a.is_zero() && a.lead() <= 0) throw std::domain_error("exp needs a series without constant term");
  if (a.is_zero()) return FormalSeries::constant(1, a.order());
  const std::int64_t d = a.denom();
  const std::size_t n = static_cast<std::size_t>(floor_times(a.order(), d).get_si());
  std::vector<Rational> av(n + 1);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) av[static_cast<std::size_t>(a.lead()) + k] = a.coeffs()[k];
  // n E_n = sum_k k a_k E_{n-k}
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Rational s;
    for (std::size_t k = 1; k <= m; ++k)
      if (sgn(av[k]) != 0) s += Rational(static_cast<long>(k)) * av[k] * e[m - k];
    e[m] = s / Rational(static_cast<long>(m));
  }
  return FormalSeries::from_lattice(d, 0, std::move(e), a.order());
}

}  // namespace rq
