#include "rq/modeq.hpp"

#include "rq/quantities.hpp"
#include "rq/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rq {

namespace {

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (sgn(a) == 0) return abs(b);
  if (sgn(b) == 0) return abs(a);
  Integer n;
  mpz_gcd(n.get_mpz_t(), Integer(a.get_num() * b.get_den()).get_mpz_t(),
          Integer(b.get_num() * a.get_den()).get_mpz_t());
  Rational r{n, Integer(a.get_den() * b.get_den())};
  r.canonicalize();
  return r;
}

// Spacing of the exponents of s above its lead (0 when s is a monomial).
Rational exponent_step(const FormalSeries& s) {
  Rational g = 0;
  if (s.is_zero()) return g;
  const Rational lead = s.lead_exponent();
  for (const auto& t : s.terms()) g = rational_gcd(g, t.exponent - lead);
  return g;
}

Rational modulo(const Rational& x, const Rational& m) {
  Rational r = x - Rational(floor(x / m)) * m;
  r.canonicalize();
  return r;
}

bool graded_lex_less(const BivariatePolynomial::Exponents& a, const BivariatePolynomial::Exponents& b) {
  if (a.first + a.second != b.first + b.second) return a.first + a.second < b.first + b.second;
  return a.first < b.first;
}

struct Block {
  std::vector<std::size_t> columns;  // indices into the monomial list
  Rational base;
  long rows = 0;
};

struct Layout {
  Rational eu, ev, step;
  std::vector<std::pair<long, long>> monomials;
  std::vector<Block> blocks;
  Rational highest;  // largest row exponent over all blocks
};

Layout plan(const MiningJob& job, const FormalSeries& u, const FormalSeries& v) {
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("mining needs nonzero series");
  Layout l;
  l.eu = u.lead_exponent();
  l.ev = v.lead_exponent();
  l.step = rational_gcd(exponent_step(u), exponent_step(v));
  if (sgn(l.step) == 0) l.step = 1;
  l.monomials = job.shape.monomials();
  std::map<Rational, std::size_t> by_class;
  for (std::size_t k = 0; k < l.monomials.size(); ++k) {
    const auto [i, j] = l.monomials[k];
    const Rational e = l.eu * i + l.ev * j;
    const Rational cls = modulo(e, l.step);
    auto it = by_class.find(cls);
    if (it == by_class.end()) {
      it = by_class.emplace(cls, l.blocks.size()).first;
      l.blocks.push_back(Block{{}, e, 0});
    }
    Block& b = l.blocks[it->second];
    b.columns.push_back(k);
    b.base = std::min(b.base, e);
  }
  l.highest = Rational(0);
  bool first = true;
  for (auto& b : l.blocks) {
    b.rows = static_cast<long>(b.columns.size()) + job.guard;
    const Rational top = b.base + l.step * (b.rows - 1);
    if (first || top > l.highest) l.highest = top;
    first = false;
  }
  return l;
}

FormalSeries power_of(std::map<long, FormalSeries>& cache, const FormalSeries& s, long k) {
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  FormalSeries r = k == 1 ? s : power_of(cache, s, k - 1) * s;
  cache.emplace(k, r);
  return r;
}

// u^i v^j for every monomial; i = j = 0 gives the constant 1 known to `order`.
std::vector<FormalSeries> monomial_series(const std::vector<std::pair<long, long>>& monomials, const FormalSeries& u,
                                          const FormalSeries& v, const Rational& order) {
  std::map<long, FormalSeries> up, vp;
  std::vector<FormalSeries> out;
  out.reserve(monomials.size());
  for (const auto& [i, j] : monomials) {
    if (i == 0 && j == 0)
      out.push_back(FormalSeries::constant(1, order));
    else if (j == 0)
      out.push_back(power_of(up, u, i));
    else if (i == 0)
      out.push_back(power_of(vp, v, j));
    else
      out.push_back(power_of(up, u, i) * power_of(vp, v, j));
  }
  return out;
}

// Lowest order among the monomial products that a block actually reads.
Rational deficit(const Layout& l, const std::vector<FormalSeries>& prods) {
  Rational worst = 0;
  for (const auto& b : l.blocks) {
    const Rational top = b.base + l.step * (b.rows - 1);
    for (auto c : b.columns) worst = std::max(worst, Rational(top - prods[c].order()));
  }
  return worst;
}

Rational scaled_up(const Rational& order) {
  Rational r = order * 3 / 2;
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<std::pair<long, long>> Shape::monomials() const {
  if (size < 0) throw std::invalid_argument("shape size must be non-negative");
  std::vector<std::pair<long, long>> out;
  for (long i = 0; i <= size; ++i)
    for (long j = 0; j <= size; ++j)
      if (kind == Kind::box || i + j <= size) out.emplace_back(i, j);
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

std::string Shape::to_string() const {
  return (kind == Kind::box ? "box(" : "total(") + std::to_string(size) + ")";
}

BivariatePolynomial::BivariatePolynomial(std::map<Exponents, Integer> terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.first < 0 || it->first.second < 0) throw std::invalid_argument("negative exponent in polynomial");
    it = sgn(it->second) == 0 ? terms.erase(it) : std::next(it);
  }
  if (terms.empty()) return;
  Integer g = 0;
  for (const auto& [e, c] : terms) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  const auto lead = std::max_element(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return graded_lex_less(a.first, b.first);
  });
  if (sgn(lead->second) < 0) g = -g;
  for (auto& [e, c] : terms) c /= g;
  terms_ = std::move(terms);
}

long BivariatePolynomial::degree() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Integer>> t(terms_.begin(), terms_.end());
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : t) {
    const auto [i, j] = e;
    if (first)
      out << (sgn(c) < 0 ? "-" : "");
    else
      out << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    const Integer a = abs(c);
    std::vector<std::string> factors;
    if (i == 1) factors.emplace_back("u");
    if (i > 1) factors.push_back("u^" + std::to_string(i));
    if (j == 1) factors.emplace_back("v");
    if (j > 1) factors.push_back("v^" + std::to_string(j));
    if (factors.empty() || a != 1) factors.insert(factors.begin(), a.get_str());
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

BivariatePolynomial BivariatePolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::map<Exponents, Integer> terms;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("polynomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() -> Integer {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number at offset " + std::to_string(start));
    return Integer(s.substr(start, pos - start));
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty() || pos != 0) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    Integer coeff = 1;
    long i = 0, j = 0;
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (any) {
        if (s[pos] != '*') fail("expected '*' at offset " + std::to_string(pos));
        ++pos;
      }
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff *= read_int();
      } else if (pos < s.size() && (s[pos] == 'u' || s[pos] == 'v')) {
        const char var = s[pos++];
        long k = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          const Integer e = read_int();
          if (!e.fits_slong_p()) fail("exponent too large");
          k = e.get_si();
        }
        (var == 'u' ? i : j) += k;
      } else {
        fail("unexpected character at offset " + std::to_string(pos));
      }
      any = true;
    }
    if (!any) fail("empty term");
    terms[{i, j}] += sign * coeff;
  }
  return BivariatePolynomial(std::move(terms));
}

FormalSeries BivariatePolynomial::evaluate(const FormalSeries& u, const FormalSeries& v) const {
  const Rational base_order = std::min(u.order(), v.order());
  if (terms_.empty()) return FormalSeries::zero(base_order);
  std::vector<std::pair<long, long>> mons;
  for (const auto& [e, c] : terms_) mons.push_back(e);
  const auto prods = monomial_series(mons, u, v, base_order);
  FormalSeries sum;
  std::size_t k = 0;
  for (const auto& [e, c] : terms_) {
    FormalSeries t = prods[k].scaled(Rational(c));
    sum = k == 0 ? t : sum + t;
    ++k;
  }
  return sum;
}

SeriesBuilder rq_builder(const RQSpec& spec, const Rational& power) {
  if (sgn(power) <= 0) throw std::invalid_argument("substitution power must be positive");
  std::string desc = "R(" + spec.to_string() + ";q";
  if (power != 1) desc += "^" + power.get_str();
  desc += ")";
  return {desc, [spec, power](const Rational& order) {
            if (power == 1) return rq_series(spec, order);
            return substitute_power(rq_series(spec, order / power), power);
          }};
}

FormalSeries n_series(const RQSpec& spec, const Rational& order) {
  const Rational shift(-1, 6);
  const long n = std::max(0L, floor(order - shift).get_si());
  const FormalSeries f = pochhammer_inf(1, 1, n);
  return (m_series(spec, n) * pow_int(f, -4)).shifted(shift);
}

SeriesBuilder n_builder(const RQSpec& spec, const Rational& power) {
  if (sgn(power) <= 0) throw std::invalid_argument("substitution power must be positive");
  std::string desc = "N(" + spec.to_string() + ";q";
  if (power != 1) desc += "^" + power.get_str();
  desc += ")";
  return {desc, [spec, power](const Rational& order) {
            if (power == 1) return n_series(spec, order);
            return substitute_power(n_series(spec, order / power), power);
          }};
}

Rational required_order(const MiningJob& job) {
  // Row layout only depends on the leads and the exponent spacing, which a
  // short expansion already shows.
  const Rational probe = 12;
  Layout l = plan(job, job.u.build(probe), job.v.build(probe));
  Rational order = std::max(l.highest, Rational(1));
  for (int attempt = 0; attempt < 8; ++attempt) {
    const FormalSeries u = job.u.build(order), v = job.v.build(order);
    l = plan(job, u, v);
    const Rational gap = deficit(l, monomial_series(l.monomials, u, v, order));
    if (sgn(gap) <= 0) return order;
    order += gap;
  }
  throw std::runtime_error("mining order does not converge");
}

MiningResult mine(const MiningJob& job) {
  if (job.guard < 0) throw std::invalid_argument("guard must be non-negative");
  const Rational order = sgn(job.order) > 0 ? job.order : required_order(job);
  const FormalSeries u = job.u.build(order), v = job.v.build(order);
  const Layout l = plan(job, u, v);
  const auto prods = monomial_series(l.monomials, u, v, order);
  const Rational gap = deficit(l, prods);
  if (sgn(gap) > 0)
    throw std::invalid_argument("series order " + order.get_str() + " is too small for shape " +
                                job.shape.to_string() + "; need at least " +
                                Rational(order + gap).get_str());

  MiningResult res;
  res.order = order;
  res.step = l.step;
  res.reverify_order = sgn(job.reverify_order) > 0 ? job.reverify_order : scaled_up(order);
  res.lattice_steps = ceil(order / l.step).get_si();

  std::vector<BivariatePolynomial> candidates;
  for (const auto& b : l.blocks) {
    RationalMatrix m(static_cast<std::size_t>(b.rows), std::vector<Rational>(b.columns.size()));
    for (long k = 0; k < b.rows; ++k) {
      const Rational e = b.base + l.step * k;
      for (std::size_t c = 0; c < b.columns.size(); ++c)
        m[static_cast<std::size_t>(k)][c] = prods[b.columns[c]].coeff(e);
    }
    for (const auto& vec : nullspace_rational(m, b.columns.size())) {
      std::map<BivariatePolynomial::Exponents, Integer> terms;
      for (std::size_t c = 0; c < vec.size(); ++c)
        if (sgn(vec[c]) != 0) terms[l.monomials[b.columns[c]]] = vec[c];
      candidates.emplace_back(std::move(terms));
    }
  }

  for (auto& p : candidates) {
    const RelationVerdict verdict = verify_relation(p, job.u, job.v, res.reverify_order);
    if (verdict.holds)
      res.polynomials.push_back({std::move(p), verdict.order});
    else
      res.dropped.push_back({std::move(p), *verdict.fails_at});
  }
  std::stable_sort(res.polynomials.begin(), res.polynomials.end(), [](const auto& a, const auto& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.term_count() < b.poly.term_count();
  });
  return res;
}

MiningResult mine_cross(const RQSpec& u_spec, const Rational& alpha, const RQSpec& v_spec, const Rational& beta,
                        const Shape& shape, const Rational& order) {
  MiningJob job;
  job.u = rq_builder(u_spec, alpha);
  job.v = rq_builder(v_spec, beta);
  job.shape = shape;
  job.order = order;
  return mine(job);
}

RelationVerdict verify_relation(const BivariatePolynomial& p, const FormalSeries& u, const FormalSeries& v,
                                const Rational& order) {
  const FormalSeries r = p.evaluate(u, v);
  if (r.order() < order)
    throw std::invalid_argument("P(u, v) is only known to q^" + r.order().get_str() + ", below the requested " +
                                order.get_str());
  const FormalSeries t = r.truncated(order);
  RelationVerdict out;
  out.order = order;
  out.holds = t.is_zero();
  if (!out.holds) out.fails_at = t.lead_exponent();
  return out;
}

RelationVerdict verify_relation(const BivariatePolynomial& p, const SeriesBuilder& u, const SeriesBuilder& v,
                                const Rational& order) {
  Rational build = order;
  for (int attempt = 0; attempt < 8; ++attempt) {
    const FormalSeries r = p.evaluate(u.build(build), v.build(build));
    if (r.order() >= order) {
      const FormalSeries t = r.truncated(order);
      RelationVerdict out;
      out.order = order;
      out.holds = t.is_zero();
      if (!out.holds) out.fails_at = t.lead_exponent();
      return out;
    }
    build += order - r.order() + 1;
  }
  throw std::runtime_error("relation residual cannot reach the requested order");
}

nlohmann::json to_json(const BivariatePolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, json_integer(c)});
  return {{"text", p.to_string()}, {"terms", terms}, {"degree", p.degree()}};
}

nlohmann::json to_json(const MiningResult& r) {
  nlohmann::json polys = nlohmann::json::array(), dropped = nlohmann::json::array();
  for (const auto& m : r.polynomials) {
    nlohmann::json j = to_json(m.poly);
    j["verified_order"] = json_rational(m.verified_order);
    polys.push_back(std::move(j));
  }
  for (const auto& d : r.dropped) {
    nlohmann::json j = to_json(d.poly);
    j["first_failure_exponent"] = json_rational(d.first_failure_exponent);
    dropped.push_back(std::move(j));
  }
  return {{"order", json_rational(r.order)},
          {"step", json_rational(r.step)},
          {"lattice_steps", r.lattice_steps},
          {"reverify_order", json_rational(r.reverify_order)},
          {"polynomials", polys},
          {"dropped_candidates", dropped}};
}

}  // namespace rq
