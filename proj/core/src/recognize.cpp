#include "rq/recognize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rq {

namespace {

using RationalPolynomial = std::vector<Rational>;

void trim(RationalPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPolynomial derivative(const RationalPolynomial& p) {
  RationalPolynomial d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

RationalPolynomial remainder(RationalPolynomial a, const RationalPolynomial& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_at(const RationalPolynomial& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return sgn(v);
}

class Sturm {
 public:
  explicit Sturm(const RationalPolynomial& p) {
    chain_.push_back(p);
    chain_.push_back(derivative(p));
    while (!chain_.back().empty()) {
      RationalPolynomial r = remainder(chain_[chain_.size() - 2], chain_.back());
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      chain_.push_back(r);
    }
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& p : chain_) {
      int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  // Distinct roots in (lo, hi].
  int roots_in(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }

 private:
  std::vector<RationalPolynomial> chain_;
};

// Square-free part p / gcd(p, p').
RationalPolynomial square_free(const RationalPolynomial& p) {
  RationalPolynomial a = p, b = derivative(p);
  while (!b.empty()) {
    RationalPolynomial r = remainder(a, b);
    a = b;
    b = r;
  }
  if (a.size() <= 1) return p;
  RationalPolynomial q, rest = p;
  q.assign(p.size() - a.size() + 1, 0);
  while (rest.size() >= a.size() && !rest.empty()) {
    Rational f = rest.back() / a.back();
    std::size_t shift = rest.size() - a.size();
    q[shift] = f;
    for (std::size_t i = 0; i < a.size(); ++i) rest[i + shift] -= f * a[i];
    rest.pop_back();
    trim(rest);
  }
  return q;
}

void isolate(const Sturm& s, const Rational& lo, const Rational& hi, std::vector<std::pair<Rational, Rational>>& out) {
  int n = s.roots_in(lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rational mid = (lo + hi) / 2;
  isolate(s, lo, mid, out);
  isolate(s, mid, hi, out);
}

Integer round_div(const Integer& a, const Integer& b) {
  // nearest integer to a/b, b > 0
  Integer twice = 2 * a + b;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), Integer(2 * b).get_mpz_t());
  return q;
}

}  // namespace

std::string polynomial_text(const IntegerPolynomial& p, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Integer& c = p[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == 1 && i > 0;
    if (!unit) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return first ? "0" : out.str();
}

Real evaluate(const IntegerPolynomial& p, const Real& x) {
  Real v(x.bits());
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + Real(Rational(*it), x.bits());
  return v;
}

std::vector<Real> real_roots(const IntegerPolynomial& p, const PrecisionContext& ctx) {
  RationalPolynomial rp(p.begin(), p.end());
  trim(rp);
  if (rp.empty()) throw std::invalid_argument("real_roots: zero polynomial");
  RationalPolynomial sf = square_free(rp);
  Sturm sturm(sf);
  // Cauchy bound: every root lies within 1 + max |c_i / c_n|.
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < sf.size(); ++i) bound = std::max(bound, Rational(abs(sf[i] / sf.back())));
  bound += 1;
  std::vector<std::pair<Rational, Rational>> intervals;
  isolate(sturm, -bound, bound, intervals);

  std::vector<Real> roots;
  const Real width = power_of_ten(-(ctx.digits + ctx.guard), ctx.bits());
  Integer den = 1;
  for (const auto& c : sf) den = lcm(den, Integer(c.get_den()));
  IntegerPolynomial sf_int;
  for (const auto& c : sf) sf_int.push_back(Integer(c * den));
  for (auto [lo, hi] : intervals) {
    if (sign_at(sf, hi) == 0) {
      roots.push_back(ctx.from(hi));
      continue;
    }
    // Exact bisection to a short interval, then bisection in floating point
    // on the square-free part, which changes sign at every root.
    bool exact = false;
    for (int i = 0; i < 64 && !exact; ++i) {
      Rational mid = (lo + hi) / 2;
      if (sign_at(sf, mid) == 0) {
        lo = hi = mid;
        exact = true;
      } else if (sturm.roots_in(lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    if (exact) {
      roots.push_back(ctx.from(lo));
      continue;
    }
    Real a = ctx.from(lo), b = ctx.from(hi);
    int sa = evaluate(sf_int, a).sign();
    while (b - a > width * max(abs(a), ctx.from(1L))) {
      Real m = (a + b) / 2L;
      int sm = evaluate(sf_int, m).sign();
      if (sm == 0) {
        a = b = m;
        break;
      }
      if (sm == sa)
        a = m;
      else
        b = m;
    }
    roots.push_back((a + b) / 2L);
  }
  return roots;
}

void lll_reduce(std::vector<std::vector<Integer>>& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  auto dot = [](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  // Integral Gram-Schmidt data: d[i+1] = d_i with d[0] = 1; lambda[k][j].
  std::vector<Integer> d(n + 1, 0);
  std::vector<std::vector<Integer>> lambda(n, std::vector<Integer>(n, 0));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  std::size_t kmax = 0;
  auto D = [&](std::size_t i) -> Integer& { return d[i + 1]; };

  auto reduce = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lambda[k][l]) <= D(l)) return;
    Integer q = round_div(lambda[k][l], D(l));
    for (std::size_t i = 0; i < b[k].size(); ++i) b[k][i] -= q * b[l][i];
    lambda[k][l] -= q * D(l);
    for (std::size_t i = 0; i < l; ++i) lambda[k][i] -= q * lambda[l][i];
  };

  auto swap = [&](std::size_t k) {
    std::swap(b[k], b[k - 1]);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda[k][j], lambda[k - 1][j]);
    Integer lam = lambda[k][k - 1];
    Integer dk2 = k >= 2 ? D(k - 2) : Integer(1);
    Integer B = (dk2 * D(k) + lam * lam) / D(k - 1);
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer t = lambda[i][k];
      lambda[i][k] = (D(k) * lambda[i][k - 1] - lam * t) / D(k - 1);
      lambda[i][k - 1] = (B * t + lam * lambda[i][k]) / D(k);
    }
    D(k - 1) = B;
  };

  std::size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 0; j <= k; ++j) {
        Integer u = dot(b[k], b[j]);
        for (std::size_t i = 0; i < j; ++i) {
          Integer di_prev = i >= 1 ? D(i - 1) : Integer(1);
          u = (D(i) * u - lambda[k][i] * lambda[j][i]) / di_prev;
        }
        if (j < k)
          lambda[k][j] = u;
        else if (u == 0)
          throw std::invalid_argument("lll_reduce: rows are linearly dependent");
        else
          D(k) = u;
      }
    }
    reduce(k, k - 1);
    Integer dk2 = k >= 2 ? D(k - 2) : Integer(1);
    const Integer& lam = lambda[k][k - 1];
    if (100 * D(k) * dk2 < 99 * D(k - 1) * D(k - 1) - 100 * lam * lam) {
      swap(k);
      if (k > 1) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
      ++k;
    }
  }
}

std::optional<Recognition> recognize_algebraic(const Real& x, long max_degree, const PrecisionContext& ctx) {
  if (max_degree < 1) throw std::invalid_argument("recognize_algebraic: max_degree must be at least 1");
  if (ctx.digits < 10 * max_degree)
    throw std::invalid_argument("recognize_algebraic: " + std::to_string(ctx.digits) +
                                " digits is too little for degree " + std::to_string(max_degree) + " (need " +
                                std::to_string(10 * max_degree) + ")");
  const Real scale = power_of_ten(ctx.digits, ctx.bits());
  const Real residual_bound = power_of_ten(-(ctx.digits / 2), ctx.bits());
  auto ten_to = [](long e) {
    Integer z;
    mpz_ui_pow_ui(z.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return z;
  };
  Real xv(ctx.bits());
  mpfr_set(xv.get(), x.get(), MPFR_RNDN);

  for (long degree = 1; degree <= max_degree; ++degree) {
    // A chance relation from this lattice has height near
    // 10^(digits/(degree+1)); half that exponent keeps them out.
    const Integer height_bound = ten_to(std::min(ctx.digits / 4, ctx.digits / (2 * (degree + 1))));
    const std::size_t n = static_cast<std::size_t>(degree) + 1;
    std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n + 1, 0));
    Real power = ctx.from(1L);
    for (std::size_t i = 0; i < n; ++i) {
      basis[i][i] = 1;
      basis[i][n] = (power * scale).round();
      power = power * xv;
    }
    lll_reduce(basis);
    for (const auto& row : basis) {
      IntegerPolynomial poly(row.begin(), row.begin() + static_cast<long>(n));
      while (!poly.empty() && poly.back() == 0) poly.pop_back();
      if (static_cast<long>(poly.size()) != degree + 1) continue;  // lower degrees were already tried
      Integer g = 0;
      for (const auto& c : poly) g = gcd(g, c);
      for (auto& c : poly) c /= g;
      if (poly.back() < 0)
        for (auto& c : poly) c = -c;
      Integer height = 0;
      for (const auto& c : poly) height = std::max(height, Integer(abs(c)));
      Real residual = abs(evaluate(poly, xv));
      if (residual < residual_bound && height <= height_bound) return Recognition{poly, residual, height};
    }
  }
  return std::nullopt;
}

}  // namespace rq
