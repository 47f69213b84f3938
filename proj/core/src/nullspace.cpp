#include "rq/linalg.hpp"

#include <stdexcept>

namespace rq {

IntegerVector make_primitive(IntegerVector v) {
  Integer g;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntegerVector primitive_from_rational(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (l / v[i].get_den());
  return make_primitive(std::move(out));
}

std::vector<IntegerVector> nullspace_rational(const RationalMatrix& m, std::size_t ncols) {
  std::vector<IntegerVector> rows;
  rows.reserve(m.size());
  for (const auto& r : m) {
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix");
    rows.push_back(primitive_from_rational(r));
  }
  return nullspace_integer(std::move(rows), ncols);
}

std::vector<IntegerVector> nullspace_integer(std::vector<IntegerVector> a, std::size_t ncols) {
  for (const auto& r : a)
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix");

  const std::size_t nrows = a.size();
  std::vector<std::size_t> pivot_cols;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t best = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (best == nrows || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) > 0) best = i;
    }
    if (best == nrows) continue;
    std::swap(a[r], a[best]);
    const Integer& piv = a[r][c];
    Integer t;
    for (std::size_t i = r + 1; i < nrows; ++i) {
      auto& row = a[i];
      const Integer lead = row[c];
      for (std::size_t j = c + 1; j < ncols; ++j) {
        // row[j] = (piv*row[j] - lead*a[r][j]) / prev, exact.
        mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), row[j].get_mpz_t());
        mpz_submul(t.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv;
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<IntegerVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(ncols);
    x[f] = 1;
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      const std::size_t c = pivot_cols[k];
      Rational s;
      for (std::size_t j = c + 1; j < ncols; ++j)
        if (sgn(x[j]) != 0 && sgn(a[k][j]) != 0) s += Rational(a[k][j]) * x[j];
      x[c] = -s / Rational(a[k][c]);
    }
    basis.push_back(primitive_from_rational(x));
  }
  return basis;
}

bool in_span(const std::vector<IntegerVector>& basis, const IntegerVector& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }
  // v in span(B)  <=>  rank [B; v] == rank B, via nullspace of the transposed system.
  const std::size_t n = v.size();
  auto rank_of = [n](const std::vector<IntegerVector>& rows) {
    auto kernel = nullspace_integer(rows, n);
    return n - kernel.size();
  };
  std::vector<IntegerVector> with = basis;
  with.push_back(v);
  return rank_of(with) == rank_of(basis);
}

}  // namespace rq
