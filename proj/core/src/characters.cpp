#include "rq/characters.hpp"

#include "rq/report.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rq {

namespace {

long as_long(const Rational& x, const char* what) {
  if (x.get_den() != 1 || !x.get_num().fits_slong_p())
    throw std::invalid_argument(std::string(what) + " must be an integer, got " + x.get_str());
  return x.get_num().get_si();
}

long mod(long n, long p) {
  long r = n % p;
  return r < 0 ? r + p : r;
}

}  // namespace

RQSpec RQSpec::make(const Rational& a, const Rational& b, const Rational& p) {
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(p) <= 0)
    throw std::invalid_argument("spec entries must be positive");
  if (a >= p || b >= p) throw std::invalid_argument("spec needs a < p and b < p");
  if (a == b) throw std::invalid_argument("degenerate spec a = b (the quantity is identically 1)");
  return RQSpec{a, b, p};
}

RQSpec RQSpec::parse(std::string_view text) {
  std::vector<Rational> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("spec must be 'a,b,p'");
  return make(parts[0], parts[1], parts[2]);
}

Rational RQSpec::Q() const {
  Rational q = -(a - b) / 2 + (a * a - b * b) / (2 * p);
  q.canonicalize();
  return q;
}

bool RQSpec::is_integer() const { return a.get_den() == 1 && b.get_den() == 1 && p.get_den() == 1; }
long RQSpec::ia() const { return as_long(a, "a"); }
long RQSpec::ib() const { return as_long(b, "b"); }
long RQSpec::ip() const { return as_long(p, "p"); }

std::string RQSpec::to_string() const { return a.get_str() + "," + b.get_str() + "," + p.get_str(); }

void require_distinct_residues(const RQSpec& spec) {
  const long a = spec.ia(), b = spec.ib(), p = spec.ip();
  const long res[4] = {mod(a, p), mod(p - a, p), mod(b, p), mod(p - b, p)};
  const char* names[4] = {"a", "p-a", "b", "p-b"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (res[i] == res[j]) {
        std::ostringstream msg;
        msg << "spec (" << spec.to_string() << "): residues " << names[i] << " and " << names[j]
            << " coincide at " << res[i] << " mod " << p;
        throw std::invalid_argument(msg.str());
      }
}

int chi(const RQSpec& spec, long n) {
  require_distinct_residues(spec);
  return residue_character(spec, n);
}

int residue_character(const RQSpec& spec, long n) {
  const long a = spec.ia(), b = spec.ib(), p = spec.ip();
  if (mod(a, p) == mod(b, p)) throw std::invalid_argument("residues a and b coincide mod p");
  const long r = mod(n, p);
  if (r == mod(a, p) || r == mod(p - a, p)) {
    if (r == mod(b, p) || r == mod(p - b, p)) return 0;
    return 1;
  }
  if (r == mod(b, p) || r == mod(p - b, p)) return -1;
  return 0;
}

TauTable::TauTable(const RQSpec& spec) : spec_(spec) {
  require_distinct_residues(spec_);
  const long p = spec_.ip();
  period_.resize(static_cast<std::size_t>(p));
  for (long r = 0; r < p; ++r) period_[static_cast<std::size_t>(r)] = residue_character(spec_, r);
  tau_.assign(1, 0);
}

int TauTable::chi(long n) const { return period_[static_cast<std::size_t>(mod(n, spec_.ip()))]; }

void TauTable::grow(long n) const {
  std::unique_lock lock(mutex_);
  const long have = static_cast<long>(tau_.size()) - 1;
  if (n <= have) return;
  const long target = std::max(n, 2 * have);
  std::vector<std::int64_t> t(static_cast<std::size_t>(target + 1), 0);
  for (long d = 1; d <= target; ++d) {
    const int x = chi(d);
    if (x == 0) continue;
    for (long m = d; m <= target; m += d) t[static_cast<std::size_t>(m)] += x * d;
  }
  tau_ = std::move(t);
}

void TauTable::reserve(long n) const { grow(n); }

std::int64_t TauTable::tau(long n) const {
  if (n <= 0) throw std::invalid_argument("tau needs n >= 1");
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<long>(tau_.size())) return tau_[static_cast<std::size_t>(n)];
  }
  grow(n);
  std::shared_lock lock(mutex_);
  return tau_[static_cast<std::size_t>(n)];
}

std::optional<long> first_relation_violation(const TauTable& table, const IntegerVector& coeffs, long from,
                                             long to) {
  const long J = static_cast<long>(coeffs.size());
  table.reserve(J * to);
  for (long n = std::max(1L, from); n <= to; ++n) {
    Integer s;
    for (long j = 1; j <= J; ++j)
      if (sgn(coeffs[static_cast<std::size_t>(j - 1)]) != 0)
        s += coeffs[static_cast<std::size_t>(j - 1)] * Integer(static_cast<long>(table.tau(j * n)));
    if (sgn(s) != 0) return n;
  }
  return std::nullopt;
}

IntegerVector canonical_relation(IntegerVector v) {
  v = make_primitive(std::move(v));
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

TauScan tau_relation_scan(const TauTable& table, long J, long n_max, long reverify_max) {
  if (J < 1 || n_max < 1) throw std::invalid_argument("tau scan needs J >= 1 and n_max >= 1");
  if (reverify_max <= 0) reverify_max = 4 * n_max;
  TauScan scan{table.spec(), J, n_max, reverify_max, {}, {}};
  table.reserve(J * reverify_max);

  std::vector<IntegerVector> rows(static_cast<std::size_t>(n_max), IntegerVector(static_cast<std::size_t>(J)));
  for (long n = 1; n <= n_max; ++n)
    for (long j = 1; j <= J; ++j)
      rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j - 1)] =
          Integer(static_cast<long>(table.tau(j * n)));

  for (auto& v : nullspace_integer(std::move(rows), static_cast<std::size_t>(J))) {
    TauRelation rel;
    rel.coeffs = canonical_relation(std::move(v));
    rel.failure_n = first_relation_violation(table, rel.coeffs, n_max + 1, reverify_max);
    if (rel.failure_n) {
      rel.status = "empirical";
      rel.verified_to = *rel.failure_n - 1;
      scan.dropped.push_back(std::move(rel));
    } else {
      rel.status = "re-verified";
      rel.verified_to = reverify_max;
      scan.relations.push_back(std::move(rel));
    }
  }
  return scan;
}

bool doubling_conjecture_applies(const RQSpec& spec) {
  if (!spec.is_integer()) return false;
  return spec.ia() % 2 == 1 && spec.ib() % 2 == 1 && spec.ip() % 2 == 0;
}

bool multiplier_conjecture_applies(const RQSpec& spec, long p0) {
  if (!spec.is_integer() || p0 < 2) return false;
  return std::gcd(spec.ip(), p0) > 1 && spec.ia() % p0 != 0 && spec.ib() % p0 != 0;
}

std::optional<long> first_multiplier_failure(const TauTable& table, long m, long n_max) {
  table.reserve(m * n_max);
  for (long n = 1; n <= n_max; ++n)
    if (table.tau(m * n) != table.tau(n)) return n;
  return std::nullopt;
}

std::optional<DivisorCombination> decompose_periodic(const std::vector<int>& values, long G) {
  if (G < 1 || static_cast<long>(values.size()) != G) throw std::invalid_argument("need one full period of values");
  std::vector<long> divisors;
  for (long d = 1; d <= G; ++d)
    if (G % d == 0) divisors.push_back(d);
  // The rows n = d (d | G) are triangular in b_d; solve them, then require the
  // rest of the period to agree.
  DivisorCombination b;
  for (long d : divisors) {
    Integer s;
    for (const auto& [e, be] : b)
      if (d % e == 0) s += be;
    b[d] = Integer(values[static_cast<std::size_t>(d - 1)]) - s;
  }
  for (long n = 1; n <= G; ++n) {
    Integer s;
    for (const auto& [d, bd] : b)
      if (n % d == 0) s += bd;
    if (s != values[static_cast<std::size_t>(n - 1)]) return std::nullopt;
  }
  for (auto it = b.begin(); it != b.end();) it = sgn(it->second) == 0 ? b.erase(it) : std::next(it);
  return b;
}

std::optional<DivisorCombination> decompose_character(const RQSpec& spec, long G) {
  if (spec.ip() != G) throw std::invalid_argument("decompose_character needs p = G");
  std::vector<int> values(static_cast<std::size_t>(G));
  for (long n = 1; n <= G; ++n) values[static_cast<std::size_t>(n - 1)] = residue_character(spec, n);
  return decompose_periodic(values, G);
}

nlohmann::json relation_record(const TauScan& scan, const TauRelation& rel) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : rel.coeffs) coeffs.push_back(json_integer(c));
  nlohmann::json j{{"spec", scan.spec.to_string()},
                   {"J", scan.J},
                   {"n_max", scan.n_max},
                   {"coefficients", coeffs},
                   {"status", rel.status},
                   {"verified_to", rel.verified_to}};
  if (rel.failure_n) j["failure_n"] = *rel.failure_n;
  return j;
}

}  // namespace rq
