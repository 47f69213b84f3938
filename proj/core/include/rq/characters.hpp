#pragma once

#include "rq/linalg.hpp"
#include "rq/series.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace rq {

// The triple (a, b, p) of a Ramanujan quantity q^Q [a,p;q] / [b,p;q].
struct RQSpec {
  Rational a, b, p;

  // Validates positivity, a < p, b < p and a != b.
  static RQSpec make(const Rational& a, const Rational& b, const Rational& p);
  static RQSpec make(long a, long b, long p) { return make(Rational(a), Rational(b), Rational(p)); }
  // "a,b,p" with rational entries such as "1,1/2,2".
  static RQSpec parse(std::string_view text);

  // Q = -(a-b)/2 + (a^2-b^2)/(2p)
  Rational Q() const;
  bool is_integer() const;
  long ia() const;
  long ib() const;
  long ip() const;
  std::string to_string() const;

  friend bool operator==(const RQSpec&, const RQSpec&) = default;
};

// Throws std::invalid_argument naming the clash when the residues
// a, b, p-a, p-b are not pairwise distinct mod p, or the spec is not integral.
void require_distinct_residues(const RQSpec& spec);

// +1 on n = a, p-a; -1 on n = b, p-b (mod p); else 0. Strict: rejects
// colliding residues.
int chi(const RQSpec& spec, long n);

// Set-valued variant: +1 when n mod p lies in {a, p-a}, -1 when it lies in
// {b, p-b}, 0 otherwise. Agrees with chi whenever chi is defined; also covers
// a = p/2 or b = p/2, counting the class once.
int residue_character(const RQSpec& spec, long n);

// Memoised chi and tau(n) = sum_{d | n} chi(d) d. Thread-safe: lookups share a
// lock, growth of the table takes it exclusively.
class TauTable {
 public:
  explicit TauTable(const RQSpec& spec);

  const RQSpec& spec() const { return spec_; }
  int chi(long n) const;
  std::int64_t tau(long n) const;
  // Makes tau(1..n) available without further locking churn.
  void reserve(long n) const;

 private:
  void grow(long n) const;

  RQSpec spec_;
  std::vector<int> period_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::int64_t> tau_;  // tau_[n], index 0 unused
};

// First n in [from, to] with sum_j c[j] tau((j+1) n) != 0.
std::optional<long> first_relation_violation(const TauTable& table, const IntegerVector& coeffs, long from,
                                             long to);

struct TauRelation {
  IntegerVector coeffs;  // coeffs[j-1] multiplies tau(j n)
  long verified_to = 0;  // largest n checked
  std::string status;    // "re-verified" or "empirical"
  std::optional<long> failure_n;
};

struct TauScan {
  RQSpec spec;
  long J = 0;
  long n_max = 0;
  long reverify_max = 0;
  std::vector<TauRelation> relations;  // survived re-verification
  std::vector<TauRelation> dropped;    // failed re-verification
};

// Nullspace of sum_j c_j tau(j n) = 0 over n <= n_max, canonicalised to
// primitive vectors with a positive first entry, then re-checked on
// n_max < n <= reverify_max (default 4 n_max).
TauScan tau_relation_scan(const TauTable& table, long J, long n_max, long reverify_max = 0);

// Primitive, first nonzero entry positive.
IntegerVector canonical_relation(IntegerVector v);

// Predicate of the "a, b odd, p even" conjecture.
bool doubling_conjecture_applies(const RQSpec& spec);
// Predicate of the gcd(p, p0) > 1, p0 not dividing a or b conjecture.
bool multiplier_conjecture_applies(const RQSpec& spec, long p0);
// First n <= n_max with tau(m n) != tau(n), if any.
std::optional<long> first_multiplier_failure(const TauTable& table, long m, long n_max);

// chi as a sum of divisor indicators: chi(n) = sum_{d | G} b_d [d | n].
using DivisorCombination = std::map<long, Integer>;

// Works from one period of values (values[n-1] for n = 1..G).
std::optional<DivisorCombination> decompose_periodic(const std::vector<int>& values, long G);
// Uses residue_character of an integer spec with p = G.
std::optional<DivisorCombination> decompose_character(const RQSpec& spec, long G);

nlohmann::json relation_record(const TauScan& scan, const TauRelation& rel);

}  // namespace rq
