#pragma once

#include "rq/characters.hpp"
#include "rq/series.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rq {

// (q^(p-a); q^p)_inf (q^a; q^p)_inf up to `order`; 0 < a < p.
FormalSeries agile_series(const Rational& a_exp, const Rational& p_exp, const Rational& order);

// q^(p/12 - a/2 + a^2/(2p)) [a,p;q]. The exponent makes the relations among
// agiles homogeneous; it is symmetric under a -> p - a.
Rational agile_weight(const Rational& a_exp, const Rational& p_exp);
FormalSeries weighted_agile_series(const Rational& a_exp, const Rational& p_exp, const Rational& order);

// [a,p;q] / [b,p;q], known to `order`.
FormalSeries rq_star_series(const RQSpec& spec, const Rational& order);
// q^Q [a,p;q] / [b,p;q], known to `order` (absolute exponent).
FormalSeries rq_series(const RQSpec& spec, const Rational& order);

// prod (1 - q^n)^chi(n), n <= order. Integer specs with distinct residues.
FormalSeries product_over_X(const RQSpec& spec, long order);
// -sum tau(n) q^n / n
FormalSeries log_rq_series(const RQSpec& spec, long order);
// Q - sum tau(n) q^n
FormalSeries m_series(const RQSpec& spec, long order);

// q^Q R*(-q). For 0 < q small this is |R(-q)|; spec must be integral with R*
// on integer exponents.
FormalSeries rq_at_negative_q_abs(const RQSpec& spec, const Rational& order);

enum class EtaKind { f_minus_q, L1 };
FormalSeries eta_series(EtaKind kind, long order);
// L(q) = 1 - 24 L1(q)
FormalSeries eisenstein_L(long order);

// prod_{n>=0} (1 - q^(m(2n+1))), the odd-part product at q^m.
FormalSeries odd_product(long m, const Rational& order);

struct EtaQuotient {
  Rational prefactor_exp;
  std::map<long, long> factors;  // m -> e_m, meaning prod f(-q^m)^e_m

  std::string to_string() const;
  friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;
};

FormalSeries eta_quotient_series(const EtaQuotient& eq, const Rational& order);
// Converts a divisor-indicator combination (see decompose_character) into
// prod f(-q^d)^b_d times q^prefactor.
EtaQuotient eta_quotient_from(const DivisorCombination& comb, const Rational& prefactor);

struct NormalizedSpec {
  RQSpec spec;            // integer entries, first < second
  Rational substitution;  // R(original; q) = R(spec; q^substitution)^(inverted ? -1 : 1)
  bool inverted = false;
};
NormalizedSpec normalize_rational_spec(const RQSpec& spec);

// The general continued fraction 1/(b0 + a1/(b1 + a2/(b2 + ...))) evaluated as
// a formal series. Every a_k (k >= 1) must have positive valuation bounded
// below by `min_valuation`; the depth is chosen so the dropped tail sits past
// `order`.
struct FormalCF {
  std::function<FormalSeries(long k, const Rational& order)> numerator;    // a_k, k >= 1
  std::function<FormalSeries(long k, const Rational& order)> denominator;  // b_k, k >= 0
  Rational min_valuation;
};
FormalSeries cf_series(const FormalCF& cf, const Rational& order);

// P(x, y, z) of the Ramanujan-type fraction with x = q^A, y = q^B, z = q^(A+B)
// multiplied by (1 - q^(B-A)); equals R*(2A+3p/4, 2B+p/4, 4(A+B)).
FormalSeries theorem6_series(long A, long B, const Rational& order);
RQSpec theorem6_spec(long A, long B);

// (1+q)/(1 + q^2/(1 + (q+q^3)/(1 + q^4/(1 + ...)))) at q^m.
FormalSeries octic_cf_series(long m, const Rational& order);

enum class PaperStatus { proved, conjectured };

struct IdentityRecord {
  std::string id;
  std::string paper_eq;
  std::string statement;
  PaperStatus paper_status = PaperStatus::proved;
  std::string note;  // corrections or the form actually checked
  // LHS - RHS, built so that it is known at least to the requested order.
  std::function<FormalSeries(const Rational& order)> residual;
  // Residual of the identity as printed, when the checked form differs.
  std::function<FormalSeries(const Rational& order)> printed_residual;
};

struct IdentityOutcome {
  std::string id;
  std::string paper_eq;
  PaperStatus paper_status;
  bool verified = false;
  Rational verified_order;
  std::optional<Rational> first_failure_exponent;
  std::string note;
  std::optional<Rational> printed_first_failure;
  bool printed_checked = false;
};

const std::vector<IdentityRecord>& identity_registry();
IdentityOutcome verify_identity(const IdentityRecord& rec, const Rational& order);

std::string to_string(PaperStatus s);
nlohmann::json to_json(const IdentityOutcome& outcome);

}  // namespace rq
