#pragma once

#include "rq/numerics.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rq {

// One numeric comparison. `passed` means err < 10^-tolerance_exponent, with
// err relative to |lhs| when `relative` is set.
struct CheckReport {
  std::string check_id;
  std::string paper_eq;  // may be empty
  std::string variant;   // "printed", "corrected", ...
  std::optional<Rational> r;
  std::string q;  // decimal text of the nome
  long digits = 0;
  Real lhs;
  Real rhs;
  Real abs_err;
  Real rel_err;
  long tolerance_exponent = 0;
  bool relative = false;
  bool passed = false;
  std::string note;
};

CheckReport make_report(std::string check_id, std::string paper_eq, std::string variant, std::optional<Rational> r,
                        const Real& q, const Real& lhs, const Real& rhs, long tolerance_exponent, bool relative,
                        const PrecisionContext& ctx, std::string note = {});

// Decimal strings carry ctx.digits significant digits.
nlohmann::json to_json(const CheckReport& report);

// k_1 against 2^(-1/2).
CheckReport check_k1(const PrecisionContext& ctx);

// H(q) = R(1,3,8;q) from products against -t + sqrt(t^2 + 1), t = k/(1 - k').
CheckReport check_h_closed_form(const Rational& r, const PrecisionContext& ctx);

// The two signed radicals sqrt(4 -+ 2 sqrt 2) - 1 - sqrt 2 against H(e^-pi).
std::vector<CheckReport> check_h_radical(const PrecisionContext& ctx);

// k_r^2 against the H and T = sqrt(1 - 8 V^3) expressions, V = R(1,3,6;q).
// Both the printed H expression and the one that holds are reported.
std::vector<CheckReport> check_modulus_relations(const Rational& r, const PrecisionContext& ctx);

enum class DerivativeCase {
  rgg,        // dH/dq from dH/dk and dq/dk
  cubic,      // dV/dq in K, k', V
  n_function, // R'(q) through N(q) and the elliptic form of f(-q)^4
  examples,   // closed values at e^-pi and e^-2pi
};

// Left sides come from the exact q-derivative of the series, evaluated at q.
// Each case reports the printed formula and, where it fails, the form that
// holds. `r` is ignored for `examples`.
std::vector<CheckReport> check_derivative_formulas(DerivativeCase which, const Rational& r,
                                                   const PrecisionContext& ctx);

// R(1,2,4;q^4) against its radical form in k'_r.
CheckReport check_y_q4(const Rational& r, const PrecisionContext& ctx);
// R(1,3,12;q) against its printed radical form in T.
CheckReport check_v1(const Rational& r, const PrecisionContext& ctx);

}  // namespace rq
