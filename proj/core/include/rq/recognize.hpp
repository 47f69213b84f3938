#pragma once

#include "rq/numerics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rq {

// Integer polynomial, coefficients in ascending degree.
using IntegerPolynomial = std::vector<Integer>;

std::string polynomial_text(const IntegerPolynomial& p, const std::string& var = "x");
Real evaluate(const IntegerPolynomial& p, const Real& x);

// Every real root in ascending order, isolated exactly with a Sturm sequence
// and refined by bisection to the context precision. Throws
// std::invalid_argument for the zero polynomial.
std::vector<Real> real_roots(const IntegerPolynomial& p, const PrecisionContext& ctx);

// LLL reduction (exact integer arithmetic, delta = 99/100) of the rows of
// `basis`, which must be linearly independent. Reduces in place.
void lll_reduce(std::vector<std::vector<Integer>>& basis);

struct Recognition {
  IntegerPolynomial poly;  // primitive, positive leading coefficient
  Real residual;           // |P(x)|
  Integer height;          // max |coefficient|
};

// Lowest-degree integer polynomial annihilating x, searched degree by degree
// on the lattice [I | 10^digits x^i]. A candidate is kept only when
// |P(x)| < 10^-(digits/2) and its height is at most
// 10^min(digits/4, digits/(2 (degree + 1))); chance relations from the lattice
// sit near 10^(digits/(degree + 1)).
// Throws std::invalid_argument when ctx.digits < 10 * max_degree, since the
// answer would not be trustworthy.
std::optional<Recognition> recognize_algebraic(const Real& x, long max_degree, const PrecisionContext& ctx);

}  // namespace rq
