#pragma once

#include "rq/series.hpp"

#include <vector>

namespace rq {

using IntegerVector = std::vector<Integer>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Basis of the right nullspace of an exact matrix.
//
// Elimination is fraction-free (Bareiss) with pivot rows chosen by largest
// absolute value, ties to the lowest index. The basis is the reduced one: one
// vector per non-pivot column f, with entry f positive and every other
// non-pivot entry zero, scaled to coprime integers. Since the reduced basis is
// unique, the result does not depend on pivoting.
std::vector<IntegerVector> nullspace_rational(const RationalMatrix& m, std::size_t ncols);
std::vector<IntegerVector> nullspace_integer(std::vector<IntegerVector> m, std::size_t ncols);

// Divide by the content; zero vectors are returned unchanged.
IntegerVector make_primitive(IntegerVector v);
IntegerVector primitive_from_rational(const std::vector<Rational>& v);

// True when v lies in the rational span of basis.
bool in_span(const std::vector<IntegerVector>& basis, const IntegerVector& v);

}  // namespace rq
