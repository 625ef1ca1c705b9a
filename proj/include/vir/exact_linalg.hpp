#pragma once

#include "vir/rational.hpp"

#include <vector>

namespace vir {

/// Integer matrix obtained by scaling every row by the lcm of its denominators.
Matrix<Integer> clear_denominators(const RationalMatrix& a);

/// Exact determinant by Bareiss fraction-free elimination.
Rational determinant(const RationalMatrix& a);

/// Exact rank.
Eigen::Index rank(const RationalMatrix& a);

/// Basis of the right kernel { x : a x = 0 }, one column per free variable:
/// that coordinate is 1 and the other free coordinates are 0.
RationalMatrix nullspace(const RationalMatrix& a);

}  // namespace vir
