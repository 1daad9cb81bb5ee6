#pragma once

#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

/// Reduced row echelon form in place; returns the pivot columns in order.
std::vector<int> rref_in_place(RationalMatrix& m);

int rank(RationalMatrix m);

/// Columns span the exact kernel of m. Free variables are set to 1 one at a
/// time, so the basis is deterministic.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Exact solve of a*x = b (one column of x per column of b). Throws
/// std::runtime_error when any column is inconsistent.
RationalMatrix solve_exact(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace bethe
