#pragma once

#include <vector>

#include "taf/rational.hpp"

namespace taf {

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

/// Reduces a in place to row echelon form with unit pivots and returns its
/// rank. Rows may be empty; all non-empty rows must share a length.
long row_reduce(RatMatrix& a);

/// Basis of the solution space of a x = 0, for a with `cols` columns.
/// Each basis vector has length cols.
RatMatrix nullspace(RatMatrix a, long cols);

}  // namespace taf
