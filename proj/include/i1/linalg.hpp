#pragma once

#include <cstddef>
#include <vector>

#include "i1/rational.hpp"

namespace i1 {

using Row = std::vector<Scalar>;
using Mat = std::vector<Row>;  // rectangular, row-major

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
Scalar det_bareiss(Mat m);

/// Row rank over Q.
std::size_t mat_rank(Mat m);

/// Basis of the right nullspace, one vector per free column of the RREF,
/// ordered by ascending free-column index; pivots normalized to 1, so the
/// basis is canonical.
std::vector<Row> nullspace(Mat m);

/// Inverse of a square matrix; false when singular.
bool invert(const Mat& m, Mat& out);

}  // namespace i1
