// Small exact linear algebra over the fraction field: kernels and inverses.
#pragma once

#include <vector>

#include "hexforms/frac.hpp"

namespace hexforms {

using FracMatrix = std::vector<std::vector<Frac>>;

// Null-space basis of an m x n matrix, computed by Gaussian elimination with
// deterministic pivoting (first nonzero column, row order). Basis vectors are
// produced in ascending free-column order, each normalized so its free
// coordinate is 1.
std::vector<std::vector<Frac>> kernel_basis(const FracMatrix& mat, const RingPtr& ring);

// Inverse of a square matrix; fails on singular input.
FracMatrix invert(const FracMatrix& mat, const RingPtr& ring);

// Solves mat * x = rhs when a (unique or particular) solution exists; fails
// when the system is inconsistent.
std::vector<Frac> solve(const FracMatrix& mat, const std::vector<Frac>& rhs, const RingPtr& ring);

}  // namespace hexforms
