#pragma once

#include "trilie/scalar.hpp"
#include "trilie/tensor.hpp"

#include <utility>
#include <vector>

namespace trilie {

/// Result of an exact homogeneous linear solve.
/// rank + kernel_basis.size() == number of unknowns.
struct LinearSolveResult {
  int rank = 0;
  std::vector<Tensor> kernel_basis; // order-1 tensors of dimension = unknowns
};

/// One homogeneous equation as a sparse list of (column, coefficient),
/// columns 0-based.
using SparseRow = std::vector<std::pair<int, Scalar>>;

/// Exact Gaussian elimination over the Gaussian rationals.
/// Equations may repeat or be zero; they are reduced incrementally.
LinearSolveResult solve_linear(const std::vector<SparseRow>& equations, int unknowns);

/// Dense-row convenience overload.
LinearSolveResult solve_linear_dense(const std::vector<std::vector<Scalar>>& equations,
                                     int unknowns);

/// Substitutes a candidate solution into every equation; true when all residuals
/// are exactly zero.
bool satisfies(const std::vector<SparseRow>& equations,
               const std::vector<Scalar>& candidate);

} // namespace trilie
