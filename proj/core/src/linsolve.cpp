#include "trilie/linsolve.hpp"

#include <algorithm>
#include <map>

namespace trilie {

namespace {

// Reduced row-echelon basis built incrementally: pivot column -> dense row,
// each pivot row normalized to leading 1 and reduced against the others.
class EchelonBasis {
public:
  explicit EchelonBasis(int cols) : cols_(cols) {}

  void insert(std::vector<Scalar> row) {
    for (auto& [pc, prow] : rows_) {
      if (row[pc].is_zero()) continue;
      Scalar f = row[pc];
      for (int c = 0; c < cols_; ++c) row[c].sub_product(f, prow[c]);
    }
    int lead = -1;
    for (int c = 0; c < cols_; ++c)
      if (!row[c].is_zero()) {
        lead = c;
        break;
      }
    if (lead < 0) return;
    Scalar inv = row[lead].inverse();
    for (int c = lead; c < cols_; ++c) row[c] *= inv;
    for (auto& [pc, prow] : rows_) {
      if (prow[lead].is_zero()) continue;
      Scalar f = prow[lead];
      for (int c = 0; c < cols_; ++c) prow[c].sub_product(f, row[c]);
    }
    rows_.emplace(lead, std::move(row));
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  std::vector<Tensor> kernel() const {
    std::vector<Tensor> basis;
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [pc, prow] : rows_) is_pivot[pc] = true;
    for (int free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Tensor v(1, cols_);
      v.at({free + 1}) = Scalar(1);
      for (const auto& [pc, prow] : rows_) v.at({pc + 1}) = -prow[free];
      basis.push_back(std::move(v));
    }
    return basis;
  }

private:
  int cols_;
  std::map<int, std::vector<Scalar>> rows_;
};

} // namespace

LinearSolveResult solve_linear(const std::vector<SparseRow>& equations, int unknowns) {
  if (unknowns < 0) throw invalid_input("negative unknown count");
  EchelonBasis basis(unknowns);
  for (const SparseRow& eq : equations) {
    std::vector<Scalar> row(unknowns);
    bool any = false;
    for (const auto& [col, coeff] : eq) {
      if (col < 0 || col >= unknowns)
        throw invalid_input("equation references an unknown out of range");
      if (coeff.is_zero()) continue;
      row[col] += coeff;
      any = true;
    }
    if (any) basis.insert(std::move(row));
  }
  LinearSolveResult res;
  res.rank = basis.rank();
  res.kernel_basis = basis.kernel();
  return res;
}

LinearSolveResult solve_linear_dense(const std::vector<std::vector<Scalar>>& equations,
                                     int unknowns) {
  std::vector<SparseRow> rows;
  rows.reserve(equations.size());
  for (const auto& eq : equations) {
    if (static_cast<int>(eq.size()) != unknowns)
      throw invalid_input("equation length mismatch");
    SparseRow r;
    for (int c = 0; c < unknowns; ++c)
      if (!eq[c].is_zero()) r.emplace_back(c, eq[c]);
    rows.push_back(std::move(r));
  }
  return solve_linear(rows, unknowns);
}

bool satisfies(const std::vector<SparseRow>& equations,
               const std::vector<Scalar>& candidate) {
  for (const SparseRow& eq : equations) {
    Scalar acc;
    for (const auto& [col, coeff] : eq)
      acc.add_product(coeff, candidate.at(static_cast<std::size_t>(col)));
    if (!acc.is_zero()) return false;
  }
  return true;
}

} // namespace trilie
