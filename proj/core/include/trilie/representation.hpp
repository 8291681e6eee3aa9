#pragma once

#include "trilie/algebra.hpp"

namespace trilie {

/// An action rho: basis pair (i,j) -> module_dim x module_dim matrix, stored
/// for i<j only; rho(j,i) = -rho(i,j) and rho(i,i) = 0 are derived. Whether
/// the action satisfies the representation conditions is a separate check.
class Representation {
public:
  /// upper[p] is the matrix for the p-th pair (i,j), i<j, ordered
  /// (1,2),(1,3),...,(1,n),(2,3),...
  Representation(ThreeLieAlgebra algebra, int module_dim, std::vector<Matrix> upper);

  static Representation zero(ThreeLieAlgebra algebra, int module_dim);

  const ThreeLieAlgebra& algebra() const { return algebra_; }
  int module_dim() const { return module_dim_; }

  /// Materialized matrix for any (i,j), including sign and the zero diagonal.
  Matrix rho(int i, int j) const;
  /// Stored matrix for i<j.
  const Matrix& rho_upper(int i, int j) const;
  /// Bilinear extension rho(x,y) for arbitrary elements.
  Matrix rho_of(const Vec& x, const Vec& y) const;

  static int pair_index(int i, int j, int n);
  static int pair_count(int n) { return n * (n - 1) / 2; }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.algebra_ == b.algebra_ && a.module_dim_ == b.module_dim_ &&
           a.upper_ == b.upper_;
  }

private:
  ThreeLieAlgebra algebra_;
  int module_dim_;
  std::vector<Matrix> upper_;
};

/// Checks the two defining conditions on reduced basis tuples, then the two
/// identities that follow from them. A failure of a derived identity while
/// the defining ones hold is flagged as an internal inconsistency.
VerificationReport verify_representation(const Representation& R, VerifyOptions opt = {});

/// rho*(i,j) = -rho(i,j)^T on the dual module.
Representation dual_representation(const Representation& R);

Representation adjoint_representation(const ThreeLieAlgebra& A);
Representation coadjoint_representation(const ThreeLieAlgebra& A);

/// The trivial action on a module of the given dimension.
Representation trivial_representation(const ThreeLieAlgebra& A, int module_dim = 1);

/// Action on the n^3-dimensional triple tensor space with ad in one slot and
/// the identity in the others. Tuple (i,j,k) maps to coordinate
/// (i-1)n^2 + (j-1)n + k; this ordering is part of the contract.
Representation slot_representation(const ThreeLieAlgebra& A, int slot);

/// Flattened coordinate of the basis tensor e_i (x) e_j (x) e_k.
int triple_tuple_coord(int i, int j, int k, int n);

/// Algebra structure on A + V: the bracket of A extended by the action, with
/// A in coordinates 1..n and the module in n+1..n+m.
ThreeLieAlgebra semidirect_product(const ThreeLieAlgebra& A, const Representation& R);

} // namespace trilie
