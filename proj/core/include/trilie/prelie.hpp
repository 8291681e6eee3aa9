#pragma once

#include "trilie/yang_baxter.hpp"

namespace trilie {

/// Ternary product antisymmetric in its first two arguments, held as dense
/// constants p(i,j,k,l): the coefficient of e_l in {e_i,e_j,e_k}. The
/// first-two antisymmetry is validated at construction; the remaining two
/// defining identities are checked by verify_prelie.
class PreLieAlgebra {
public:
  explicit PreLieAlgebra(Tensor constants);

  static PreLieAlgebra zero(int dim);

  struct ProductSpec {
    std::array<int, 3> args; // args[0] < args[1], args[2] free
    std::vector<std::pair<int, Scalar>> result;
  };
  static PreLieAlgebra from_products(int dim, const std::vector<ProductSpec>& products);

  int dim() const { return dim_; }
  const Tensor& constants() const { return constants_; }
  const Scalar& p(int i, int j, int k, int l) const {
    return constants_.at({i, j, k, l});
  }

  Vec product(const Vec& x, const Vec& y, const Vec& z) const;

  /// Constants of the cyclic-sum bracket {x,y,z}+{y,z,x}+{z,x,y}.
  Tensor cyclic_constants() const;

  friend bool operator==(const PreLieAlgebra& a, const PreLieAlgebra& b) {
    return a.constants_ == b.constants_;
  }

private:
  int dim_;
  Tensor constants_;
};

/// Checks [Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v) on module
/// basis triples. T maps the module of R into A (an n x m matrix). The note
/// marks the weight-zero Rota-Baxter case (R equals the adjoint action).
VerificationReport verify_o_operator(const Matrix& T, const ThreeLieAlgebra& A,
                                     const Representation& R, VerifyOptions opt = {});

struct AlgebraWithR {
  ThreeLieAlgebra algebra;
  RElement r;
};

/// Embeds T skew-symmetrically into the semidirect product by the dual
/// action; the result solves the ternary Yang-Baxter equation iff T is an
/// O-operator.
AlgebraWithR r_from_o_operator(const Matrix& T, const ThreeLieAlgebra& A,
                               const Representation& R);

/// Checks the two degree-5 identities, then the two identities derived from
/// them (a failure there alone is an internal inconsistency).
VerificationReport verify_prelie(const PreLieAlgebra& P, VerifyOptions opt = {});

/// The cyclic-sum bracket as a ternary Lie algebra; requires a valid product.
ThreeLieAlgebra subadjacent(const PreLieAlgebra& P);

/// Left multiplication L(x,y)z = {x,y,z} as an action of the sub-adjacent
/// algebra on the underlying space.
Representation left_representation(const PreLieAlgebra& P);

/// {u,v,w} = rho(Tu,Tv)w on the module of R; requires T to be an O-operator.
/// The result satisfies the product identities and T intertwines its
/// cyclic-sum bracket with the bracket of A (both re-checked).
PreLieAlgebra prelie_from_o_operator(const Matrix& T, const ThreeLieAlgebra& A,
                                     const Representation& R);

/// {x,y,z} = T rho(x,y) T^{-1} z on A itself, for invertible T; the cyclic
/// sum reproduces the bracket of A exactly (re-checked).
PreLieAlgebra compatible_prelie_from_invertible_o(const Matrix& T,
                                                  const ThreeLieAlgebra& A,
                                                  const Representation& R);

/// The compatible product determined by B({x,y,z},w) = -B(z,[x,y,w]) for a
/// skew nondegenerate form satisfying the four-argument compatibility
/// identity; the defining identity is re-verified on basis quadruples.
PreLieAlgebra prelie_from_form(const ThreeLieAlgebra& A, const Matrix& B);

/// The canonical skew solution sum_i (e_i (x) e_i^* - e_i^* (x) e_i) in the
/// semidirect product of the sub-adjacent algebra by the dual of the left
/// action.
AlgebraWithR canonical_r(const PreLieAlgebra& P);

} // namespace trilie
