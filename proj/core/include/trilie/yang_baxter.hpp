#pragma once

#include "trilie/cohomology.hpp"

#include <array>

namespace trilie {

/// An element r = sum_{i,j} r_ij e_i (x) e_j of the double tensor space,
/// kept as its coefficient matrix.
class RElement {
public:
  RElement(ThreeLieAlgebra algebra, Matrix entries);

  static RElement zero(ThreeLieAlgebra algebra);

  const ThreeLieAlgebra& algebra() const { return algebra_; }
  const Matrix& entries() const { return entries_; }
  const Scalar& entry(int i, int j) const { return entries_.at(i, j); }

  bool is_skew() const;
  bool is_symmetric() const;

private:
  ThreeLieAlgebra algebra_;
  Matrix entries_;
};

/// A comultiplication into the triple tensor space, stored as the order-4
/// tensor d with Delta(e_m) = sum d(m,i,j,k) e_i (x) e_j (x) e_k.
class Comultiplication {
public:
  Comultiplication(ThreeLieAlgebra algebra, Tensor delta);

  static Comultiplication zero(ThreeLieAlgebra algebra);

  const ThreeLieAlgebra& algebra() const { return algebra_; }
  const Tensor& delta() const { return delta_; }
  const Scalar& d(int m, int i, int j, int k) const {
    return delta_.at({m, i, j, k});
  }

  /// True when every slice is antisymmetric under the first and second
  /// adjacent slot swaps (hence under all of S3), i.e. the dualized ternary
  /// operation is skew-symmetric.
  bool induces_skew_dual() const;

  bool is_zero() const { return delta_.is_zero(); }
  /// The n^3 x n matrix of the map A -> triple tensor space, with tuples
  /// flattened by triple_tuple_coord.
  Matrix as_linear_map() const;

  Comultiplication& operator+=(const Comultiplication& o);
  Comultiplication& operator*=(const Scalar& s);
  friend Comultiplication operator+(Comultiplication a, const Comultiplication& b) {
    return a += b;
  }
  friend Comultiplication operator*(const Scalar& s, Comultiplication c) {
    return c *= s;
  }
  friend bool operator==(const Comultiplication& a, const Comultiplication& b) {
    return a.algebra_ == b.algebra_ && a.delta_ == b.delta_;
  }

private:
  ThreeLieAlgebra algebra_;
  Tensor delta_;
};

struct DeltaTriple {
  Comultiplication d1, d2, d3;
  Comultiplication sum() const { return d1 + d2 + d3; }
};

/// The three coboundary-style comultiplications induced by r.
DeltaTriple delta_from_r(const RElement& r);

/// Reads the candidate ternary structure on the dual off Delta. Requires
/// induces_skew_dual; the defining five-argument identity of the result is
/// not checked here.
ThreeLieAlgebra dual_structure(const Comultiplication& delta);

/// Checks the order-5 co-Jacobi identity on every basis element; equivalent
/// to dual_structure(delta) passing verify_fundamental_identity.
VerificationReport verify_co_jacobi(const Comultiplication& delta,
                                    VerifyOptions opt = {});

/// The order-4 tensor [[r,r,r]], by direct contraction of the four-term
/// expansion against the structure constants.
Tensor triple_r_bracket(const RElement& r);

/// Bracket of three embedded copies of r sharing exactly one tensor position.
/// Each pair (p,q) places the left tensor factor of r at position p and the
/// right at q; the three entries at the shared position are bracketed, in the
/// order the pairs are listed.
Tensor mixed_triple_bracket(const RElement& r,
                            const std::array<std::pair<int, int>, 3>& pairs);

/// The three signed combinations of mixed brackets entering the general
/// (non-skew) dual-structure criterion.
std::array<Tensor, 3> rrr_variants(const RElement& r);

/// Per-basis-element breakdown of the eight summands of the criterion.
struct ThmConditionBreakdown {
  std::vector<std::array<Tensor, 8>> summands; // [x-1][term]
  std::vector<Tensor> totals;                  // [x-1]
};

/// Evaluates the eight-term order-5 condition for each basis element x; the
/// induced dual structure exists iff every total vanishes. The breakdown is
/// part of the contract (individual summands are meaningful).
VerificationReport verify_thm_condition(const RElement& r,
                                        ThmConditionBreakdown* breakdown = nullptr,
                                        VerifyOptions opt = {});

/// Passes iff [[r,r,r]] == 0.
VerificationReport is_cybe_solution(const RElement& r, VerifyOptions opt = {});

/// Checks that each Delta_i is a 1-cocycle for the i-th slot action and that
/// the summed comultiplication dualizes to a valid ternary structure.
VerificationReport verify_local_cocycle_bialgebra(const ThreeLieAlgebra& A,
                                                  const Comultiplication& d1,
                                                  const Comultiplication& d2,
                                                  const Comultiplication& d3,
                                                  VerifyOptions opt = {});

/// The linear map dual -> algebra induced by r: column a holds the image of
/// the a-th dual basis vector.
Matrix r_as_map(const RElement& r);

/// [r(xi), r(eta), r(gamma)] - r([xi,eta,gamma]*) - [[r,r,r]](xi,eta,gamma);
/// identically zero for skew r (self-test).
Vec rformula_residual(const RElement& r, const Vec& xi, const Vec& eta,
                      const Vec& gamma);

/// Contraction of the first three slots of [[r,r,r]] with dual coordinates.
Vec triple_r_contract(const Tensor& rrr, const Vec& xi, const Vec& eta,
                      const Vec& gamma);

/// The skew bilinear form x,y -> <r^{-1}(x), y> of an invertible skew r
/// (its matrix is the inverse of the coefficient matrix of r).
Matrix form_from_r(const RElement& r);

/// Checks B([x,y,z],w) - B([x,y,w],z) + B([x,z,w],y) - B([y,z,w],x) = 0 on
/// all basis quadruples.
VerificationReport verify_3sb(const ThreeLieAlgebra& A, const Matrix& B,
                              VerifyOptions opt = {});

} // namespace trilie
