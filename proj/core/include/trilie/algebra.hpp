#pragma once

#include "trilie/matrix.hpp"
#include "trilie/report.hpp"
#include "trilie/tensor.hpp"

#include <array>
#include <vector>

namespace trilie {

/// A finite-dimensional algebra with a totally antisymmetric ternary bracket,
/// held as dense structure constants c(i,j,k,l): the coefficient of e_l in
/// [e_i,e_j,e_k]. Antisymmetry in (i,j,k) is validated at construction;
/// whether the bracket satisfies the defining five-argument identity is a
/// separate check (verify_fundamental_identity).
class ThreeLieAlgebra {
public:
  /// Wraps validated structure constants (order-4 tensor).
  explicit ThreeLieAlgebra(Tensor constants);

  static ThreeLieAlgebra zero(int dim);

  /// A single generator of the constants: [e_{args[0]}, e_{args[1]}, e_{args[2]}]
  /// picks up result[t].second at coordinate result[t].first. Indices must be
  /// strictly increasing; the full antisymmetric orbit is generated.
  struct BracketSpec {
    std::array<int, 3> args;
    std::vector<std::pair<int, Scalar>> result;
  };
  static ThreeLieAlgebra from_brackets(int dim, const std::vector<BracketSpec>& brackets);

  int dim() const { return dim_; }
  const Tensor& constants() const { return constants_; }
  const Scalar& c(int i, int j, int k, int l) const {
    return constants_.at({i, j, k, l});
  }

  Vec basis_bracket(int i, int j, int k) const;
  Vec bracket(const Vec& x, const Vec& y, const Vec& z) const;

  /// Matrix of z -> [e_i, e_j, z].
  Matrix ad_basis(int i, int j) const;
  /// Matrix of z -> [x, y, z].
  Matrix ad(const Vec& x, const Vec& y) const;

  friend bool operator==(const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) {
    return a.constants_ == b.constants_;
  }

private:
  int dim_;
  Tensor constants_;
};

/// Checks the five-argument defining identity
///   [x1,x2,[x3,x4,x5]] = [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]
/// on basis tuples with i1<i2 and i3<i4<i5 (the rest follow by antisymmetry
/// and multilinearity).
VerificationReport verify_fundamental_identity(const ThreeLieAlgebra& A,
                                               VerifyOptions opt = {});

/// Checks the equivalent pair of degree-5 identities; the witness records
/// which of the two failed ("identity-a" / "identity-b").
VerificationReport verify_equivalent_identities(const ThreeLieAlgebra& A,
                                                VerifyOptions opt = {});

/// Checks D[x,y,z] = [Dx,y,z] + [x,Dy,z] + [x,y,Dz] on basis triples.
VerificationReport is_derivation(const ThreeLieAlgebra& A, const Matrix& D,
                                 VerifyOptions opt = {});

} // namespace trilie
