#pragma once

#include "trilie/linsolve.hpp"
#include "trilie/yang_baxter.hpp"

#include <set>

namespace trilie {

enum class FormSymmetry { symmetric, skew, general };

/// A bilinear form with a declared (and validated) symmetry type.
class BilinearForm {
public:
  BilinearForm(Matrix matrix, FormSymmetry tag);

  int dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }
  FormSymmetry tag() const { return tag_; }
  bool is_nondegenerate() const { return matrix_.is_invertible(); }

private:
  Matrix matrix_;
  FormSymmetry tag_;
};

/// The 2n x 2n pairing <x + xi, y + eta> = <x, eta> + <xi, y> on the double
/// space, primal coordinates first.
BilinearForm plus_form(int n);

/// The eight-term bracket on the double space assembled from the coadjoint
/// actions of both algebras. The result is a candidate: its five-argument
/// identity is NOT assumed and must be verified separately.
ThreeLieAlgebra double_bracket(const ThreeLieAlgebra& A, const ThreeLieAlgebra& Astar);

/// Checks ([x1,x2,x3],x4) + ([x1,x2,x4],x3) = 0 on basis quadruples.
VerificationReport verify_invariance(const ThreeLieAlgebra& A, const BilinearForm& B,
                                     VerifyOptions opt = {});

/// Invariant + symmetric + nondegenerate.
VerificationReport is_pseudo_metric(const ThreeLieAlgebra& A, const BilinearForm& B,
                                    VerifyOptions opt = {});

/// Assembles the double bracket and the standard pairing, then checks the
/// whole package: the five-argument identity of the double, isotropy and
/// closure of both halves, the two projection conditions, and invariance.
VerificationReport verify_manin_triple(const ThreeLieAlgebra& A,
                                       const ThreeLieAlgebra& Astar,
                                       VerifyOptions opt = {});

struct MatchedPairData {
  ThreeLieAlgebra A;
  ThreeLieAlgebra Aprime;
  Representation rho; // action of A on the space of Aprime
  Representation mu;  // action of Aprime on the space of A
};

/// Checks the six compatibility equations on basis tuples. The witness names
/// the violated equation ("deri1", "mp2", "mp3", "deri2", "mp5", "mp6"). In
/// "mp6" the inner action on the primal side is read as mu, the only
/// type-correct interpretation; the report notes this.
VerificationReport verify_matched_pair(const MatchedPairData& M, VerifyOptions opt = {});

/// The bracket on the direct sum induced by the pair of mutual actions.
ThreeLieAlgebra matched_pair_bracket(const MatchedPairData& M);

/// The coadjoint-pair specialization: only "deri1", "mp2", "mp3" need
/// checking; agrees with the full check for this pair.
VerificationReport verify_matched_pair_reduced(const ThreeLieAlgebra& A,
                                               const ThreeLieAlgebra& Astar,
                                               VerifyOptions opt = {});

enum class BialgebraEq {
  b1,
  b2,
  b3,
  b1_variant_mid,
  b1_variant_left,
  b2_variant_y,
  b2_variant_z,
  b3_variant_a,
  b3_variant_b,
  derivation_style,
};

const char* bialgebra_eq_name(BialgebraEq eq);

/// Evaluates each selected identity on all basis triples; one report per
/// equation, in the order requested.
std::vector<VerificationReport> verify_bialgebra_equations(
    const ThreeLieAlgebra& A, const Comultiplication& delta,
    const std::vector<BialgebraEq>& which, VerifyOptions opt = {});

/// Cross-validates the three equivalent characterizations (b1 and b2; the
/// standard Manin triple; the coadjoint matched pair). Passes iff all three
/// agree; disagreement is an internal toolkit fault, not a data property.
VerificationReport theorem_relations(const ThreeLieAlgebra& A,
                                     const Comultiplication& delta,
                                     VerifyOptions opt = {});

enum class BialgebraConstraint { skew, b1, b2 };

/// Assembles the selected constraints as one exact homogeneous linear system
/// in the n^4 comultiplication coefficients d(m,i,j,k) and returns its
/// kernel. Unknown order: (m,i,j,k) row-major.
LinearSolveResult solve_bialgebra_space(const ThreeLieAlgebra& A,
                                        const std::set<BialgebraConstraint>& constraints);

/// The constraint rows alone (for membership checks).
std::vector<SparseRow> bialgebra_space_equations(
    const ThreeLieAlgebra& A, const std::set<BialgebraConstraint>& constraints);

/// Flattened coefficient vector of a comultiplication in the unknown order
/// used by solve_bialgebra_space.
std::vector<Scalar> delta_coefficient_vector(const Comultiplication& delta);

/// Splits a comultiplication satisfying b1, b2 (with valid dual) into three
/// weighted copies k1, k2, k3 with k1+k2+k3 = 1; the triple passes the local
/// cocycle check.
DeltaTriple local_from_double(const ThreeLieAlgebra& A, const Comultiplication& delta,
                              const Scalar& k1, const Scalar& k2, const Scalar& k3);

} // namespace trilie
