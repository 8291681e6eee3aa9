#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

using namespace trilie;
using trilie_test::Rng;
using trilie_test::dim3;
using trilie_test::dim4;

namespace {

// Bracket on A (+) V assembled by hand from the action, as the independent
// route against semidirect_product. Valid for any antisymmetric family, not
// just verified representations.
ThreeLieAlgebra handmade_semidirect(const ThreeLieAlgebra& A, const Representation& R) {
  const int n = A.dim();
  const int m = R.module_dim();
  Tensor c(4, n + m);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) c.at({i, j, k, l}) = A.c(i, j, k, l);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Matrix rho_ij = R.rho(i, j);
      for (int v = 1; v <= m; ++v)
        for (int w = 1; w <= m; ++w) {
          const Scalar& x = rho_ij.at(w, v);
          if (x.is_zero()) continue;
          c.at({i, j, n + v, n + w}) += x;
          c.at({n + v, i, j, n + w}) += x;
          c.at({j, n + v, i, n + w}) += x;
        }
    }
  return ThreeLieAlgebra(std::move(c));
}

Representation perturbed_coadjoint(Rng& rng, const ThreeLieAlgebra& A) {
  const int n = A.dim();
  Representation base = coadjoint_representation(A);
  std::vector<Matrix> upper;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Matrix m = base.rho_upper(i, j);
      if (rng.integer(0, 1) == 0)
        m.at(static_cast<int>(rng.integer(1, n)), static_cast<int>(rng.integer(1, n))) +=
            rng.scalar();
      upper.push_back(std::move(m));
    }
  return Representation(A, n, std::move(upper));
}

} // namespace

TEST_CASE("defining conditions on catalog actions") {
  CHECK(verify_representation(adjoint_representation(dim3())).passed);
  CHECK(verify_representation(Representation::zero(dim4(3), 2)).passed);
  CHECK(verify_representation(coadjoint_representation(dim4(1))).passed);
  CHECK(verify_representation(dual_representation(adjoint_representation(dim4(7)))).passed);
}

TEST_CASE("dual action") {
  Representation zero = Representation::zero(dim3(), 2);
  CHECK(dual_representation(zero) == zero);

  Representation adj = adjoint_representation(dim4(1));
  CHECK(dual_representation(dual_representation(adj)) == adj);

  // On the 3-dimensional algebra: the dual adjoint action of (e1,e2) sends
  // the first dual vector to minus the third.
  Representation coad = coadjoint_representation(dim3());
  CHECK(coad.rho(1, 2).column(1) == -Vec::basis(3, 3));
}

TEST_CASE("adjoint and coadjoint families") {
  CHECK(adjoint_representation(ThreeLieAlgebra::zero(3)).rho(1, 2).is_zero());
  Representation adj = adjoint_representation(dim3());
  Matrix expected(3, 3);
  expected.at(1, 1) = Scalar(1);
  CHECK(adj.rho(2, 3) == expected);
  CHECK(verify_representation(coadjoint_representation(dim3())).passed);
}

TEST_CASE("slot actions on the triple tensor space") {
  ThreeLieAlgebra Z = ThreeLieAlgebra::zero(2);
  CHECK(slot_representation(Z, 1).rho(1, 2).is_zero());
  CHECK(slot_representation(Z, 1).module_dim() == 8);

  // All three slots on the whole catalog.
  std::vector<ThreeLieAlgebra> battery{dim3(), ThreeLieAlgebra::zero(2),
                                       ThreeLieAlgebra::zero(5)};
  for (int cls = 1; cls <= 7; ++cls) {
    std::optional<Scalar> alpha;
    if (cls == 6) alpha = Scalar(1);
    battery.push_back(dim4(cls, alpha));
  }
  for (const ThreeLieAlgebra& B : battery)
    for (int slot = 1; slot <= 3; ++slot)
      CHECK(verify_representation(slot_representation(B, slot)).passed);

  ThreeLieAlgebra A = dim3();

  // Action on a rank-1 tensor: the first-slot action of (e1,e2) maps
  // e3 (x) u (x) v to [e1,e2,e3] (x) u (x) v.
  Rng rng(301);
  Representation s1 = slot_representation(A, 1);
  Vec u = rng.vec(3), v = rng.vec(3);
  Vec in(27), expected(27);
  Vec bracket = A.basis_bracket(1, 2, 3);
  for (int b = 1; b <= 3; ++b)
    for (int c = 1; c <= 3; ++c) {
      Scalar uv = u.at(b);
      uv *= v.at(c);
      in.at(triple_tuple_coord(3, b, c, 3)) = uv;
      for (int a = 1; a <= 3; ++a) {
        Scalar w = uv;
        w *= bracket.at(a);
        expected.at(triple_tuple_coord(a, b, c, 3)) += w;
      }
    }
  CHECK(s1.rho(1, 2).apply(in) == expected);

  CHECK_THROWS_AS(slot_representation(A, 0), invalid_input);
  CHECK_THROWS_AS(slot_representation(A, 4), invalid_input);
}

TEST_CASE("semidirect product and the representation condition") {
  // Zero action: the bracket vanishes whenever any argument is in the module.
  ThreeLieAlgebra A = dim3();
  ThreeLieAlgebra block = semidirect_product(A, Representation::zero(A, 2));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      for (int k = 1; k <= 5; ++k)
        if (i > 3 || j > 3 || k > 3)
          CHECK(block.basis_bracket(i, j, k).is_zero());

  ThreeLieAlgebra six = semidirect_product(A, coadjoint_representation(A));
  CHECK(six.dim() == 6);
  CHECK(verify_fundamental_identity(six).passed);

  ThreeLieAlgebra eight = semidirect_product(dim4(1), coadjoint_representation(dim4(1)));
  CHECK(eight.dim() == 8);
  CHECK(verify_fundamental_identity(eight).passed);

  // Both directions of the equivalence, on the hand-assembled sum bracket.
  Rng rng(302);
  int invalid_seen = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Representation R = perturbed_coadjoint(rng, A);
    bool rep_ok = verify_representation(R).passed;
    bool fi_ok = verify_fundamental_identity(handmade_semidirect(A, R)).passed;
    CHECK(rep_ok == fi_ok);
    if (rep_ok)
      CHECK(handmade_semidirect(A, R) == semidirect_product(A, R));
    else
      ++invalid_seen;
  }
  CHECK(invalid_seen > 0);
  CHECK_THROWS_AS(semidirect_product(A, Representation::zero(dim4(2), 1)),
                  invalid_input);
}
