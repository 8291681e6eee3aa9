#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "trilie/yang_baxter.hpp"

using namespace trilie;
using trilie_test::Rng;
using trilie_test::dim3;
using trilie_test::dim4;

namespace {

Cochain random_cochain(Rng& rng, const Representation& rep, int degree) {
  const int n = rep.algebra().dim();
  const int m = rep.module_dim();
  Cochain f = Cochain::zero(degree, rep);
  if (degree == 1) {
    int idx[1];
    for (int z = 1; z <= n; ++z) {
      idx[0] = z;
      for (int v = 1; v <= m; ++v) f.value(idx, v) = rng.scalar();
    }
  } else {
    int idx[3], mirror[3];
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int z = 1; z <= n; ++z) {
          idx[0] = a;
          idx[1] = b;
          idx[2] = z;
          mirror[0] = b;
          mirror[1] = a;
          mirror[2] = z;
          for (int v = 1; v <= m; ++v) {
            Scalar s = rng.scalar();
            f.value(idx, v) = s;
            f.value(mirror, v) = -s;
          }
        }
  }
  return f;
}

} // namespace

TEST_CASE("inner derivations are 1-cocycles for the adjoint action") {
  ThreeLieAlgebra A = dim3();
  Representation adj = adjoint_representation(A);
  Rng rng(401);
  for (int t = 0; t < 5; ++t) {
    Matrix D = A.ad(rng.vec(3), rng.vec(3));
    CHECK(coboundary(Cochain::from_matrix(adj, D)).is_zero());
    CHECK(is_one_cocycle(D, adj).passed);
  }
  CHECK(coboundary(Cochain::zero(1, adj)).is_zero());
  CHECK(is_one_cocycle(Matrix(3, 3), adj).passed);
}

TEST_CASE("the square of the coboundary vanishes") {
  Rng rng(402);
  for (const ThreeLieAlgebra& A : {dim3(), dim4(1)}) {
    for (const Representation& rep :
         {trivial_representation(A), adjoint_representation(A),
          coadjoint_representation(A)}) {
      for (int degree : {1, 2}) {
        Cochain f = random_cochain(rng, rep, degree);
        CHECK(coboundary(coboundary(f)).is_zero());
      }
    }
  }
}

TEST_CASE("the 1-cocycle identity matches a vanishing coboundary") {
  Rng rng(403);
  ThreeLieAlgebra A = dim4(4);
  Representation coad = coadjoint_representation(A);
  int cocycles_seen = 0;
  for (int t = 0; t < 8; ++t) {
    Cochain f = random_cochain(rng, coad, 1);
    bool vanishes = coboundary(f).is_zero();
    CHECK(is_one_cocycle(f.as_matrix(), coad).passed == vanishes);
    if (vanishes) ++cocycles_seen;
  }
  // Random linear maps are generically not cocycles here.
  CHECK(cocycles_seen < 8);
}

TEST_CASE("coboundary comultiplications are slot 1-cocycles") {
  Rng rng(404);
  for (const ThreeLieAlgebra& A : {dim3(), dim4(1)}) {
    RElement r = trilie_test::random_r(rng, A, false);
    DeltaTriple dt = delta_from_r(r);
    const Comultiplication* ds[3] = {&dt.d1, &dt.d2, &dt.d3};
    for (int slot = 1; slot <= 3; ++slot) {
      Representation rep = slot_representation(A, slot);
      CHECK(is_one_cocycle(ds[slot - 1]->as_linear_map(), rep).passed);
    }
  }
}

TEST_CASE("cochain validation and degree limits") {
  ThreeLieAlgebra A = dim3();
  Representation adj = adjoint_representation(A);

  // A degree-2 cochain that is not antisymmetric in its pair slot.
  std::vector<Scalar> values(27 * 3);
  values[0] = Scalar(1); // (1,1,1;1) must be zero by antisymmetry
  CHECK_THROWS_AS(Cochain(2, adj, values), invalid_input);

  CHECK_THROWS_AS(coboundary(Cochain::zero(4, adj)), invalid_input);
  CHECK_THROWS_AS(Cochain::zero(5, adj), invalid_input);
  CHECK_THROWS_AS(Cochain::zero(0, adj), invalid_input);

  // Degree bookkeeping through two applications.
  Cochain f = Cochain::zero(2, adj);
  CHECK(coboundary(f).degree() == 3);
  CHECK(coboundary(coboundary(f)).degree() == 4);
}
