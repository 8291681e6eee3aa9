#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "trilie/linsolve.hpp"

using namespace trilie;
using trilie_test::Rng;
using trilie_test::basis_tensor;
using trilie_test::random_tensor;

TEST_CASE("scalar arithmetic is exact field arithmetic") {
  Rng rng(101);
  for (int t = 0; t < 50; ++t) {
    Scalar a = rng.scalar(), b = rng.scalar(), c = rng.scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Scalar(1));
      CHECK(b / a * a == b);
    }
  }
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  // (1+2i)(3+4i) = -5+10i
  Scalar z = (Scalar(1) + Scalar(2) * Scalar::i()) * (Scalar(3) + Scalar(4) * Scalar::i());
  CHECK(z == Scalar(mpq_class(-5), mpq_class(10)));
  CHECK(z.conj() == Scalar(mpq_class(-5), mpq_class(-10)));
  CHECK_THROWS_AS(Scalar().inverse(), invalid_input);
}

TEST_CASE("rational parsing and lowest-terms rendering") {
  CHECK(Scalar::parse_rational("3/6") == mpq_class(1, 2));
  CHECK(Scalar::parse_rational("-4/2") == mpq_class(-2));
  CHECK(Scalar::parse_rational("7") == mpq_class(7));
  CHECK(Scalar(mpq_class(1, 2), mpq_class(-3, 4)).str() == "1/2-3/4i");
  CHECK(Scalar(mpq_class(0), mpq_class(1)).str() == "1i");
  CHECK(Scalar().str() == "0");
  CHECK_THROWS_AS(Scalar::parse_rational("1/0"), invalid_input);
  CHECK_THROWS_AS(Scalar::parse_rational("a"), invalid_input);
  CHECK_THROWS_AS(Scalar::parse_rational("1/2/3"), invalid_input);
  CHECK_THROWS_AS(Scalar::parse_rational(""), invalid_input);
}

TEST_CASE("switching swaps slots and is an involution") {
  CHECK(switching(basis_tensor(3, {1, 2, 3}), 1, 2) == basis_tensor(3, {2, 1, 3}));

  Rng rng(102);
  for (int t = 0; t < 10; ++t) {
    Tensor x = random_tensor(rng, 3, 3);
    CHECK(switching(switching(x, 1, 3), 1, 3) == x);
    CHECK(switching(switching(x, 2, 3), 2, 3) == x);
  }

  // Composing the (2,3) and (1,2) swaps sends x(x)y(x)z to z(x)x(x)y.
  Tensor t = basis_tensor(4, {2, 3, 4});
  CHECK(switching(switching(t, 2, 3), 1, 2) == basis_tensor(4, {4, 2, 3}));

  CHECK_THROWS_AS(switching(basis_tensor(3, {1, 2, 3}), 2, 2), invalid_input);
  CHECK_THROWS_AS(switching(basis_tensor(3, {1, 2, 3}), 1, 4), invalid_input);
  CHECK_THROWS_AS(switching(basis_tensor(3, {1}), 1, 1), invalid_input);
}

TEST_CASE("wedge3 is the unnormalized alternating sum") {
  Tensor w = wedge3(1, 2, 3, 3);
  int nonzero = 0;
  std::vector<int> idx(3, 1);
  do {
    const Scalar& v = w.at(idx);
    if (!v.is_zero()) {
      ++nonzero;
      CHECK((v == Scalar(1) || v == Scalar(-1)));
    }
  } while (next_tuple(idx, 3));
  CHECK(nonzero == 6);
  CHECK(w.at({1, 2, 3}) == Scalar(1));
  CHECK(w.at({2, 1, 3}) == Scalar(-1));

  CHECK(wedge3(1, 1, 2, 3).is_zero());
  CHECK(wedge3(2, 1, 3, 3) == -wedge3(1, 2, 3, 3));

  // Total antisymmetry: any slot swap negates.
  for (int i = 1; i <= 2; ++i)
    for (int j = i + 1; j <= 3; ++j) CHECK(switching(w, i, j) == -w);

  CHECK_THROWS_AS(wedge3(0, 1, 2, 3), invalid_input);
  CHECK_THROWS_AS(wedge3(1, 2, 4, 3), invalid_input);
}

TEST_CASE("insert_at places an order-1 factor at the chosen position") {
  Tensor t = basis_tensor(3, {1, 2, 3, 1});
  Tensor a = basis_tensor(3, {2});
  CHECK(insert_at(t, a, 2) == basis_tensor(3, {1, 2, 2, 3, 1}));
  CHECK(insert_at(t, a, 5) == basis_tensor(3, {1, 2, 3, 1, 2}));
  CHECK(insert_at(Tensor(4, 3), a, 1).is_zero());

  Rng rng(103);
  Tensor rt = random_tensor(rng, 4, 2);
  Tensor ra(1, 2);
  ra.at({1}) = rng.scalar();
  ra.at({2}) = rng.scalar();
  Tensor ins = insert_at(rt, ra, 3);
  CHECK(ins.at({2, 1, 2, 1, 2}) == ra.at({2}) * rt.at({2, 1, 1, 2}));

  CHECK_THROWS_AS(insert_at(rt, basis_tensor(3, {1}), 1), invalid_input);
  CHECK_THROWS_AS(insert_at(rt, ra, 0), invalid_input);
  CHECK_THROWS_AS(insert_at(rt, ra, 6), invalid_input);
}

TEST_CASE("tensor indexing rejects out-of-range access") {
  Tensor t(2, 3);
  CHECK_THROWS_AS(t.at({0, 1}), invalid_input);
  CHECK_THROWS_AS(t.at({1, 4}), invalid_input);
  CHECK_THROWS_AS(t.at({1}), invalid_input);
}

TEST_CASE("linear solve: pinned examples") {
  // {x1 = 0} in two unknowns.
  LinearSolveResult r = solve_linear({{{0, Scalar(1)}}}, 2);
  CHECK(r.rank == 1);
  REQUIRE(r.kernel_basis.size() == 1);
  CHECK(r.kernel_basis[0].at({1}) == Scalar(0));
  CHECK(r.kernel_basis[0].at({2}) == Scalar(1));

  // Empty system in m unknowns.
  LinearSolveResult e = solve_linear({}, 5);
  CHECK(e.rank == 0);
  CHECK(e.kernel_basis.size() == 5);
}

TEST_CASE("linear solve: kernel vectors satisfy every equation exactly") {
  Rng rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    const int unknowns = 6;
    std::vector<SparseRow> rows;
    for (int i = 0, m = static_cast<int>(rng.integer(1, 8)); i < m; ++i) {
      SparseRow row;
      for (int c = 0; c < unknowns; ++c)
        if (rng.integer(0, 1) == 0) row.emplace_back(c, rng.scalar());
      rows.push_back(std::move(row));
    }
    LinearSolveResult res = solve_linear(rows, unknowns);
    CHECK(res.rank + static_cast<int>(res.kernel_basis.size()) == unknowns);
    for (const Tensor& k : res.kernel_basis) {
      std::vector<Scalar> cand(unknowns);
      for (int c = 0; c < unknowns; ++c) cand[c] = k.at({c + 1});
      CHECK(satisfies(rows, cand));
    }
  }
}
