#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "trilie/io.hpp"

using namespace trilie;
using trilie_test::Rng;
using trilie_test::dim3;
using trilie_test::dim4;

TEST_CASE("catalog constructors") {
  ThreeLieAlgebra A3 = dim3();
  CHECK(A3.basis_bracket(1, 2, 3) == Vec::basis(3, 1));
  for (int i = 1; i <= 3; ++i)
    CHECK(A3.basis_bracket(1, 2, 3).at(i) == (i == 1 ? Scalar(1) : Scalar(0)));

  ThreeLieAlgebra A44 = dim4(4);
  CHECK(A44.basis_bracket(2, 3, 4) == Vec::basis(4, 1));
  CHECK(A44.basis_bracket(1, 3, 4) == Vec::basis(4, 2));
  CHECK(A44.basis_bracket(1, 2, 3).is_zero());

  ThreeLieAlgebra T5 = catalog::get_algebra(catalog::parse_id("trivial:5"));
  CHECK(T5.dim() == 5);
  CHECK(T5.constants().is_zero());

  ThreeLieAlgebra A46 = dim4(6, Scalar(-3, 2));
  CHECK(A46.basis_bracket(2, 3, 4).at(1) == Scalar(-3, 2));
  CHECK(A46.basis_bracket(2, 3, 4).at(2) == Scalar(1));
  CHECK(verify_fundamental_identity(A46).passed);

  CHECK_THROWS_AS(catalog::parse_id("dim5"), invalid_input);
  CHECK_THROWS_AS(catalog::parse_id("dim4.8"), invalid_input);
  CHECK_THROWS_AS(catalog::parse_id("dim4.6"), invalid_input); // alpha missing
  CHECK_THROWS_AS(catalog::parse_id("dim4.6", Scalar(0)), invalid_input);
  CHECK_THROWS_AS(catalog::parse_id("trivial:0"), invalid_input);
  CHECK(catalog::is_catalog_name("catalog:dim3"));
  CHECK(catalog::is_catalog_name("dim4.2"));
  CHECK(!catalog::is_catalog_name("some/file.json"));
  CHECK(catalog::list_entries().size() == 9);
}

TEST_CASE("closed-form comultiplication on the 3-dimensional algebra") {
  CHECK(catalog::dim3_delta_closed_form(Scalar(2), Scalar(5), Scalar(0)).is_zero());

  Comultiplication d = catalog::dim3_delta_closed_form(Scalar(0), Scalar(0), Scalar(1));
  Tensor w = wedge3(1, 2, 3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        CHECK(d.d(1, i, j, k) == -w.at({i, j, k}));
        CHECK(d.d(2, i, j, k).is_zero());
        CHECK(d.d(3, i, j, k).is_zero());
      }

  Rng rng(801);
  for (int t = 0; t < 20; ++t) {
    Scalar r12 = rng.scalar(), r13 = rng.scalar(), r23 = rng.scalar();
    CHECK(catalog::dim3_delta_closed_form(r12, r13, r23) ==
          delta_from_r(catalog::dim3_skew_r(r12, r13, r23)).sum());
  }
}

TEST_CASE("scalar serialization") {
  CHECK(io::scalar_from_json(io::json::parse(R"({"re":"3/6"})")) == Scalar(1, 2));
  CHECK(io::scalar_from_json(io::json::parse(R"({"re":"-2","im":"1/3"})")) ==
        Scalar(mpq_class(-2), mpq_class(1, 3)));
  CHECK(io::scalar_from_json(io::json::parse("\"7\"")) == Scalar(7));
  CHECK(io::scalar_from_json(io::json::parse("-4")) == Scalar(-4));
  CHECK(io::scalar_from_json(io::json::parse("{}")) == Scalar(0));

  CHECK(io::scalar_to_json(Scalar(1, 2)) == io::json::parse(R"({"re":"1/2"})"));
  CHECK(io::scalar_to_json(Scalar(mpq_class(0), mpq_class(-1))) ==
        io::json::parse(R"({"re":"0","im":"-1"})"));

  CHECK_THROWS_AS(io::scalar_from_json(io::json::parse(R"({"re":"1/0"})")),
                  invalid_input);
  CHECK_THROWS_AS(io::scalar_from_json(io::json::parse(R"({"er":"1"})")),
                  invalid_input);
  CHECK_THROWS_AS(io::scalar_from_json(io::json::parse("1.5")), invalid_input);
}

TEST_CASE("algebra file round trip") {
  Rng rng(802);
  for (const ThreeLieAlgebra& A :
       {dim3(), dim4(1), dim4(6, Scalar(2)), trilie_test::random_skew_constants(rng, 4)}) {
    CHECK(io::algebra_from_json(io::algebra_to_json(A)) == A);
  }
  CHECK_THROWS_AS(
      io::algebra_from_json(io::json::parse(
          R"({"dim":3,"brackets":[{"args":[2,1,3],"result":[{"idx":1,"coeff":"1"}]}]})")),
      invalid_input);
  CHECK_THROWS_AS(io::algebra_from_json(io::json::parse(R"({"brackets":[]})")),
                  invalid_input);
}

TEST_CASE("element and comultiplication file round trips") {
  ThreeLieAlgebra A = dim3();
  Rng rng(803);
  for (int t = 0; t < 5; ++t) {
    RElement r = trilie_test::random_r(rng, A, t % 2 == 0);
    RElement back = io::r_from_json(io::r_to_json(r), A);
    CHECK(back.entries() == r.entries());
  }

  // skew_close expands each listed entry.
  RElement closed = io::r_from_json(
      io::json::parse(
          R"({"dim":3,"entries":[{"idx":[1,2],"coeff":"1"},{"idx":[2,3],"coeff":"1/2"}],"skew_close":true})"),
      A);
  CHECK(closed.entries() ==
        catalog::dim3_skew_r(Scalar(1), Scalar(0), Scalar(1, 2)).entries());
  CHECK_THROWS_AS(
      io::r_from_json(io::json::parse(R"({"dim":3,"entries":[{"idx":[1,2],"coeff":"1"},
        {"idx":[2,1],"coeff":"-1"}],"skew_close":true})"),
                      A),
      invalid_input);
  CHECK_THROWS_AS(
      io::r_from_json(
          io::json::parse(R"({"dim":3,"entries":[{"idx":[2,2],"coeff":"1"}],"skew_close":true})"),
          A),
      invalid_input);

  // Wedge shorthand in the comultiplication file.
  Comultiplication d = io::delta_from_json(
      io::json::parse(R"({"dim":3,"delta":[{"arg":1,"wedge":[1,2,3],"coeff":"-1"}]})"),
      A);
  CHECK(d == catalog::dim3_delta_closed_form(Scalar(0), Scalar(0), Scalar(1)));
  Comultiplication back = io::delta_from_json(io::delta_to_json(d), A);
  CHECK(back == d);
}

TEST_CASE("representation and operator files") {
  ThreeLieAlgebra A = dim3();
  Representation adj = adjoint_representation(A);
  Representation round = io::representation_from_json(io::representation_to_json(adj));
  CHECK(round == adj);

  io::json op;
  op["alg"] = "dim3";
  op["rep"] = "coadjoint";
  op["matrix"] = io::json::array();
  Matrix T = r_as_map(catalog::dim3_skew_r(Scalar(1), Scalar(1, 2), Scalar(1)));
  for (int r = 1; r <= 3; ++r) {
    io::json row = io::json::array();
    for (int c = 1; c <= 3; ++c) row.push_back(rational_str(T.at(r, c).re()));
    op["matrix"].push_back(row);
  }
  io::OperatorFile of = io::operator_from_json(op);
  CHECK(of.algebra == A);
  CHECK(of.rep == coadjoint_representation(A));
  CHECK(of.matrix == T);
  CHECK(verify_o_operator(of.matrix, of.algebra, of.rep).passed);
}

TEST_CASE("report serialization") {
  VerificationReport rep = verify_invariance(
      dim3(), BilinearForm(Matrix::identity(3), FormSymmetry::symmetric));
  io::json j = io::report_to_json(rep);
  CHECK(j.at("check") == "invariance");
  CHECK(j.at("passed") == false);
  CHECK(j.at("witness").at("indices") == io::json::array({1, 2, 1, 3}));
  CHECK(j.at("witness").at("residual").at("re") == "1");

  VerificationReport ok = verify_fundamental_identity(dim3());
  io::json jok = io::report_to_json(ok);
  CHECK(jok.at("passed") == true);
  CHECK(jok.at("witness").is_null());
}
