#include "trilie/catalog.hpp"

namespace trilie {
namespace catalog {

namespace {

using Spec = ThreeLieAlgebra::BracketSpec;

Scalar one() { return Scalar(1); }

} // namespace

CatalogId parse_id(const std::string& text, const std::optional<Scalar>& alpha) {
  std::string name = text;
  if (name.rfind("catalog:", 0) == 0) name = name.substr(8);
  CatalogId id{};
  if (name == "dim3") {
    id.tag = CatalogId::Tag::dim3;
  } else if (name.rfind("dim4.", 0) == 0 && name.size() == 6 && name[5] >= '1' &&
             name[5] <= '7') {
    static constexpr CatalogId::Tag tags[7] = {
        CatalogId::Tag::dim4_1, CatalogId::Tag::dim4_2, CatalogId::Tag::dim4_3,
        CatalogId::Tag::dim4_4, CatalogId::Tag::dim4_5, CatalogId::Tag::dim4_6,
        CatalogId::Tag::dim4_7};
    id.tag = tags[name[5] - '1'];
  } else if (name.rfind("trivial:", 0) == 0) {
    id.tag = CatalogId::Tag::trivial;
    try {
      id.trivial_dim = std::stoi(name.substr(8));
    } catch (...) {
      throw invalid_input("malformed trivial:n catalog id: " + text);
    }
    if (id.trivial_dim < 1) throw invalid_input("trivial dimension must be >= 1");
  } else {
    throw invalid_input("unknown catalog id: " + text);
  }
  if (id.tag == CatalogId::Tag::dim4_6) {
    if (!alpha) throw invalid_input("catalog class dim4.6 requires --alpha");
    if (alpha->is_zero()) throw invalid_input("alpha must be nonzero");
    id.alpha = *alpha;
  } else if (alpha) {
    id.alpha = alpha; // tolerated, ignored
  }
  return id;
}

bool is_catalog_name(const std::string& text) {
  std::string name = text;
  if (name.rfind("catalog:", 0) == 0) name = name.substr(8);
  if (name == "dim3") return true;
  if (name.rfind("dim4.", 0) == 0 && name.size() == 6 && name[5] >= '1' &&
      name[5] <= '7')
    return true;
  if (name.rfind("trivial:", 0) == 0) return true;
  return false;
}

ThreeLieAlgebra get_algebra(const CatalogId& id) {
  using Tag = CatalogId::Tag;
  switch (id.tag) {
    case Tag::dim3:
      return ThreeLieAlgebra::from_brackets(3, {Spec{{1, 2, 3}, {{1, one()}}}});
    case Tag::dim4_1:
      return ThreeLieAlgebra::from_brackets(
          4, {Spec{{1, 2, 3}, {{4, one()}}}, Spec{{2, 3, 4}, {{1, one()}}},
              Spec{{1, 3, 4}, {{2, one()}}}, Spec{{1, 2, 4}, {{3, one()}}}});
    case Tag::dim4_2:
      return ThreeLieAlgebra::from_brackets(4, {Spec{{1, 2, 3}, {{1, one()}}}});
    case Tag::dim4_3:
      return ThreeLieAlgebra::from_brackets(4, {Spec{{2, 3, 4}, {{1, one()}}}});
    case Tag::dim4_4:
      return ThreeLieAlgebra::from_brackets(
          4, {Spec{{2, 3, 4}, {{1, one()}}}, Spec{{1, 3, 4}, {{2, one()}}}});
    case Tag::dim4_5:
      return ThreeLieAlgebra::from_brackets(
          4, {Spec{{2, 3, 4}, {{2, one()}}}, Spec{{1, 3, 4}, {{1, one()}}}});
    case Tag::dim4_6: {
      if (!id.alpha || id.alpha->is_zero())
        throw invalid_input("class dim4.6 requires a nonzero alpha");
      return ThreeLieAlgebra::from_brackets(
          4, {Spec{{2, 3, 4}, {{1, *id.alpha}, {2, one()}}},
              Spec{{1, 3, 4}, {{2, one()}}}});
    }
    case Tag::dim4_7:
      return ThreeLieAlgebra::from_brackets(
          4, {Spec{{2, 3, 4}, {{1, one()}}}, Spec{{1, 3, 4}, {{2, one()}}},
              Spec{{1, 2, 4}, {{3, one()}}}});
    case Tag::trivial:
      return ThreeLieAlgebra::zero(id.trivial_dim);
  }
  throw invalid_input("unknown catalog id");
}

std::vector<std::pair<std::string, std::string>> list_entries() {
  return {
      {"dim3", "the unique non-trivial 3-dimensional algebra: [e1,e2,e3]=e1"},
      {"dim4.1", "simple 4-dimensional class: every triple bracket hits the "
                 "remaining basis vector"},
      {"dim4.2", "[e1,e2,e3]=e1"},
      {"dim4.3", "[e2,e3,e4]=e1"},
      {"dim4.4", "[e2,e3,e4]=e1, [e1,e3,e4]=e2"},
      {"dim4.5", "[e2,e3,e4]=e2, [e1,e3,e4]=e1"},
      {"dim4.6", "[e2,e3,e4]=alpha*e1+e2, [e1,e3,e4]=e2 (requires --alpha != 0)"},
      {"dim4.7", "[e2,e3,e4]=e1, [e1,e3,e4]=e2, [e1,e2,e4]=e3"},
      {"trivial:n", "zero bracket in dimension n"},
  };
}

std::pair<ThreeLieAlgebra, Comultiplication> bialgebra_dim4() {
  ThreeLieAlgebra A = get_algebra(CatalogId{CatalogId::Tag::dim4_1});
  Tensor d(4, 4);
  const int wedge_args[4][3] = {{2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}};
  for (int m = 1; m <= 4; ++m) {
    Tensor w = wedge3(wedge_args[m - 1][0], wedge_args[m - 1][1],
                      wedge_args[m - 1][2], 4);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) d.at({m, i, j, k}) = w.at({i, j, k});
  }
  return {A, Comultiplication(A, std::move(d))};
}

Comultiplication dim3_delta_closed_form(const Scalar& r12, const Scalar& r13,
                                        const Scalar& r23) {
  ThreeLieAlgebra A = get_algebra(CatalogId{CatalogId::Tag::dim3});
  Tensor w = wedge3(1, 2, 3, 3);
  Scalar coeff1 = -(r23 * r23);
  Scalar coeff2 = r13 * r23;
  Scalar coeff3 = -(r12 * r23);
  Tensor d(4, 3);
  const Scalar* coeffs[3] = {&coeff1, &coeff2, &coeff3};
  for (int m = 1; m <= 3; ++m)
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k) {
          Scalar v = *coeffs[m - 1];
          v *= w.at({i, j, k});
          d.at({m, i, j, k}) = std::move(v);
        }
  return Comultiplication(std::move(A), std::move(d));
}

RElement dim3_skew_r(const Scalar& r12, const Scalar& r13, const Scalar& r23) {
  ThreeLieAlgebra A = get_algebra(CatalogId{CatalogId::Tag::dim3});
  Matrix m(3, 3);
  m.at(1, 2) = r12;
  m.at(2, 1) = -r12;
  m.at(1, 3) = r13;
  m.at(3, 1) = -r13;
  m.at(2, 3) = r23;
  m.at(3, 2) = -r23;
  return RElement(std::move(A), std::move(m));
}

} // namespace catalog
} // namespace trilie
