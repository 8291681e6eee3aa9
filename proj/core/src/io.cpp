#include "trilie/io.hpp"

#include <fstream>

namespace trilie {
namespace io {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw invalid_input(what);
}

std::array<int, 3> triple_args(const json& j) {
  require(j.is_array() && j.size() == 3, "expected a 3-element index array");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

mpq_class rational_field(const json& j, const char* what) {
  if (j.is_string()) return Scalar::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  throw invalid_input(std::string("expected a rational string for ") + what);
}

} // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer())
    return Scalar(rational_field(j, "scalar"));
  require(j.is_object(), "scalar must be an object or rational string");
  for (auto it = j.begin(); it != j.end(); ++it)
    require(it.key() == "re" || it.key() == "im",
            "unknown scalar field: " + it.key());
  mpq_class re = j.contains("re") ? rational_field(j.at("re"), "re") : mpq_class(0);
  mpq_class im = j.contains("im") ? rational_field(j.at("im"), "im") : mpq_class(0);
  return Scalar(std::move(re), std::move(im));
}

json scalar_to_json(const Scalar& s) {
  json j;
  j["re"] = rational_str(s.re());
  if (sgn(s.im()) != 0) j["im"] = rational_str(s.im());
  return j;
}

ThreeLieAlgebra algebra_from_json(const json& j) {
  require(j.is_object() && j.contains("dim"), "algebra file needs a dim field");
  const int n = j.at("dim").get<int>();
  require(n >= 1, "algebra dimension must be >= 1");
  std::vector<ThreeLieAlgebra::BracketSpec> specs;
  if (j.contains("brackets")) {
    require(j.at("brackets").is_array(), "brackets must be an array");
    for (const json& b : j.at("brackets")) {
      ThreeLieAlgebra::BracketSpec spec;
      spec.args = triple_args(b.at("args"));
      require(spec.args[0] < spec.args[1] && spec.args[1] < spec.args[2],
              "bracket args must be strictly increasing");
      require(spec.args[0] >= 1 && spec.args[2] <= n, "bracket args out of range");
      for (const json& t : b.at("result"))
        spec.result.emplace_back(t.at("idx").get<int>(),
                                 scalar_from_json(t.at("coeff")));
      specs.push_back(std::move(spec));
    }
  }
  return ThreeLieAlgebra::from_brackets(n, specs);
}

json algebra_to_json(const ThreeLieAlgebra& A) {
  const int n = A.dim();
  json out;
  out["dim"] = n;
  json brackets = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        json result = json::array();
        for (int l = 1; l <= n; ++l)
          if (!A.c(i, j, k, l).is_zero())
            result.push_back({{"idx", l}, {"coeff", scalar_to_json(A.c(i, j, k, l))}});
        if (!result.empty())
          brackets.push_back({{"args", {i, j, k}}, {"result", result}});
      }
  out["brackets"] = brackets;
  return out;
}

PreLieAlgebra prelie_from_json(const json& j) {
  require(j.is_object() && j.contains("dim"), "product file needs a dim field");
  const int n = j.at("dim").get<int>();
  require(n >= 1, "dimension must be >= 1");
  std::vector<PreLieAlgebra::ProductSpec> specs;
  if (j.contains("brackets")) {
    for (const json& b : j.at("brackets")) {
      PreLieAlgebra::ProductSpec spec;
      spec.args = triple_args(b.at("args"));
      require(spec.args[0] < spec.args[1], "product args must have args[0] < args[1]");
      require(spec.args[0] >= 1 && spec.args[1] <= n && spec.args[2] >= 1 &&
                  spec.args[2] <= n,
              "product args out of range");
      for (const json& t : b.at("result"))
        spec.result.emplace_back(t.at("idx").get<int>(),
                                 scalar_from_json(t.at("coeff")));
      specs.push_back(std::move(spec));
    }
  }
  return PreLieAlgebra::from_products(n, specs);
}

json prelie_to_json(const PreLieAlgebra& P) {
  const int n = P.dim();
  json out;
  out["dim"] = n;
  json brackets = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        json result = json::array();
        for (int l = 1; l <= n; ++l)
          if (!P.p(i, j, k, l).is_zero())
            result.push_back({{"idx", l}, {"coeff", scalar_to_json(P.p(i, j, k, l))}});
        if (!result.empty())
          brackets.push_back({{"args", {i, j, k}}, {"result", result}});
      }
  out["brackets"] = brackets;
  return out;
}

RElement r_from_json(const json& j, const ThreeLieAlgebra& A) {
  require(j.is_object() && j.contains("dim"), "r file needs a dim field");
  const int n = j.at("dim").get<int>();
  require(n == A.dim(), "r dimension does not match the algebra");
  const bool skew_close = j.value("skew_close", false);
  Matrix entries(n, n);
  std::vector<std::vector<bool>> listed(n + 1, std::vector<bool>(n + 1, false));
  if (j.contains("entries")) {
    for (const json& e : j.at("entries")) {
      const json& idx = e.at("idx");
      require(idx.is_array() && idx.size() == 2, "r entry idx must be [i,j]");
      int a = idx[0].get<int>(), b = idx[1].get<int>();
      require(a >= 1 && a <= n && b >= 1 && b <= n, "r entry index out of range");
      Scalar coeff = scalar_from_json(e.at("coeff"));
      if (skew_close) {
        require(a != b, "diagonal entry with skew_close");
        require(!listed[b][a], "both orientations listed with skew_close");
        require(!listed[a][b], "duplicate entry with skew_close");
        listed[a][b] = true;
        entries.at(a, b) += coeff;
        entries.at(b, a) -= coeff;
      } else {
        entries.at(a, b) += coeff;
      }
    }
  }
  return RElement(A, std::move(entries));
}

json r_to_json(const RElement& r) {
  const int n = r.algebra().dim();
  json out;
  out["dim"] = n;
  json entries = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!r.entry(i, j).is_zero())
        entries.push_back({{"idx", {i, j}}, {"coeff", scalar_to_json(r.entry(i, j))}});
  out["entries"] = entries;
  out["skew_close"] = false;
  return out;
}

Comultiplication delta_from_json(const json& j, const ThreeLieAlgebra& A) {
  require(j.is_object() && j.contains("dim"), "delta file needs a dim field");
  const int n = j.at("dim").get<int>();
  require(n == A.dim(), "delta dimension does not match the algebra");
  Tensor d(4, n);
  if (j.contains("delta")) {
    for (const json& e : j.at("delta")) {
      const int m = e.at("arg").get<int>();
      require(m >= 1 && m <= n, "delta arg out of range");
      if (e.contains("wedge")) {
        auto w = triple_args(e.at("wedge"));
        Scalar coeff = e.contains("coeff") ? scalar_from_json(e.at("coeff")) : Scalar(1);
        Tensor t = wedge3(w[0], w[1], w[2], n);
        for (int i = 1; i <= n; ++i)
          for (int jj = 1; jj <= n; ++jj)
            for (int k = 1; k <= n; ++k)
              d.at({m, i, jj, k}).add_product(coeff, t.at({i, jj, k}));
      }
      if (e.contains("terms")) {
        for (const json& t : e.at("terms")) {
          auto idx = triple_args(t.at("idx"));
          require(idx[0] >= 1 && idx[0] <= n && idx[1] >= 1 && idx[1] <= n &&
                      idx[2] >= 1 && idx[2] <= n,
                  "delta term index out of range");
          d.at({m, idx[0], idx[1], idx[2]}) += scalar_from_json(t.at("coeff"));
        }
      }
    }
  }
  return Comultiplication(A, std::move(d));
}

json delta_to_json(const Comultiplication& delta) {
  const int n = delta.algebra().dim();
  json out;
  out["dim"] = n;
  json arr = json::array();
  for (int m = 1; m <= n; ++m) {
    json terms = json::array();
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (!delta.d(m, i, j, k).is_zero())
            terms.push_back(
                {{"idx", {i, j, k}}, {"coeff", scalar_to_json(delta.d(m, i, j, k))}});
    if (!terms.empty()) arr.push_back({{"arg", m}, {"terms", terms}});
  }
  out["delta"] = arr;
  return out;
}

ThreeLieAlgebra resolve_algebra(const json& ref, const std::optional<Scalar>& alpha) {
  if (ref.is_object()) return algebra_from_json(ref);
  require(ref.is_string(), "algebra reference must be an object or string");
  const std::string name = ref.get<std::string>();
  if (catalog::is_catalog_name(name))
    return catalog::get_algebra(catalog::parse_id(name, alpha));
  return algebra_from_json(load_json_file(name));
}

Representation representation_from_json(const json& j,
                                        const std::optional<Scalar>& alpha) {
  require(j.is_object(), "representation must be an object");
  require(j.contains("alg"), "representation file needs an alg field");
  ThreeLieAlgebra A = resolve_algebra(j.at("alg"), alpha);
  const int n = A.dim();
  if (j.contains("builtin")) {
    const std::string which = j.at("builtin").get<std::string>();
    if (which == "adjoint") return adjoint_representation(A);
    if (which == "coadjoint") return coadjoint_representation(A);
    throw invalid_input("unknown builtin representation: " + which);
  }
  require(j.contains("module_dim"), "representation file needs module_dim");
  const int m = j.at("module_dim").get<int>();
  std::vector<Matrix> upper(Representation::pair_count(n), Matrix(m, m));
  if (j.contains("rho")) {
    for (const json& e : j.at("rho")) {
      const json& args = e.at("args");
      require(args.is_array() && args.size() == 2, "rho args must be [i,j]");
      int a = args[0].get<int>(), b = args[1].get<int>();
      require(1 <= a && a < b && b <= n, "rho args must satisfy i < j");
      const json& rows = e.at("matrix");
      require(rows.is_array() && static_cast<int>(rows.size()) == m,
              "rho matrix must be module_dim x module_dim");
      Matrix mat(m, m);
      for (int r = 1; r <= m; ++r) {
        require(rows[r - 1].is_array() && static_cast<int>(rows[r - 1].size()) == m,
                "rho matrix must be module_dim x module_dim");
        for (int c = 1; c <= m; ++c)
          mat.at(r, c) = scalar_from_json(rows[r - 1][c - 1]);
      }
      upper[Representation::pair_index(a, b, n)] = std::move(mat);
    }
  }
  return Representation(std::move(A), m, std::move(upper));
}

json representation_to_json(const Representation& R) {
  const int n = R.algebra().dim();
  const int m = R.module_dim();
  json out;
  out["alg"] = algebra_to_json(R.algebra());
  out["module_dim"] = m;
  json rho = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Matrix& mat = R.rho_upper(i, j);
      if (mat.is_zero()) continue;
      json rows = json::array();
      for (int r = 1; r <= m; ++r) {
        json row = json::array();
        for (int c = 1; c <= m; ++c) row.push_back(scalar_to_json(mat.at(r, c)));
        rows.push_back(row);
      }
      rho.push_back({{"args", {i, j}}, {"matrix", rows}});
    }
  out["rho"] = rho;
  return out;
}

OperatorFile operator_from_json(const json& j, const std::optional<Scalar>& alpha) {
  require(j.is_object() && j.contains("alg") && j.contains("rep") &&
              j.contains("matrix"),
          "operator file needs alg, rep and matrix fields");
  ThreeLieAlgebra A = resolve_algebra(j.at("alg"), alpha);
  Representation R = [&]() {
    const json& rep = j.at("rep");
    if (rep.is_string()) {
      const std::string name = rep.get<std::string>();
      if (name == "adjoint") return adjoint_representation(A);
      if (name == "coadjoint") return coadjoint_representation(A);
      return representation_from_json(load_json_file(name), alpha);
    }
    return representation_from_json(rep, alpha);
  }();
  require(R.algebra() == A, "operator rep acts on a different algebra");
  const json& rows = j.at("matrix");
  const int n = A.dim();
  const int m = R.module_dim();
  require(rows.is_array() && static_cast<int>(rows.size()) == n,
          "operator matrix must be dim x module_dim");
  Matrix T(n, m);
  for (int r = 1; r <= n; ++r) {
    require(rows[r - 1].is_array() && static_cast<int>(rows[r - 1].size()) == m,
            "operator matrix must be dim x module_dim");
    for (int c = 1; c <= m; ++c) T.at(r, c) = scalar_from_json(rows[r - 1][c - 1]);
  }
  return OperatorFile{std::move(A), std::move(R), std::move(T)};
}

json report_to_json(const VerificationReport& r) {
  json out;
  out["check"] = r.check;
  out["passed"] = r.passed;
  if (r.witness) {
    json w;
    w["indices"] = r.witness->indices;
    w["residual"] = scalar_to_json(r.witness->residual);
    if (!r.witness->where.empty()) w["where"] = r.witness->where;
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

} // namespace io
} // namespace trilie
