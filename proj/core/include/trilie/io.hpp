#pragma once

#include "trilie/catalog.hpp"
#include "trilie/double_construction.hpp"
#include "trilie/prelie.hpp"

#include <nlohmann/json.hpp>

namespace trilie {
namespace io {

using json = nlohmann::ordered_json;

json load_json_file(const std::string& path);

/// Scalars travel as {"re": "p/q", "im": "p/q"}; "im" defaults to 0, integer
/// strings (and JSON integers) are accepted as shorthand for p/1.
Scalar scalar_from_json(const json& j);
json scalar_to_json(const Scalar& s);

/// {"dim": n, "brackets": [{"args": [i,j,k], "result": [{"idx": l,
/// "coeff": Scalar}]}]} with strictly increasing args; omitted triples are 0.
ThreeLieAlgebra algebra_from_json(const json& j);
json algebra_to_json(const ThreeLieAlgebra& A);

/// Same shape as the algebra file with args increasing in the first two
/// indices only.
PreLieAlgebra prelie_from_json(const json& j);
json prelie_to_json(const PreLieAlgebra& P);

/// {"dim": n, "entries": [{"idx": [i,j], "coeff": Scalar}], "skew_close":
/// bool}; with skew_close each entry also contributes -coeff at (j,i), and
/// listing both orientations (or a diagonal entry) is an error.
RElement r_from_json(const json& j, const ThreeLieAlgebra& A);
json r_to_json(const RElement& r);

/// {"dim": n, "delta": [{"arg": m, "terms": [{"idx": [i,j,k], "coeff":
/// Scalar}]} | {"arg": m, "wedge": [i,j,k], "coeff": Scalar}]}.
Comultiplication delta_from_json(const json& j, const ThreeLieAlgebra& A);
json delta_to_json(const Comultiplication& d);

/// Resolves an algebra reference: an inline object, a catalog name (with or
/// without the "catalog:" prefix), or a path to an algebra file.
ThreeLieAlgebra resolve_algebra(const json& ref, const std::optional<Scalar>& alpha = {});

/// {"alg": ..., "module_dim": m, "rho": [{"args": [i,j], "matrix":
/// [[Scalar,...],...]}]} with i<j; omitted pairs act as zero. "alg" may be
/// inline, a catalog name, or a path. The strings "adjoint"/"coadjoint"
/// (with "alg" alongside) name the built-in actions.
Representation representation_from_json(const json& j,
                                        const std::optional<Scalar>& alpha = {});
json representation_to_json(const Representation& R);

struct OperatorFile {
  ThreeLieAlgebra algebra;
  Representation rep;
  Matrix matrix;
};
/// {"alg": ..., "rep": ... , "matrix": [[Scalar,...],...]} where "rep" is a
/// representation object, "adjoint", "coadjoint", or a path.
OperatorFile operator_from_json(const json& j, const std::optional<Scalar>& alpha = {});

/// {"check": ..., "passed": ..., "witness": {"indices": [...], "residual":
/// Scalar, "where": ...} | null}.
json report_to_json(const VerificationReport& r);

} // namespace io
} // namespace trilie
