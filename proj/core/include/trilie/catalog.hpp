#pragma once

#include "trilie/yang_baxter.hpp"

#include <optional>
#include <string>

namespace trilie {
namespace catalog {

/// Built-in algebras: the unique non-trivial 3-dimensional one, the seven
/// 4-dimensional classes (class 6 takes a nonzero parameter), and the
/// zero-bracket algebra of any dimension.
struct CatalogId {
  enum class Tag { dim3, dim4_1, dim4_2, dim4_3, dim4_4, dim4_5, dim4_6, dim4_7, trivial };
  Tag tag;
  int trivial_dim = 0;            // for Tag::trivial
  std::optional<Scalar> alpha;    // for Tag::dim4_6, must be nonzero
};

/// Parses "dim3", "dim4.1".."dim4.7", "trivial:n". Class 6 requires alpha.
CatalogId parse_id(const std::string& text, const std::optional<Scalar>& alpha = {});
/// True when the string names a catalog entry (with or without a "catalog:" prefix).
bool is_catalog_name(const std::string& text);

ThreeLieAlgebra get_algebra(const CatalogId& id);

/// All catalog names with a one-line description.
std::vector<std::pair<std::string, std::string>> list_entries();

/// The simple 4-dimensional algebra together with its wedge-form
/// comultiplication (each basis vector mapped to the wedge of the others).
std::pair<ThreeLieAlgebra, Comultiplication> bialgebra_dim4();

/// The closed-form comultiplication on the 3-dimensional algebra induced by
/// the skew element with upper entries (r12, r13, r23).
Comultiplication dim3_delta_closed_form(const Scalar& r12, const Scalar& r13,
                                        const Scalar& r23);

/// The skew element itself, for cross-checks against the closed form.
RElement dim3_skew_r(const Scalar& r12, const Scalar& r13, const Scalar& r23);

} // namespace catalog
} // namespace trilie
