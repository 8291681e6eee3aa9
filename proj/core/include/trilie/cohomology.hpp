#pragma once

#include "trilie/representation.hpp"

namespace trilie {

/// A degree-p multilinear map with values in a module: p-1 pair slots (each
/// antisymmetric) followed by a single algebra slot. Stored dense over basis
/// tuples; the trailing index runs over the module.
class Cochain {
public:
  /// values laid out row-major over (a_1,b_1,...,a_{p-1},b_{p-1},z,v) with the
  /// algebra indices in 1..n and v in 1..module_dim.
  Cochain(int degree, Representation rep, std::vector<Scalar> values);

  static Cochain zero(int degree, Representation rep);
  /// A degree-1 cochain from the matrix of a linear map A -> V.
  static Cochain from_matrix(Representation rep, const Matrix& f);

  int degree() const { return degree_; }
  int algebra_slots() const { return 2 * (degree_ - 1) + 1; }
  const Representation& rep() const { return rep_; }

  const Scalar& value(std::span<const int> algebra_idx, int module_idx) const;
  Scalar& value(std::span<const int> algebra_idx, int module_idx);
  /// Module vector at a basis tuple.
  Vec value_vec(std::span<const int> algebra_idx) const;

  bool is_zero() const;
  Matrix as_matrix() const; // degree 1 only

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.rep_ == b.rep_ && a.values_ == b.values_;
  }

private:
  std::size_t offset(std::span<const int> algebra_idx, int module_idx) const;
  int degree_;
  Representation rep_;
  std::vector<Scalar> values_;
};

/// The coboundary of a cochain of degree p <= 3. The first double sum of the
/// defining formula is taken over 1 <= j < k <= p.
Cochain coboundary(const Cochain& f);

/// Checks f([x1,x2,x3]) = rho(x1,x2)f(x3) + rho(x2,x3)f(x1) + rho(x3,x1)f(x2)
/// on basis triples; agrees with coboundary(f) == 0 for the degree-1 cochain
/// built from f.
VerificationReport is_one_cocycle(const Matrix& f, const Representation& R,
                                  VerifyOptions opt = {});

} // namespace trilie
