#include "trilie/algebra.hpp"

#include <array>

namespace trilie {

ThreeLieAlgebra::ThreeLieAlgebra(Tensor constants)
    : dim_(constants.dim()), constants_(std::move(constants)) {
  if (constants_.order() != 4)
    throw invalid_input("structure constants must form an order-4 tensor");
  const int n = dim_;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          const Scalar& v = constants_.at({i, j, k, l});
          if (constants_.at({j, i, k, l}) != -v ||
              constants_.at({i, k, j, l}) != -v)
            throw invalid_input("structure constants are not antisymmetric");
        }
}

ThreeLieAlgebra ThreeLieAlgebra::zero(int dim) {
  return ThreeLieAlgebra(Tensor(4, dim));
}

ThreeLieAlgebra ThreeLieAlgebra::from_brackets(int dim,
                                               const std::vector<BracketSpec>& brackets) {
  Tensor c(4, dim);
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  for (const BracketSpec& b : brackets) {
    if (!(b.args[0] < b.args[1] && b.args[1] < b.args[2]))
      throw invalid_input("bracket arguments must be strictly increasing");
    for (const auto& [l, coeff] : b.result) {
      if (l < 1 || l > dim) throw invalid_input("bracket result index out of range");
      for (std::size_t p = 0; p < perms.size(); ++p) {
        Scalar signed_coeff = p < 3 ? coeff : -coeff;
        c.at({b.args[perms[p][0]], b.args[perms[p][1]], b.args[perms[p][2]], l}) +=
            signed_coeff;
      }
    }
  }
  return ThreeLieAlgebra(std::move(c));
}

Vec ThreeLieAlgebra::basis_bracket(int i, int j, int k) const {
  Vec out(dim_);
  for (int l = 1; l <= dim_; ++l) out.at(l) = c(i, j, k, l);
  return out;
}

Vec ThreeLieAlgebra::bracket(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.dim() != dim_ || y.dim() != dim_ || z.dim() != dim_)
    throw invalid_input("bracket argument dimension mismatch");
  Vec out(dim_);
  for (int i = 1; i <= dim_; ++i) {
    if (x.at(i).is_zero()) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (y.at(j).is_zero()) continue;
      Scalar xy = x.at(i);
      xy *= y.at(j);
      for (int k = 1; k <= dim_; ++k) {
        if (z.at(k).is_zero()) continue;
        Scalar w = xy;
        w *= z.at(k);
        for (int l = 1; l <= dim_; ++l) out.at(l).add_product(w, c(i, j, k, l));
      }
    }
  }
  return out;
}

Matrix ThreeLieAlgebra::ad_basis(int i, int j) const {
  Matrix m(dim_, dim_);
  for (int k = 1; k <= dim_; ++k)
    for (int l = 1; l <= dim_; ++l) m.at(l, k) = c(i, j, k, l);
  return m;
}

Matrix ThreeLieAlgebra::ad(const Vec& x, const Vec& y) const {
  if (x.dim() != dim_ || y.dim() != dim_)
    throw invalid_input("ad argument dimension mismatch");
  Matrix m(dim_, dim_);
  for (int i = 1; i <= dim_; ++i) {
    if (x.at(i).is_zero()) continue;
    for (int j = 1; j <= dim_; ++j) {
      if (y.at(j).is_zero()) continue;
      Scalar w = x.at(i);
      w *= y.at(j);
      for (int k = 1; k <= dim_; ++k)
        for (int l = 1; l <= dim_; ++l)
          m.at(l, k).add_product(w, c(i, j, k, l));
    }
  }
  return m;
}

VerificationReport verify_fundamental_identity(const ThreeLieAlgebra& A,
                                               VerifyOptions opt) {
  const int n = A.dim();
  ReportBuilder rb("fundamental-identity", opt);
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int i3 = 1; i3 <= n; ++i3)
        for (int i4 = i3 + 1; i4 <= n; ++i4)
          for (int i5 = i4 + 1; i5 <= n; ++i5) {
            rb.count();
            for (int l = 1; l <= n; ++l) {
              Scalar res;
              for (int s = 1; s <= n; ++s) {
                res.add_product(A.c(i3, i4, i5, s), A.c(i1, i2, s, l));
                res.sub_product(A.c(i1, i2, i3, s), A.c(s, i4, i5, l));
                res.sub_product(A.c(i1, i2, i4, s), A.c(i3, s, i5, l));
                res.sub_product(A.c(i1, i2, i5, s), A.c(i3, i4, s, l));
              }
              if (!res.is_zero()) {
                if (!rb.fail({i1, i2, i3, i4, i5, l}, std::move(res)))
                  return rb.take();
                break;
              }
            }
          }
  return rb.take();
}

VerificationReport verify_equivalent_identities(const ThreeLieAlgebra& A,
                                                VerifyOptions opt) {
  const int n = A.dim();
  ReportBuilder rb("equivalent-identities", opt);
  // Identity (a): alternating sum over which of the first four arguments is
  // pulled out; antisymmetric in (x1..x4), so i1<i2<i3<i4 suffices.
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int i3 = i2 + 1; i3 <= n; ++i3)
        for (int i4 = i3 + 1; i4 <= n; ++i4)
          for (int i5 = 1; i5 <= n; ++i5) {
            rb.count();
            for (int l = 1; l <= n; ++l) {
              Scalar res;
              for (int s = 1; s <= n; ++s) {
                res.add_product(A.c(i1, i2, i3, s), A.c(s, i4, i5, l));
                res.sub_product(A.c(i1, i2, i4, s), A.c(s, i3, i5, l));
                res.add_product(A.c(i1, i3, i4, s), A.c(s, i2, i5, l));
                res.sub_product(A.c(i2, i3, i4, s), A.c(s, i1, i5, l));
              }
              if (!res.is_zero()) {
                if (!rb.fail({i1, i2, i3, i4, i5, l}, std::move(res), "identity-a"))
                  return rb.take();
                break;
              }
            }
          }
  // Identity (b): signed sum over the 2-subsets of {x1..x4} paired with x5.
  for (int i1 = 1; i1 <= n; ++i1)
    for (int i2 = i1 + 1; i2 <= n; ++i2)
      for (int i3 = i2 + 1; i3 <= n; ++i3)
        for (int i4 = i3 + 1; i4 <= n; ++i4)
          for (int i5 = 1; i5 <= n; ++i5) {
            rb.count();
            for (int l = 1; l <= n; ++l) {
              Scalar res;
              for (int s = 1; s <= n; ++s) {
                res.add_product(A.c(i1, i2, i5, s), A.c(s, i3, i4, l));
                res.add_product(A.c(i3, i4, i5, s), A.c(s, i1, i2, l));
                res.sub_product(A.c(i1, i3, i5, s), A.c(s, i2, i4, l));
                res.sub_product(A.c(i2, i4, i5, s), A.c(s, i1, i3, l));
                res.add_product(A.c(i1, i4, i5, s), A.c(s, i2, i3, l));
                res.add_product(A.c(i2, i3, i5, s), A.c(s, i1, i4, l));
              }
              if (!res.is_zero()) {
                if (!rb.fail({i1, i2, i3, i4, i5, l}, std::move(res), "identity-b"))
                  return rb.take();
                break;
              }
            }
          }
  return rb.take();
}

VerificationReport is_derivation(const ThreeLieAlgebra& A, const Matrix& D,
                                 VerifyOptions opt) {
  const int n = A.dim();
  if (D.rows() != n || D.cols() != n)
    throw invalid_input("derivation candidate has wrong shape");
  ReportBuilder rb("derivation", opt);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        rb.count();
        Vec res = D.apply(A.basis_bracket(i, j, k));
        res -= A.bracket(D.column(i), Vec::basis(n, j), Vec::basis(n, k));
        res -= A.bracket(Vec::basis(n, i), D.column(j), Vec::basis(n, k));
        res -= A.bracket(Vec::basis(n, i), Vec::basis(n, j), D.column(k));
        for (int l = 1; l <= n; ++l)
          if (!res.at(l).is_zero()) {
            if (!rb.fail({i, j, k, l}, res.at(l))) return rb.take();
            break;
          }
      }
  return rb.take();
}

} // namespace trilie
