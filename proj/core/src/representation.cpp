#include "trilie/representation.hpp"

namespace trilie {

Representation::Representation(ThreeLieAlgebra algebra, int module_dim,
                               std::vector<Matrix> upper)
    : algebra_(std::move(algebra)), module_dim_(module_dim), upper_(std::move(upper)) {
  if (module_dim_ < 1) throw invalid_input("module dimension must be >= 1");
  if (static_cast<int>(upper_.size()) != pair_count(algebra_.dim()))
    throw invalid_input("wrong number of action matrices");
  for (const Matrix& m : upper_)
    if (m.rows() != module_dim_ || m.cols() != module_dim_)
      throw invalid_input("action matrix has wrong shape");
}

Representation Representation::zero(ThreeLieAlgebra algebra, int module_dim) {
  std::vector<Matrix> upper(pair_count(algebra.dim()),
                            Matrix(module_dim, module_dim));
  return Representation(std::move(algebra), module_dim, std::move(upper));
}

int Representation::pair_index(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n)) throw invalid_input("pair index out of range");
  // (1,2),(1,3),...,(1,n),(2,3),...
  return (i - 1) * n - i * (i - 1) / 2 + (j - i) - 1;
}

const Matrix& Representation::rho_upper(int i, int j) const {
  return upper_[pair_index(i, j, algebra_.dim())];
}

Matrix Representation::rho(int i, int j) const {
  const int n = algebra_.dim();
  if (i < 1 || i > n || j < 1 || j > n)
    throw invalid_input("pair index out of range");
  if (i == j) return Matrix(module_dim_, module_dim_);
  if (i < j) return rho_upper(i, j);
  return -rho_upper(j, i);
}

Matrix Representation::rho_of(const Vec& x, const Vec& y) const {
  const int n = algebra_.dim();
  if (x.dim() != n || y.dim() != n)
    throw invalid_input("rho argument dimension mismatch");
  Matrix out(module_dim_, module_dim_);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Scalar w = x.at(i);
      w *= y.at(j);
      w.sub_product(x.at(j), y.at(i));
      if (w.is_zero()) continue;
      const Matrix& m = rho_upper(i, j);
      for (int r = 1; r <= module_dim_; ++r)
        for (int c = 1; c <= module_dim_; ++c)
          out.at(r, c).add_product(w, m.at(r, c));
    }
  return out;
}

VerificationReport verify_representation(const Representation& R, VerifyOptions opt) {
  const ThreeLieAlgebra& A = R.algebra();
  const int n = A.dim();
  const int m = R.module_dim();
  ReportBuilder rb("representation", opt);

  const int pairs = Representation::pair_count(n);
  std::vector<std::vector<Matrix>> prod(pairs, std::vector<Matrix>(pairs));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          int p = Representation::pair_index(i, j, n);
          int q = Representation::pair_index(k, l, n);
          prod[p][q] = R.rho_upper(i, j) * R.rho_upper(k, l);
        }

  // Residual accumulator shared across tuples; only nonzero source entries
  // are touched, which is what makes the sparse slot actions cheap.
  Matrix res(m, m);
  auto clear = [&] {
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c <= m; ++c)
        if (!res.at(r, c).is_zero()) res.at(r, c) = Scalar();
  };
  auto add_scaled = [&](const Matrix& src, const Scalar& f) {
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c <= m; ++c) {
        const Scalar& s = src.at(r, c);
        if (!s.is_zero()) res.at(r, c).add_product(f, s);
      }
  };
  // res += sign * rho(a,b)rho(c,d), from the cached ordered products.
  auto add_rr = [&](int a, int b, int c, int d, int sign) {
    if (a == b || c == d) return;
    if (a > b) { std::swap(a, b); sign = -sign; }
    if (c > d) { std::swap(c, d); sign = -sign; }
    add_scaled(prod[Representation::pair_index(a, b, n)]
                   [Representation::pair_index(c, d, n)],
               Scalar(sign));
  };
  // res += sign * rho([e_i,e_j,e_k], e_l).
  auto add_rho_bracket = [&](int i, int j, int k, int l, int sign) {
    for (int s = 1; s <= n; ++s) {
      const Scalar& w = A.c(i, j, k, s);
      if (w.is_zero() || s == l) continue;
      Scalar f = (s < l) == (sign > 0) ? w : -w;
      add_scaled(s < l ? R.rho_upper(s, l) : R.rho_upper(l, s), f);
    }
  };

  auto scan = [&](std::vector<int> idx, const char* where) {
    for (int r = 1; r <= m; ++r)
      for (int c = 1; c <= m; ++c)
        if (!res.at(r, c).is_zero()) {
          idx.push_back(r);
          idx.push_back(c);
          return rb.fail(std::move(idx), res.at(r, c), where);
        }
    return true;
  };

  // Condition (i): commutator against the bracket action; i<j, k<l.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          rb.count();
          clear();
          add_rr(i, j, k, l, 1);
          add_rr(k, l, i, j, -1);
          add_rho_bracket(i, j, k, l, -1);
          add_rho_bracket(i, j, l, k, 1);
          if (!scan({i, j, k, l}, "condition-i")) return rb.take();
        }

  // Condition (ii): cyclic expansion; antisymmetric in the first three.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          rb.count();
          clear();
          add_rho_bracket(i, j, k, l, 1);
          add_rr(i, j, k, l, -1);
          add_rr(j, k, i, l, -1);
          add_rr(k, i, j, l, -1);
          if (!scan({i, j, k, l}, "condition-ii")) return rb.take();
        }

  bool defining_ok = rb.passed();

  // Derived identity (a): alternating sum of rho(bracket, -).
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          rb.count();
          clear();
          add_rho_bracket(i, j, k, l, 1);
          add_rho_bracket(i, j, l, k, -1);
          add_rho_bracket(i, k, l, j, 1);
          add_rho_bracket(j, k, l, i, -1);
          if (!scan({i, j, k, l}, "derived-identity-a")) return rb.take();
        }

  // Derived identity (b): symmetrized product sum.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          rb.count();
          clear();
          add_rr(i, j, k, l, 1);
          add_rr(j, k, i, l, 1);
          add_rr(k, i, j, l, 1);
          add_rr(k, l, i, j, 1);
          add_rr(i, l, j, k, 1);
          add_rr(j, l, k, i, 1);
          if (!scan({i, j, k, l}, "derived-identity-b")) return rb.take();
        }

  if (defining_ok && !rb.passed())
    rb.raw().note =
        "internal inconsistency: a derived identity failed while the defining "
        "conditions hold";
  return rb.take();
}

Representation dual_representation(const Representation& R) {
  const int n = R.algebra().dim();
  std::vector<Matrix> upper;
  upper.reserve(Representation::pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) upper.push_back(-R.rho_upper(i, j).transpose());
  return Representation(R.algebra(), R.module_dim(), std::move(upper));
}

Representation adjoint_representation(const ThreeLieAlgebra& A) {
  const int n = A.dim();
  std::vector<Matrix> upper;
  upper.reserve(Representation::pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) upper.push_back(A.ad_basis(i, j));
  return Representation(A, n, std::move(upper));
}

Representation coadjoint_representation(const ThreeLieAlgebra& A) {
  return dual_representation(adjoint_representation(A));
}

Representation trivial_representation(const ThreeLieAlgebra& A, int module_dim) {
  return Representation::zero(A, module_dim);
}

int triple_tuple_coord(int i, int j, int k, int n) {
  return (i - 1) * n * n + (j - 1) * n + k;
}

Representation slot_representation(const ThreeLieAlgebra& A, int slot) {
  if (slot < 1 || slot > 3) throw invalid_input("slot must be 1, 2 or 3");
  const int n = A.dim();
  const int m = n * n * n;
  std::vector<Matrix> upper;
  upper.reserve(Representation::pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Matrix ad = A.ad_basis(i, j);
      Matrix big(m, m);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
          for (int c = 1; c <= n; ++c) {
            int col = triple_tuple_coord(a, b, c, n);
            int acted = slot == 1 ? a : slot == 2 ? b : c;
            for (int t = 1; t <= n; ++t) {
              const Scalar& w = ad.at(t, acted);
              if (w.is_zero()) continue;
              int row = slot == 1   ? triple_tuple_coord(t, b, c, n)
                        : slot == 2 ? triple_tuple_coord(a, t, c, n)
                                    : triple_tuple_coord(a, b, t, n);
              big.at(row, col) += w;
            }
          }
      upper.push_back(std::move(big));
    }
  return Representation(A, m, std::move(upper));
}

ThreeLieAlgebra semidirect_product(const ThreeLieAlgebra& A, const Representation& R) {
  if (!(R.algebra() == A))
    throw invalid_input("representation does not act on the given algebra");
  {
    VerificationReport rep_ok = verify_representation(R);
    if (!rep_ok.passed)
      throw invalid_input("semidirect product requires a valid representation");
  }
  const int n = A.dim();
  const int m = R.module_dim();
  const int N = n + m;
  Tensor c(4, N);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) c.at({i, j, k, l}) = A.c(i, j, k, l);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Matrix r = R.rho(i, j);
      for (int v = 1; v <= m; ++v)
        for (int w = 1; w <= m; ++w) {
          const Scalar& x = r.at(w, v);
          if (x.is_zero()) continue;
          // [e_i, e_j, v] = rho(i,j)v, and the antisymmetric reorderings.
          c.at({i, j, n + v, n + w}) += x;
          c.at({n + v, i, j, n + w}) += x;
          c.at({j, n + v, i, n + w}) += x;
        }
    }
  return ThreeLieAlgebra(std::move(c));
}

} // namespace trilie
