#include "trilie/prelie.hpp"

namespace trilie {

PreLieAlgebra::PreLieAlgebra(Tensor constants)
    : dim_(constants.dim()), constants_(std::move(constants)) {
  if (constants_.order() != 4)
    throw invalid_input("product constants must form an order-4 tensor");
  const int n = dim_;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          if (constants_.at({j, i, k, l}) != -constants_.at({i, j, k, l}))
            throw invalid_input(
                "product is not antisymmetric in its first two arguments");
}

PreLieAlgebra PreLieAlgebra::zero(int dim) { return PreLieAlgebra(Tensor(4, dim)); }

PreLieAlgebra PreLieAlgebra::from_products(int dim,
                                           const std::vector<ProductSpec>& products) {
  Tensor c(4, dim);
  for (const ProductSpec& p : products) {
    if (!(p.args[0] < p.args[1]))
      throw invalid_input("product arguments must have args[0] < args[1]");
    for (const auto& [l, coeff] : p.result) {
      if (l < 1 || l > dim) throw invalid_input("product result index out of range");
      c.at({p.args[0], p.args[1], p.args[2], l}) += coeff;
      c.at({p.args[1], p.args[0], p.args[2], l}) -= coeff;
    }
  }
  return PreLieAlgebra(std::move(c));
}

Vec PreLieAlgebra::product(const Vec& x, const Vec& y, const Vec& z) const {
  if (x.dim() != dim_ || y.dim() != dim_ || z.dim() != dim_)
    throw invalid_input("product argument dimension mismatch");
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
        for (int l = 1; l <= dim_; ++l) out.at(l).add_product(w, p(i, j, k, l));
      }
    }
  }
  return out;
}

Tensor PreLieAlgebra::cyclic_constants() const {
  Tensor c(4, dim_);
  for (int i = 1; i <= dim_; ++i)
    for (int j = 1; j <= dim_; ++j)
      for (int k = 1; k <= dim_; ++k)
        for (int l = 1; l <= dim_; ++l) {
          Scalar v = p(i, j, k, l);
          v += p(j, k, i, l);
          v += p(k, i, j, l);
          c.at({i, j, k, l}) = std::move(v);
        }
  return c;
}

VerificationReport verify_o_operator(const Matrix& T, const ThreeLieAlgebra& A,
                                     const Representation& R, VerifyOptions opt) {
  const int n = A.dim();
  const int m = R.module_dim();
  if (!(R.algebra() == A))
    throw invalid_input("representation does not act on the given algebra");
  if (T.rows() != n || T.cols() != m)
    throw invalid_input("operator must map the module into the algebra");
  ReportBuilder rb("o-operator", opt);
  if (R == adjoint_representation(A))
    rb.raw().note = "Rota-Baxter operator of weight zero";
  std::vector<Vec> timg(m + 1, Vec(n));
  for (int c = 1; c <= m; ++c) timg[c] = T.column(c);
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v)
      for (int w = v + 1; w <= m; ++w) {
        rb.count();
        Vec rhs_mod = R.rho_of(timg[u], timg[v]).apply(Vec::basis(m, w));
        rhs_mod += R.rho_of(timg[v], timg[w]).apply(Vec::basis(m, u));
        rhs_mod += R.rho_of(timg[w], timg[u]).apply(Vec::basis(m, v));
        Vec res = A.bracket(timg[u], timg[v], timg[w]) - T.apply(rhs_mod);
        for (int l = 1; l <= n; ++l)
          if (!res.at(l).is_zero()) {
            if (!rb.fail({u, v, w, l}, res.at(l))) return rb.take();
            break;
          }
      }
  return rb.take();
}

AlgebraWithR r_from_o_operator(const Matrix& T, const ThreeLieAlgebra& A,
                               const Representation& R) {
  const int n = A.dim();
  const int m = R.module_dim();
  if (T.rows() != n || T.cols() != m)
    throw invalid_input("operator must map the module into the algebra");
  ThreeLieAlgebra D = semidirect_product(A, dual_representation(R));
  Matrix entries(n + m, n + m);
  for (int c = 1; c <= m; ++c)
    for (int a = 1; a <= n; ++a) {
      const Scalar& t = T.at(a, c);
      if (t.is_zero()) continue;
      entries.at(n + c, a) += t;
      entries.at(a, n + c) -= t;
    }
  RElement r(D, std::move(entries));
  return AlgebraWithR{std::move(D), std::move(r)};
}

VerificationReport verify_prelie(const PreLieAlgebra& P, VerifyOptions opt) {
  const int n = P.dim();
  ReportBuilder rb("pre-lie", opt);
  Tensor cyc = P.cyclic_constants();

  // {x,y,{z,w,v}} contracted on basis indices.
  auto nest = [&](int a, int b, int c, int d, int e, int l) {
    Scalar acc;
    for (int s = 1; s <= n; ++s) acc.add_product(P.p(c, d, e, s), P.p(a, b, s, l));
    return acc;
  };
  // {{a,b,c}_C, d, e} and friends via the cyclic constants.
  auto nest_cyc_left = [&](int a, int b, int c, int d, int e, int l) {
    Scalar acc;
    for (int s = 1; s <= n; ++s) acc.add_product(cyc.at({a, b, c, s}), P.p(s, d, e, l));
    return acc;
  };
  auto nest_cyc_mid = [&](int a, int b, int c, int d, int e, int l) {
    // {d, [a,b,c]_C, e}
    Scalar acc;
    for (int s = 1; s <= n; ++s) acc.add_product(cyc.at({a, b, c, s}), P.p(d, s, e, l));
    return acc;
  };

  std::vector<int> x(5, 1);
  // Identity (d2).
  do {
    rb.count();
    for (int l = 1; l <= n; ++l) {
      Scalar res = nest(x[0], x[1], x[2], x[3], x[4], l);
      res -= nest_cyc_left(x[0], x[1], x[2], x[3], x[4], l);
      res -= nest_cyc_mid(x[0], x[1], x[3], x[2], x[4], l);
      res -= nest(x[2], x[3], x[0], x[1], x[4], l);
      if (!res.is_zero()) {
        if (!rb.fail({x[0], x[1], x[2], x[3], x[4], l}, std::move(res), "identity-d2"))
          return rb.take();
        break;
      }
    }
  } while (next_tuple(x, n));

  // Identity (d3).
  x.assign(5, 1);
  do {
    rb.count();
    for (int l = 1; l <= n; ++l) {
      Scalar res = nest_cyc_left(x[0], x[1], x[2], x[3], x[4], l);
      res -= nest(x[0], x[1], x[2], x[3], x[4], l);
      res -= nest(x[1], x[2], x[0], x[3], x[4], l);
      res -= nest(x[2], x[0], x[1], x[3], x[4], l);
      if (!res.is_zero()) {
        if (!rb.fail({x[0], x[1], x[2], x[3], x[4], l}, std::move(res), "identity-d3"))
          return rb.take();
        break;
      }
    }
  } while (next_tuple(x, n));

  bool defining_ok = rb.passed();

  // Derived identity (a): alternating cyclic-bracket sum.
  x.assign(5, 1);
  do {
    rb.count();
    for (int l = 1; l <= n; ++l) {
      Scalar res = nest_cyc_left(x[0], x[1], x[2], x[3], x[4], l);
      res -= nest_cyc_left(x[0], x[1], x[3], x[2], x[4], l);
      res += nest_cyc_left(x[0], x[2], x[3], x[1], x[4], l);
      res -= nest_cyc_left(x[1], x[2], x[3], x[0], x[4], l);
      if (!res.is_zero()) {
        if (!rb.fail({x[0], x[1], x[2], x[3], x[4], l}, std::move(res),
                     "derived-identity-a"))
          return rb.take();
        break;
      }
    }
  } while (next_tuple(x, n));

  // Derived identity (b): six-term nested-product sum.
  x.assign(5, 1);
  do {
    rb.count();
    for (int l = 1; l <= n; ++l) {
      Scalar res = nest(x[0], x[1], x[2], x[3], x[4], l);
      res += nest(x[2], x[3], x[0], x[1], x[4], l);
      res += nest(x[1], x[3], x[2], x[0], x[4], l);
      res += nest(x[2], x[0], x[1], x[3], x[4], l);
      res += nest(x[1], x[2], x[0], x[3], x[4], l);
      res += nest(x[0], x[3], x[1], x[2], x[4], l);
      if (!res.is_zero()) {
        if (!rb.fail({x[0], x[1], x[2], x[3], x[4], l}, std::move(res),
                     "derived-identity-b"))
          return rb.take();
        break;
      }
    }
  } while (next_tuple(x, n));

  if (defining_ok && !rb.passed())
    rb.raw().note =
        "internal inconsistency: a derived identity failed while the defining "
        "identities hold";
  return rb.take();
}

ThreeLieAlgebra subadjacent(const PreLieAlgebra& P) {
  VerificationReport ok = verify_prelie(P);
  if (!ok.passed)
    throw invalid_input("sub-adjacent bracket requires a valid ternary pre-Lie product");
  return ThreeLieAlgebra(P.cyclic_constants());
}

Representation left_representation(const PreLieAlgebra& P) {
  ThreeLieAlgebra sub = subadjacent(P);
  const int n = P.dim();
  std::vector<Matrix> upper;
  upper.reserve(Representation::pair_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Matrix L(n, n);
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) L.at(l, k) = P.p(i, j, k, l);
      upper.push_back(std::move(L));
    }
  return Representation(std::move(sub), n, std::move(upper));
}

PreLieAlgebra prelie_from_o_operator(const Matrix& T, const ThreeLieAlgebra& A,
                                     const Representation& R) {
  VerificationReport o = verify_o_operator(T, A, R);
  if (!o.passed) throw invalid_input("the operator does not satisfy the O-identity");
  const int m = R.module_dim();
  Tensor c(4, m);
  for (int u = 1; u <= m; ++u)
    for (int v = 1; v <= m; ++v) {
      if (u == v) continue;
      Matrix rho = R.rho_of(T.column(u), T.column(v));
      for (int w = 1; w <= m; ++w)
        for (int l = 1; l <= m; ++l) c.at({u, v, w, l}) = rho.at(l, w);
    }
  PreLieAlgebra P(std::move(c));
  {
    VerificationReport ok = verify_prelie(P);
    if (!ok.passed)
      throw invalid_input("internal inconsistency: induced product fails its axioms");
    Tensor cyc = P.cyclic_constants();
    for (int u = 1; u <= m; ++u)
      for (int v = 1; v <= m; ++v)
        for (int w = 1; w <= m; ++w) {
          Vec lhs(m);
          for (int l = 1; l <= m; ++l) lhs.at(l) = cyc.at({u, v, w, l});
          Vec diff = T.apply(lhs) -
                     A.bracket(T.column(u), T.column(v), T.column(w));
          if (!diff.is_zero())
            throw invalid_input(
                "internal inconsistency: operator is not a morphism of the "
                "induced bracket");
        }
  }
  return P;
}

PreLieAlgebra compatible_prelie_from_invertible_o(const Matrix& T,
                                                  const ThreeLieAlgebra& A,
                                                  const Representation& R) {
  const int n = A.dim();
  if (R.module_dim() != n)
    throw invalid_input("invertible operator requires module dimension = algebra dimension");
  if (!T.is_invertible()) throw invalid_input("operator is not invertible");
  VerificationReport o = verify_o_operator(T, A, R);
  if (!o.passed) throw invalid_input("the operator does not satisfy the O-identity");
  Matrix tinv = T.inverse();
  Tensor c(4, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Matrix conj = T * R.rho(i, j) * tinv;
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) c.at({i, j, k, l}) = conj.at(l, k);
    }
  PreLieAlgebra P(std::move(c));
  if (!(ThreeLieAlgebra(P.cyclic_constants()) == A))
    throw invalid_input(
        "internal inconsistency: cyclic sum does not reproduce the bracket");
  return P;
}

PreLieAlgebra prelie_from_form(const ThreeLieAlgebra& A, const Matrix& B) {
  const int n = A.dim();
  if (B.rows() != n || B.cols() != n) throw invalid_input("form has wrong shape");
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (B.at(i, j) != -B.at(j, i))
        throw invalid_input("form is not skew-symmetric");
  if (!B.is_invertible()) throw invalid_input("form is degenerate");
  if (!verify_3sb(A, B).passed)
    throw invalid_input("form does not satisfy the compatibility identity");

  // {e_i,e_j,e_k} solves B({e_i,e_j,e_k}, e_w) = -B(e_k, [e_i,e_j,e_w]).
  Matrix binv_t = B.transpose().inverse();
  Tensor c(4, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int k = 1; k <= n; ++k) {
        Vec q(n);
        for (int w = 1; w <= n; ++w)
          for (int l = 1; l <= n; ++l) q.at(w).sub_product(A.c(i, j, w, l), B.at(k, l));
        Vec p = binv_t.apply(q);
        for (int l = 1; l <= n; ++l) c.at({i, j, k, l}) = p.at(l);
      }
    }
  PreLieAlgebra P(std::move(c));

  // Re-verify the defining identity on all basis quadruples.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int w = 1; w <= n; ++w) {
          Scalar lhs;
          for (int l = 1; l <= n; ++l) lhs.add_product(P.p(i, j, k, l), B.at(l, w));
          Scalar rhs;
          for (int l = 1; l <= n; ++l) rhs.sub_product(A.c(i, j, w, l), B.at(k, l));
          if (lhs != rhs)
            throw invalid_input(
                "internal inconsistency: form identity fails after construction");
        }
  return P;
}

AlgebraWithR canonical_r(const PreLieAlgebra& P) {
  const int n = P.dim();
  Representation L = left_representation(P);
  ThreeLieAlgebra D = semidirect_product(L.algebra(), dual_representation(L));
  Matrix entries(2 * n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    entries.at(i, n + i) = Scalar(1);
    entries.at(n + i, i) = Scalar(-1);
  }
  RElement r(D, std::move(entries));
  return AlgebraWithR{std::move(D), std::move(r)};
}

} // namespace trilie
