#include "trilie/yang_baxter.hpp"

namespace trilie {

namespace {

struct Entry {
  int a, b;
  Scalar w;
};

std::vector<Entry> nonzero_entries(const RElement& r) {
  std::vector<Entry> out;
  const int n = r.algebra().dim();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (!r.entry(a, b).is_zero()) out.push_back({a, b, r.entry(a, b)});
  return out;
}

} // namespace

RElement::RElement(ThreeLieAlgebra algebra, Matrix entries)
    : algebra_(std::move(algebra)), entries_(std::move(entries)) {
  if (entries_.rows() != algebra_.dim() || entries_.cols() != algebra_.dim())
    throw invalid_input("r entries must form an n x n matrix");
}

RElement RElement::zero(ThreeLieAlgebra algebra) {
  int n = algebra.dim();
  return RElement(std::move(algebra), Matrix(n, n));
}

bool RElement::is_skew() const {
  const int n = algebra_.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (entries_.at(i, j) != -entries_.at(j, i)) return false;
  return true;
}

bool RElement::is_symmetric() const {
  const int n = algebra_.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (entries_.at(i, j) != entries_.at(j, i)) return false;
  return true;
}

Comultiplication::Comultiplication(ThreeLieAlgebra algebra, Tensor delta)
    : algebra_(std::move(algebra)), delta_(std::move(delta)) {
  if (delta_.order() != 4 || delta_.dim() != algebra_.dim())
    throw invalid_input("comultiplication tensor must have order 4 over the algebra");
}

Comultiplication Comultiplication::zero(ThreeLieAlgebra algebra) {
  int n = algebra.dim();
  return Comultiplication(std::move(algebra), Tensor(4, n));
}

bool Comultiplication::induces_skew_dual() const {
  const int n = algebra_.dim();
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          const Scalar& v = d(m, i, j, k);
          if (d(m, j, i, k) != -v || d(m, i, k, j) != -v) return false;
        }
  return true;
}

Matrix Comultiplication::as_linear_map() const {
  const int n = algebra_.dim();
  Matrix f(n * n * n, n);
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          f.at(triple_tuple_coord(i, j, k, n), m) = d(m, i, j, k);
  return f;
}

Comultiplication& Comultiplication::operator+=(const Comultiplication& o) {
  if (!(algebra_ == o.algebra_))
    throw invalid_input("comultiplications over different algebras");
  delta_ += o.delta_;
  return *this;
}

Comultiplication& Comultiplication::operator*=(const Scalar& s) {
  delta_ *= s;
  return *this;
}

DeltaTriple delta_from_r(const RElement& r) {
  const ThreeLieAlgebra& A = r.algebra();
  const int n = A.dim();
  Tensor t1(4, n), t2(4, n), t3(4, n);
  const auto entries = nonzero_entries(r);
  for (int m = 1; m <= n; ++m)
    for (const Entry& e1 : entries)
      for (const Entry& e2 : entries) {
        Scalar w = e1.w;
        w *= e2.w;
        for (int u = 1; u <= n; ++u) {
          const Scalar& c = A.c(m, e1.a, e2.a, u);
          if (c.is_zero()) continue;
          Scalar wc = w;
          wc *= c;
          t1.at({m, u, e2.b, e1.b}) += wc;
          t2.at({m, e1.b, u, e2.b}) += wc;
          t3.at({m, e2.b, e1.b, u}) += wc;
        }
      }
  return DeltaTriple{Comultiplication(A, std::move(t1)),
                     Comultiplication(A, std::move(t2)),
                     Comultiplication(A, std::move(t3))};
}

ThreeLieAlgebra dual_structure(const Comultiplication& delta) {
  if (!delta.induces_skew_dual())
    throw invalid_input("dual operation is not skew-symmetric");
  const int n = delta.algebra().dim();
  Tensor c(4, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) c.at({i, j, k, l}) = delta.d(l, i, j, k);
  return ThreeLieAlgebra(std::move(c));
}

VerificationReport verify_co_jacobi(const Comultiplication& delta, VerifyOptions opt) {
  if (!delta.induces_skew_dual())
    throw invalid_input("co-Jacobi check requires a skew-inducing comultiplication");
  const int n = delta.algebra().dim();
  ReportBuilder rb("co-jacobi", opt);
  std::vector<int> u(5, 1);
  for (int m = 1; m <= n; ++m) {
    rb.count();
    u.assign(5, 1);
    do {
      Scalar res;
      for (int s = 1; s <= n; ++s) {
        res.add_product(delta.d(m, s, u[3], u[4]), delta.d(s, u[0], u[1], u[2]));
        res.add_product(delta.d(m, u[2], s, u[4]), delta.d(s, u[0], u[1], u[3]));
        res.add_product(delta.d(m, u[2], u[3], s), delta.d(s, u[0], u[1], u[4]));
        res.sub_product(delta.d(m, u[0], u[1], s), delta.d(s, u[2], u[3], u[4]));
      }
      if (!res.is_zero()) {
        if (!rb.fail({m, u[0], u[1], u[2], u[3], u[4]}, std::move(res)))
          return rb.take();
      }
    } while (next_tuple(u, n));
  }
  return rb.take();
}

Tensor triple_r_bracket(const RElement& r) {
  const ThreeLieAlgebra& A = r.algebra();
  const int n = A.dim();
  Tensor out(4, n);
  const auto entries = nonzero_entries(r);
  for (const Entry& e1 : entries)
    for (const Entry& e2 : entries) {
      Scalar w12 = e1.w;
      w12 *= e2.w;
      for (const Entry& e3 : entries) {
        Scalar w = w12;
        w *= e3.w;
        for (int u = 1; u <= n; ++u) {
          out.at({u, e1.b, e2.b, e3.b}).add_product(w, A.c(e1.a, e2.a, e3.a, u));
          out.at({e1.a, u, e2.b, e3.b}).add_product(w, A.c(e1.b, e2.a, e3.a, u));
          out.at({e1.a, e2.a, u, e3.b}).add_product(w, A.c(e1.b, e2.b, e3.a, u));
          out.at({e1.a, e2.a, e3.a, u}).add_product(w, A.c(e1.b, e2.b, e3.b, u));
        }
      }
    }
  return out;
}

Tensor mixed_triple_bracket(const RElement& r,
                            const std::array<std::pair<int, int>, 3>& pairs) {
  for (const auto& [p, q] : pairs)
    if (p < 1 || p > 4 || q < 1 || q > 4 || p == q)
      throw invalid_input("embedding pair positions must be distinct in 1..4");
  int shared = 0;
  for (int pos = 1; pos <= 4; ++pos) {
    bool in_all = true;
    for (const auto& [p, q] : pairs)
      if (p != pos && q != pos) in_all = false;
    if (in_all) {
      if (shared != 0) throw invalid_input("more than one shared position");
      shared = pos;
    }
  }
  if (shared == 0) throw invalid_input("pairs do not share a common position");
  std::array<int, 3> others{};
  bool seen[5] = {false, false, false, false, false};
  seen[shared] = true;
  for (int t = 0; t < 3; ++t) {
    int o = pairs[t].first == shared ? pairs[t].second : pairs[t].first;
    if (seen[o]) throw invalid_input("remaining positions are not distinct");
    seen[o] = true;
    others[t] = o;
  }

  const ThreeLieAlgebra& A = r.algebra();
  const int n = A.dim();
  Tensor out(4, n);
  const auto entries = nonzero_entries(r);
  std::array<int, 4> idx{};
  for (const Entry& e1 : entries)
    for (const Entry& e2 : entries) {
      Scalar w12 = e1.w;
      w12 *= e2.w;
      for (const Entry& e3 : entries) {
        Scalar w = w12;
        w *= e3.w;
        const Entry* es[3] = {&e1, &e2, &e3};
        int arg[3];
        for (int t = 0; t < 3; ++t) {
          bool first_is_shared = pairs[t].first == shared;
          arg[t] = first_is_shared ? es[t]->a : es[t]->b;
          idx[others[t] - 1] = first_is_shared ? es[t]->b : es[t]->a;
        }
        for (int u = 1; u <= n; ++u) {
          const Scalar& c = A.c(arg[0], arg[1], arg[2], u);
          if (c.is_zero()) continue;
          idx[shared - 1] = u;
          out.at(idx).add_product(w, c);
        }
      }
    }
  return out;
}

std::array<Tensor, 3> rrr_variants(const RElement& r) {
  using P = std::pair<int, int>;
  auto mtb = [&](P p1, P p2, P p3) {
    return mixed_triple_bracket(r, {p1, p2, p3});
  };
  Tensor v1 = mtb({1, 2}, {1, 3}, {1, 4}) + mtb({1, 2}, {2, 3}, {2, 4}) -
              mtb({1, 3}, {3, 2}, {3, 4}) + mtb({1, 4}, {4, 2}, {4, 3});
  Tensor v2 = mtb({1, 2}, {3, 1}, {1, 4}) - mtb({2, 1}, {3, 2}, {2, 4}) -
              mtb({3, 1}, {3, 2}, {3, 4}) - mtb({4, 1}, {4, 2}, {3, 4});
  Tensor v3 = -mtb({1, 2}, {1, 3}, {4, 1}) + mtb({2, 1}, {2, 3}, {4, 2}) -
              mtb({3, 1}, {3, 2}, {4, 3}) - mtb({4, 1}, {4, 2}, {4, 3});
  return {std::move(v1), std::move(v2), std::move(v3)};
}

VerificationReport verify_thm_condition(const RElement& r,
                                        ThmConditionBreakdown* breakdown,
                                        VerifyOptions opt) {
  const ThreeLieAlgebra& A = r.algebra();
  const int n = A.dim();
  ReportBuilder rb("dual-structure-condition", opt);
  const auto variants = rrr_variants(r);
  const auto entries = nonzero_entries(r);

  // term -> (variant, ad slot, insertion position, true when the ad is
  // ad_{x_i, x} rather than ad_{x, x_i})
  struct Term {
    int variant, slot, pos;
    bool xi_first;
  };
  static constexpr Term terms[8] = {
      {0, 1, 2, true}, {0, 2, 1, false}, {1, 3, 5, false}, {1, 3, 4, true},
      {1, 4, 3, false}, {2, 4, 5, true}, {2, 5, 4, false}, {2, 5, 3, true}};

  if (breakdown) {
    breakdown->summands.clear();
    breakdown->totals.clear();
  }

  // ad(e_a, e_x) matrices, reused across terms for the current x.
  std::vector<Matrix> ad_ax(n + 1);

  for (int x = 1; x <= n; ++x) {
    rb.count();
    for (int a = 1; a <= n; ++a) ad_ax[a] = A.ad_basis(a, x);

    std::array<Tensor, 8> summands;
    Tensor total(5, n);
    for (int t = 0; t < 8; ++t) {
      const Term& tm = terms[t];
      const Tensor& V = variants[tm.variant];
      Tensor S(5, n);
      std::array<int, 4> vidx{};
      std::array<int, 5> u{};
      for (const Entry& e : entries) {
        const Matrix& ad = ad_ax[e.a];
        u[tm.pos - 1] = e.b;
        // Iterate the four free positions of the output tuple.
        std::vector<int> free(4, 1);
        do {
          int fpos = 0;
          for (int s = 0; s < 5; ++s)
            if (s != tm.pos - 1) u[s] = free[fpos++];
          // Contract the ad slot against the variant tensor.
          Scalar acc;
          for (int w = 1; w <= n; ++w) {
            const Scalar& aw = ad.at(u[tm.slot - 1], w);
            if (aw.is_zero()) continue;
            int vpos = 0;
            for (int s = 0; s < 5; ++s) {
              if (s == tm.pos - 1) continue;
              vidx[vpos++] = (s == tm.slot - 1) ? w : u[s];
            }
            acc.add_product(aw, V.at(vidx));
          }
          if (!acc.is_zero()) {
            Scalar contrib = e.w;
            contrib *= acc;
            if (!tm.xi_first) contrib = -contrib;
            S.at(std::span<const int>(u.data(), 5)) += contrib;
          }
        } while (next_tuple(free, n));
      }
      total += S;
      summands[t] = std::move(S);
    }

    if (!total.is_zero()) {
      auto fn = total.first_nonzero();
      std::vector<int> where{x};
      for (int v : fn->first) where.push_back(v);
      if (!rb.fail(std::move(where), fn->second)) {
        if (breakdown) {
          breakdown->summands.push_back(std::move(summands));
          breakdown->totals.push_back(std::move(total));
        }
        return rb.take();
      }
    }
    if (breakdown) {
      breakdown->summands.push_back(std::move(summands));
      breakdown->totals.push_back(std::move(total));
    }
  }
  return rb.take();
}

VerificationReport is_cybe_solution(const RElement& r, VerifyOptions opt) {
  ReportBuilder rb("cybe", opt);
  rb.count();
  Tensor rrr = triple_r_bracket(r);
  if (auto fn = rrr.first_nonzero()) rb.fail(fn->first, fn->second);
  return rb.take();
}

VerificationReport verify_local_cocycle_bialgebra(const ThreeLieAlgebra& A,
                                                  const Comultiplication& d1,
                                                  const Comultiplication& d2,
                                                  const Comultiplication& d3,
                                                  VerifyOptions opt) {
  ReportBuilder rb("local-cocycle-bialgebra", opt);
  const Comultiplication* ds[3] = {&d1, &d2, &d3};
  for (int slot = 1; slot <= 3; ++slot) {
    if (!(ds[slot - 1]->algebra() == A))
      throw invalid_input("comultiplication belongs to a different algebra");
    Representation rep = slot_representation(A, slot);
    VerificationReport sub = is_one_cocycle(ds[slot - 1]->as_linear_map(), rep);
    rb.raw().parts.emplace_back("cocycle-slot-" + std::to_string(slot), sub.passed);
    rb.raw().checked_count += sub.checked_count;
    if (!sub.passed) {
      std::vector<int> idx{slot};
      for (int v : sub.witness->indices) idx.push_back(v);
      if (!rb.fail(std::move(idx), sub.witness->residual,
                   "cocycle-slot-" + std::to_string(slot)))
        return rb.take();
    }
  }
  Comultiplication sum = d1 + d2 + d3;
  bool skew = sum.induces_skew_dual();
  rb.raw().parts.emplace_back("dual-skew", skew);
  if (!skew) {
    rb.fail({}, Scalar(), "dual-skew");
    return rb.take();
  }
  VerificationReport fi = verify_fundamental_identity(dual_structure(sum));
  rb.raw().parts.emplace_back("dual-fundamental-identity", fi.passed);
  rb.raw().checked_count += fi.checked_count;
  if (!fi.passed)
    rb.fail(fi.witness->indices, fi.witness->residual, "dual-fundamental-identity");
  return rb.take();
}

Matrix r_as_map(const RElement& r) { return r.entries().transpose(); }

Vec triple_r_contract(const Tensor& rrr, const Vec& xi, const Vec& eta,
                      const Vec& gamma) {
  const int n = rrr.dim();
  Vec out(n);
  for (int u1 = 1; u1 <= n; ++u1) {
    if (xi.at(u1).is_zero()) continue;
    for (int u2 = 1; u2 <= n; ++u2) {
      if (eta.at(u2).is_zero()) continue;
      Scalar w12 = xi.at(u1);
      w12 *= eta.at(u2);
      for (int u3 = 1; u3 <= n; ++u3) {
        if (gamma.at(u3).is_zero()) continue;
        Scalar w = w12;
        w *= gamma.at(u3);
        for (int l = 1; l <= n; ++l)
          out.at(l).add_product(w, rrr.at({u1, u2, u3, l}));
      }
    }
  }
  return out;
}

Vec rformula_residual(const RElement& r, const Vec& xi, const Vec& eta,
                      const Vec& gamma) {
  if (!r.is_skew())
    throw invalid_input("the map-form identity requires skew-symmetric r");
  const ThreeLieAlgebra& A = r.algebra();
  Matrix map = r_as_map(r);
  ThreeLieAlgebra dual = dual_structure(delta_from_r(r).sum());
  Vec res = A.bracket(map.apply(xi), map.apply(eta), map.apply(gamma));
  res -= map.apply(dual.bracket(xi, eta, gamma));
  res -= triple_r_contract(triple_r_bracket(r), xi, eta, gamma);
  return res;
}

Matrix form_from_r(const RElement& r) {
  if (!r.is_skew()) throw invalid_input("form requires skew-symmetric r");
  if (r.algebra().dim() % 2 != 0)
    throw invalid_input("no invertible skew form in odd dimension");
  try {
    return r.entries().inverse();
  } catch (const invalid_input&) {
    throw invalid_input("r is not invertible");
  }
}

VerificationReport verify_3sb(const ThreeLieAlgebra& A, const Matrix& B,
                              VerifyOptions opt) {
  const int n = A.dim();
  if (B.rows() != n || B.cols() != n) throw invalid_input("form has wrong shape");
  ReportBuilder rb("skew-form-compatibility", opt);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          rb.count();
          Scalar res;
          for (int s = 1; s <= n; ++s) {
            res.add_product(A.c(i, j, k, s), B.at(s, l));
            res.sub_product(A.c(i, j, l, s), B.at(s, k));
            res.add_product(A.c(i, k, l, s), B.at(s, j));
            res.sub_product(A.c(j, k, l, s), B.at(s, i));
          }
          if (!res.is_zero()) {
            if (!rb.fail({i, j, k, l}, std::move(res))) return rb.take();
          }
        }
  return rb.take();
}

} // namespace trilie
