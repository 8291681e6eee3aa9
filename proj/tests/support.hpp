#pragma once

#include "trilie/catalog.hpp"
#include "trilie/prelie.hpp"

#include <random>

namespace trilie_test {

using namespace trilie;

// Deterministic generator of small exact scalars.
class Rng {
public:
  explicit Rng(unsigned long seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }

  mpq_class rational() {
    mpq_class q(integer(-3, 3), integer(1, 3));
    q.canonicalize();
    return q;
  }

  Scalar scalar(bool allow_imaginary = true) {
    if (allow_imaginary && integer(0, 4) == 0) return Scalar(rational(), rational());
    return Scalar(rational());
  }

  Vec vec(int dim) {
    Vec v(dim);
    for (int i = 1; i <= dim; ++i) v.at(i) = scalar();
    return v;
  }

private:
  std::mt19937_64 gen_;
};

inline ThreeLieAlgebra dim3() {
  return catalog::get_algebra(catalog::parse_id("dim3"));
}

inline ThreeLieAlgebra dim4(int cls, std::optional<Scalar> alpha = {}) {
  return catalog::get_algebra(
      catalog::parse_id("dim4." + std::to_string(cls), alpha));
}

// Random totally antisymmetric structure constants (not necessarily a valid
// ternary Lie bracket).
inline ThreeLieAlgebra random_skew_constants(Rng& rng, int n) {
  std::vector<ThreeLieAlgebra::BracketSpec> specs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        ThreeLieAlgebra::BracketSpec spec;
        spec.args = {i, j, k};
        for (int l = 1; l <= n; ++l)
          if (rng.integer(0, 1) == 0) spec.result.emplace_back(l, rng.scalar());
        specs.push_back(std::move(spec));
      }
  return ThreeLieAlgebra::from_brackets(n, specs);
}

inline RElement random_r(Rng& rng, const ThreeLieAlgebra& A, bool skew) {
  const int n = A.dim();
  Matrix m(n, n);
  for (int t = 0, entries = static_cast<int>(rng.integer(2, 5)); t < entries; ++t) {
    int i = static_cast<int>(rng.integer(1, n));
    int j = static_cast<int>(rng.integer(1, n));
    Scalar v = rng.scalar();
    if (skew) {
      if (i == j) continue;
      m.at(i, j) += v;
      m.at(j, i) -= v;
    } else {
      m.at(i, j) += v;
    }
  }
  return RElement(A, std::move(m));
}

// Independent expansion of the four-term sum defining [[r,r,r]], written from
// the displayed formula with rank-1 terms and the multilinear bracket. Used
// as the oracle against triple_r_bracket.
inline Tensor oracle_rrr(const RElement& r) {
  const ThreeLieAlgebra& A = r.algebra();
  const int n = A.dim();
  struct Term {
    Scalar w;
    int a, b;
  };
  std::vector<Term> terms;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (!r.entry(a, b).is_zero()) terms.push_back({r.entry(a, b), a, b});
  Tensor out(4, n);
  for (const Term& t1 : terms)
    for (const Term& t2 : terms)
      for (const Term& t3 : terms) {
        Scalar w = t1.w;
        w *= t2.w;
        w *= t3.w;
        Vec v1 = A.bracket(Vec::basis(n, t1.a), Vec::basis(n, t2.a), Vec::basis(n, t3.a));
        Vec v2 = A.bracket(Vec::basis(n, t1.b), Vec::basis(n, t2.a), Vec::basis(n, t3.a));
        Vec v3 = A.bracket(Vec::basis(n, t1.b), Vec::basis(n, t2.b), Vec::basis(n, t3.a));
        Vec v4 = A.bracket(Vec::basis(n, t1.b), Vec::basis(n, t2.b), Vec::basis(n, t3.b));
        for (int u = 1; u <= n; ++u) {
          out.at({u, t1.b, t2.b, t3.b}).add_product(w, v1.at(u));
          out.at({t1.a, u, t2.b, t3.b}).add_product(w, v2.at(u));
          out.at({t1.a, t2.a, u, t3.b}).add_product(w, v3.at(u));
          out.at({t1.a, t2.a, t3.a, u}).add_product(w, v4.at(u));
        }
      }
  return out;
}

// Rank-1 order-k tensor from basis indices.
inline Tensor basis_tensor(int dim, std::initializer_list<int> idx) {
  Tensor t(static_cast<int>(idx.size()), dim);
  t.at(std::span<const int>(idx.begin(), idx.size())) = Scalar(1);
  return t;
}

inline Tensor random_tensor(Rng& rng, int order, int dim) {
  Tensor t(order, dim);
  std::vector<int> idx(order, 1);
  do {
    t.at(idx) = rng.scalar();
  } while (next_tuple(idx, dim));
  return t;
}

} // namespace trilie_test
