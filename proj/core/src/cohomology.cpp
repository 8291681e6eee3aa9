#include "trilie/cohomology.hpp"

namespace trilie {

namespace {

std::size_t pow_size(int base, int exp) {
  std::size_t s = 1;
  for (int t = 0; t < exp; ++t) s *= static_cast<std::size_t>(base);
  return s;
}

} // namespace

Cochain::Cochain(int degree, Representation rep, std::vector<Scalar> values)
    : degree_(degree), rep_(std::move(rep)), values_(std::move(values)) {
  if (degree_ < 1) throw invalid_input("cochain degree must be >= 1");
  if (degree_ > 4) throw invalid_input("cochain degree > 4 is not supported");
  const int n = rep_.algebra().dim();
  const int m = rep_.module_dim();
  if (values_.size() != pow_size(n, algebra_slots()) * static_cast<std::size_t>(m))
    throw invalid_input("cochain value array has wrong length");
  // Antisymmetry within each leading pair.
  std::vector<int> idx(algebra_slots(), 1);
  std::vector<int> swapped(algebra_slots());
  do {
    for (int pair = 0; pair + 1 < algebra_slots(); pair += 2) {
      swapped = idx;
      std::swap(swapped[pair], swapped[pair + 1]);
      for (int v = 1; v <= m; ++v)
        if (value(swapped, v) != -value(idx, v))
          throw invalid_input("cochain is not antisymmetric in a pair slot");
    }
  } while (next_tuple(idx, n));
}

Cochain Cochain::zero(int degree, Representation rep) {
  if (degree < 1 || degree > 4) throw invalid_input("unsupported cochain degree");
  const int n = rep.algebra().dim();
  const int m = rep.module_dim();
  std::vector<Scalar> values(pow_size(n, 2 * (degree - 1) + 1) *
                             static_cast<std::size_t>(m));
  return Cochain(degree, std::move(rep), std::move(values));
}

Cochain Cochain::from_matrix(Representation rep, const Matrix& f) {
  const int n = rep.algebra().dim();
  const int m = rep.module_dim();
  if (f.rows() != m || f.cols() != n)
    throw invalid_input("cochain matrix has wrong shape");
  std::vector<Scalar> values(static_cast<std::size_t>(n) * m);
  for (int z = 1; z <= n; ++z)
    for (int v = 1; v <= m; ++v)
      values[static_cast<std::size_t>(z - 1) * m + (v - 1)] = f.at(v, z);
  return Cochain(1, std::move(rep), std::move(values));
}

std::size_t Cochain::offset(std::span<const int> algebra_idx, int module_idx) const {
  const int n = rep_.algebra().dim();
  const int m = rep_.module_dim();
  if (static_cast<int>(algebra_idx.size()) != algebra_slots())
    throw invalid_input("cochain index arity mismatch");
  std::size_t off = 0;
  for (int t = 0; t < algebra_slots(); ++t) {
    if (algebra_idx[t] < 1 || algebra_idx[t] > n)
      throw invalid_input("cochain index out of range");
    off = off * n + static_cast<std::size_t>(algebra_idx[t] - 1);
  }
  if (module_idx < 1 || module_idx > m)
    throw invalid_input("cochain module index out of range");
  return off * m + static_cast<std::size_t>(module_idx - 1);
}

const Scalar& Cochain::value(std::span<const int> algebra_idx, int module_idx) const {
  return values_[offset(algebra_idx, module_idx)];
}

Scalar& Cochain::value(std::span<const int> algebra_idx, int module_idx) {
  return values_[offset(algebra_idx, module_idx)];
}

Vec Cochain::value_vec(std::span<const int> algebra_idx) const {
  const int m = rep_.module_dim();
  Vec out(m);
  std::size_t base = offset(algebra_idx, 1);
  for (int v = 0; v < m; ++v) out.at(v + 1) = values_[base + v];
  return out;
}

bool Cochain::is_zero() const {
  for (const Scalar& s : values_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Cochain::as_matrix() const {
  if (degree_ != 1) throw invalid_input("as_matrix requires a degree-1 cochain");
  const int n = rep_.algebra().dim();
  const int m = rep_.module_dim();
  Matrix f(m, n);
  for (int z = 1; z <= n; ++z) {
    int idx[1] = {z};
    for (int v = 1; v <= m; ++v) f.at(v, z) = value(idx, v);
  }
  return f;
}

Cochain coboundary(const Cochain& f) {
  const int p = f.degree();
  if (p > 3) throw invalid_input("coboundary supported for degree <= 3");
  const Representation& rep = f.rep();
  const ThreeLieAlgebra& A = rep.algebra();
  const int n = A.dim();
  const int m = rep.module_dim();
  Cochain out = Cochain::zero(p + 1, rep);

  // rho(i,j) * src accumulated into acc with an overall sign.
  auto add_rho = [&](Vec& acc, int i, int j, const Vec& src, bool negate) {
    if (i == j) return;
    bool neg = negate;
    int a = i, b = j;
    if (a > b) {
      std::swap(a, b);
      neg = !neg;
    }
    const Matrix& r = rep.rho_upper(a, b);
    for (int row = 1; row <= m; ++row)
      for (int col = 1; col <= m; ++col) {
        if (neg)
          acc.at(row).sub_product(r.at(row, col), src.at(col));
        else
          acc.at(row).add_product(r.at(row, col), src.at(col));
      }
  };

  std::vector<int> idx(out.algebra_slots(), 1); // (a1,b1,...,ap,bp,z)
  std::vector<int> args(f.algebra_slots());
  do {
    const int z = idx[2 * p];
    Vec acc(m);

    // Pairs of the output tuple: pair t has entries idx[2t], idx[2t+1].
    auto fill_without = [&](int skip, int single) {
      int w = 0;
      for (int t = 0; t < p; ++t) {
        if (t == skip) continue;
        args[w++] = idx[2 * t];
        args[w++] = idx[2 * t + 1];
      }
      args[w] = single;
    };

    // Bracket-substitution sum over j < k.
    for (int j = 0; j < p; ++j) {
      const bool neg = (j + 1) % 2 == 1; // (-1)^(j+1-based)
      for (int k = j + 1; k < p; ++k) {
        // Position of pair k once pair j is removed.
        const int kpos = k - 1;
        fill_without(j, z);
        for (int s = 1; s <= n; ++s) {
          const Scalar& c1 = A.c(idx[2 * j], idx[2 * j + 1], idx[2 * k], s);
          if (!c1.is_zero()) {
            args[2 * kpos] = s;
            args[2 * kpos + 1] = idx[2 * k + 1];
            for (int v = 1; v <= m; ++v) {
              if (neg)
                acc.at(v).sub_product(c1, f.value(args, v));
              else
                acc.at(v).add_product(c1, f.value(args, v));
            }
          }
          const Scalar& c2 = A.c(idx[2 * j], idx[2 * j + 1], idx[2 * k + 1], s);
          if (!c2.is_zero()) {
            args[2 * kpos] = idx[2 * k];
            args[2 * kpos + 1] = s;
            for (int v = 1; v <= m; ++v) {
              if (neg)
                acc.at(v).sub_product(c2, f.value(args, v));
              else
                acc.at(v).add_product(c2, f.value(args, v));
            }
          }
        }
      }
    }

    // Bracket against the single slot, and the action terms.
    for (int j = 0; j < p; ++j) {
      const bool neg = (j + 1) % 2 == 1;
      for (int s = 1; s <= n; ++s) {
        const Scalar& c = A.c(idx[2 * j], idx[2 * j + 1], z, s);
        if (c.is_zero()) continue;
        fill_without(j, s);
        for (int v = 1; v <= m; ++v) {
          if (neg)
            acc.at(v).sub_product(c, f.value(args, v));
          else
            acc.at(v).add_product(c, f.value(args, v));
        }
      }
      fill_without(j, z);
      add_rho(acc, idx[2 * j], idx[2 * j + 1], f.value_vec(args), !neg);
    }

    // Destructured last pair.
    {
      const int ap = idx[2 * (p - 1)];
      const int bp = idx[2 * (p - 1) + 1];
      fill_without(p - 1, ap);
      Vec fa = f.value_vec(args);
      fill_without(p - 1, bp);
      Vec fb = f.value_vec(args);
      const bool p_even = p % 2 == 0;
      // (-1)^(p+1) rho(bp, z) f(..., ap) + (-1)^p rho(ap, z) f(..., bp)
      add_rho(acc, bp, z, fa, p_even);
      add_rho(acc, ap, z, fb, !p_even);
    }

    if (!acc.is_zero())
      for (int v = 1; v <= m; ++v) out.value(idx, v) = acc.at(v);
  } while (next_tuple(idx, n));

  return out;
}

VerificationReport is_one_cocycle(const Matrix& f, const Representation& R,
                                  VerifyOptions opt) {
  const ThreeLieAlgebra& A = R.algebra();
  const int n = A.dim();
  const int m = R.module_dim();
  if (f.rows() != m || f.cols() != n)
    throw invalid_input("cocycle candidate has wrong shape");
  ReportBuilder rb("one-cocycle", opt);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        rb.count();
        Vec res = f.apply(A.basis_bracket(i, j, k));
        res -= R.rho(i, j).apply(f.column(k));
        res -= R.rho(j, k).apply(f.column(i));
        res -= R.rho(k, i).apply(f.column(j));
        for (int v = 1; v <= m; ++v)
          if (!res.at(v).is_zero()) {
            if (!rb.fail({i, j, k, v}, res.at(v))) return rb.take();
            break;
          }
      }
  return rb.take();
}

} // namespace trilie
