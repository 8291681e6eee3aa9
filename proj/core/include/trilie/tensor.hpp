#pragma once

#include "trilie/scalar.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace trilie {

/// Dense order-k tensor over {1..n}^k with Scalar coefficients.
///
/// Indices are 1-based everywhere on the public surface. Storage is
/// row-major in the index tuple.
class Tensor {
public:
  Tensor() : order_(0), dim_(1), c_(1) {}
  Tensor(int order, int dim);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return c_.size(); }

  const Scalar& at(std::span<const int> idx) const { return c_[offset(idx)]; }
  Scalar& at(std::span<const int> idx) { return c_[offset(idx)]; }
  const Scalar& at(std::initializer_list<int> idx) const {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }
  Scalar& at(std::initializer_list<int> idx) {
    return at(std::span<const int>(idx.begin(), idx.size()));
  }

  /// Flat access in row-major order (for linear solves and IO).
  const Scalar& flat(std::size_t p) const { return c_[p]; }
  Scalar& flat(std::size_t p) { return c_[p]; }

  bool is_zero() const;
  /// First nonzero coefficient in row-major order, with its index tuple.
  std::optional<std::pair<std::vector<int>, Scalar>> first_nonzero() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Scalar& s);
  Tensor operator-() const;
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Scalar& s, Tensor t) { return t *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b);

  std::size_t offset(std::span<const int> idx) const;

private:
  int order_;
  int dim_;
  std::vector<Scalar> c_;
};

/// Swaps tensor slots i and j (1-based, i < j). Involution.
Tensor switching(const Tensor& t, int i, int j);

/// Unnormalized alternating sum over S3 of e_i (x) e_j (x) e_k; no 1/3! factor.
Tensor wedge3(int i, int j, int k, int n);

/// Inserts the order-1 tensor a at position pos (1..5) of an order-4 tensor.
Tensor insert_at(const Tensor& t, const Tensor& a, int pos);

/// Odometer over {1..n}^k in row-major (lexicographic) order.
/// Usage: std::vector<int> idx(k, 1); do { ... } while (next_tuple(idx, n));
inline bool next_tuple(std::vector<int>& idx, int n) {
  for (int t = static_cast<int>(idx.size()) - 1; t >= 0; --t) {
    if (idx[t] < n) {
      ++idx[t];
      return true;
    }
    idx[t] = 1;
  }
  return false;
}

} // namespace trilie
