#include "trilie/tensor.hpp"

#include <array>

namespace trilie {

namespace {

std::size_t pow_size(int dim, int order) {
  std::size_t s = 1;
  for (int t = 0; t < order; ++t) s *= static_cast<std::size_t>(dim);
  return s;
}

} // namespace

Tensor::Tensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 0) throw invalid_input("tensor order must be >= 0");
  if (dim < 1) throw invalid_input("tensor dimension must be >= 1");
  c_.assign(pow_size(dim, order), Scalar());
}

std::size_t Tensor::offset(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order_)
    throw invalid_input("tensor index arity mismatch");
  std::size_t off = 0;
  for (int t = 0; t < order_; ++t) {
    if (idx[t] < 1 || idx[t] > dim_)
      throw invalid_input("tensor index out of range");
    off = off * static_cast<std::size_t>(dim_) +
          static_cast<std::size_t>(idx[t] - 1);
  }
  return off;
}

bool Tensor::is_zero() const {
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

std::optional<std::pair<std::vector<int>, Scalar>> Tensor::first_nonzero() const {
  if (order_ == 0) {
    if (!c_[0].is_zero()) return std::pair{std::vector<int>{}, c_[0]};
    return std::nullopt;
  }
  std::vector<int> idx(order_, 1);
  std::size_t p = 0;
  do {
    if (!c_[p].is_zero()) return std::pair{idx, c_[p]};
    ++p;
  } while (next_tuple(idx, dim_));
  return std::nullopt;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (order_ != o.order_ || dim_ != o.dim_)
    throw invalid_input("tensor shape mismatch");
  for (std::size_t p = 0; p < c_.size(); ++p) c_[p] += o.c_[p];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (order_ != o.order_ || dim_ != o.dim_)
    throw invalid_input("tensor shape mismatch");
  for (std::size_t p = 0; p < c_.size(); ++p) c_[p] -= o.c_[p];
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  for (Scalar& x : c_) x *= s;
  return *this;
}

Tensor Tensor::operator-() const {
  Tensor t(*this);
  for (Scalar& x : t.c_) x = -x;
  return t;
}

bool operator==(const Tensor& a, const Tensor& b) {
  return a.order_ == b.order_ && a.dim_ == b.dim_ && a.c_ == b.c_;
}

Tensor switching(const Tensor& t, int i, int j) {
  if (t.order() < 2) throw invalid_input("switching needs order >= 2");
  if (i < 1 || j <= i || j > t.order())
    throw invalid_input("switching positions out of range");
  Tensor out(t.order(), t.dim());
  std::vector<int> idx(t.order(), 1);
  std::vector<int> src(t.order());
  do {
    src = idx;
    std::swap(src[i - 1], src[j - 1]);
    out.at(idx) = t.at(src);
  } while (next_tuple(idx, t.dim()));
  return out;
}

Tensor wedge3(int i, int j, int k, int n) {
  if (i < 1 || i > n || j < 1 || j > n || k < 1 || k > n)
    throw invalid_input("wedge3 index out of range");
  Tensor out(3, n);
  static constexpr std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  const int base[3] = {i, j, k};
  for (std::size_t p = 0; p < perms.size(); ++p) {
    Scalar sign(p < 3 ? 1 : -1);
    out.at({base[perms[p][0]], base[perms[p][1]], base[perms[p][2]]}) += sign;
  }
  return out;
}

Tensor insert_at(const Tensor& t, const Tensor& a, int pos) {
  if (t.order() != 4 || a.order() != 1)
    throw invalid_input("insert_at expects an order-4 tensor and an order-1 tensor");
  if (t.dim() != a.dim()) throw invalid_input("insert_at dimension mismatch");
  if (pos < 1 || pos > 5) throw invalid_input("insert position out of 1..5");
  Tensor out(5, t.dim());
  std::vector<int> idx(5, 1);
  std::vector<int> rest(4);
  do {
    int r = 0;
    for (int s = 0; s < 5; ++s)
      if (s != pos - 1) rest[r++] = idx[s];
    out.at(idx).add_product(t.at(rest), a.at({idx[pos - 1]}));
  } while (next_tuple(idx, t.dim()));
  return out;
}

} // namespace trilie
