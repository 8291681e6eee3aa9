#include "trilie/matrix.hpp"

namespace trilie {

Vec::Vec(int dim, std::vector<Scalar> coords) : dim_(dim), c_(std::move(coords)) {
  if (static_cast<int>(c_.size()) != dim)
    throw invalid_input("vector length mismatch");
}

Vec Vec::basis(int dim, int i) {
  Vec v(dim);
  v.at(i) = Scalar(1);
  return v;
}

bool Vec::is_zero() const {
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

Vec& Vec::operator+=(const Vec& o) {
  if (dim_ != o.dim_) throw invalid_input("vector dimension mismatch");
  for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  if (dim_ != o.dim_) throw invalid_input("vector dimension mismatch");
  for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (Scalar& x : c_) x *= s;
  return *this;
}

Vec Vec::operator-() const {
  Vec v(*this);
  for (int i = 1; i <= dim_; ++i) v.at(i) = -v.at(i);
  return v;
}

std::string Vec::str() const {
  std::string out = "(";
  for (int i = 1; i <= dim_; ++i) {
    if (i > 1) out += ", ";
    out += at(i).str();
  }
  return out + ")";
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw invalid_input("inverse of a non-square matrix");
  int n = rows_;
  Matrix work(*this);
  Matrix inv = identity(n);
  for (int col = 1; col <= n; ++col) {
    int pivot = 0;
    for (int r = col; r <= n; ++r)
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == 0) throw invalid_input("singular matrix");
    if (pivot != col) {
      for (int c = 1; c <= n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    Scalar d = work.at(col, col).inverse();
    for (int c = 1; c <= n; ++c) {
      work.at(col, c) *= d;
      inv.at(col, c) *= d;
    }
    for (int r = 1; r <= n; ++r) {
      if (r == col) continue;
      Scalar f = work.at(r, col);
      if (f.is_zero()) continue;
      for (int c = 1; c <= n; ++c) {
        work.at(r, c).sub_product(f, work.at(col, c));
        inv.at(r, c).sub_product(f, inv.at(col, c));
      }
    }
  }
  return inv;
}

bool Matrix::is_invertible() const {
  if (!is_square()) return false;
  try {
    (void)inverse();
    return true;
  } catch (const invalid_input&) {
    return false;
  }
}

Vec Matrix::apply(const Vec& v) const {
  if (v.dim() != cols_) throw invalid_input("matrix-vector dimension mismatch");
  Vec out(rows_);
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c) out.at(r).add_product(at(r, c), v.at(c));
  return out;
}

Vec Matrix::column(int c) const {
  Vec out(rows_);
  for (int r = 1; r <= rows_; ++r) out.at(r) = at(r, c);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw invalid_input("matrix shape mismatch");
  for (std::size_t p = 0; p < c_.size(); ++p) c_[p] += o.c_[p];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw invalid_input("matrix shape mismatch");
  for (std::size_t p = 0; p < c_.size(); ++p) c_[p] -= o.c_[p];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (Scalar& x : c_) x *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix m(*this);
  for (Scalar& x : m.c_) x = -x;
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw invalid_input("matrix product shape mismatch");
  Matrix out(rows_, o.cols_);
  out.add_scaled_product(*this, o, Scalar(1));
  return out;
}

void Matrix::add_scaled_product(const Matrix& a, const Matrix& b, const Scalar& s) {
  if (a.cols_ != b.rows_ || rows_ != a.rows_ || cols_ != b.cols_)
    throw invalid_input("matrix product shape mismatch");
  if (s.is_zero()) return;
  for (int r = 1; r <= a.rows_; ++r)
    for (int k = 1; k <= a.cols_; ++k) {
      const Scalar& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      Scalar f = ark;
      f *= s;
      for (int c = 1; c <= b.cols_; ++c) at(r, c).add_product(f, b.at(k, c));
    }
}

} // namespace trilie
