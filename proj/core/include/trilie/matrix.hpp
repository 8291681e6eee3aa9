#pragma once

#include "trilie/scalar.hpp"

#include <vector>

namespace trilie {

/// Coordinate vector in a fixed basis (1-based access).
class Vec {
public:
  Vec() : dim_(0) {}
  explicit Vec(int dim) : dim_(dim), c_(dim) {}
  Vec(int dim, std::vector<Scalar> coords);

  static Vec basis(int dim, int i);

  int dim() const { return dim_; }
  const Scalar& at(int i) const { return c_[check(i)]; }
  Scalar& at(int i) { return c_[check(i)]; }

  bool is_zero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  Vec operator-() const;
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Scalar& s, Vec v) { return v *= s; }
  friend bool operator==(const Vec& a, const Vec& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

  std::string str() const;

private:
  std::size_t check(int i) const {
    if (i < 1 || i > dim_) throw invalid_input("vector index out of range");
    return static_cast<std::size_t>(i - 1);
  }
  int dim_;
  std::vector<Scalar> c_;
};

/// Dense rows x cols matrix of Scalars, 1-based access.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), c_(std::size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Scalar& at(int r, int c) const { return c_[check(r, c)]; }
  Scalar& at(int r, int c) { return c_[check(r, c)]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const;
  /// Gauss-Jordan inverse; throws invalid_input when singular.
  Matrix inverse() const;
  bool is_invertible() const;

  Vec apply(const Vec& v) const;
  Vec column(int c) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  Matrix operator-() const;
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  Matrix operator*(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.c_ == b.c_;
  }

  /// out += s * (a*b), skipping zero entries of a.
  void add_scaled_product(const Matrix& a, const Matrix& b, const Scalar& s);

private:
  std::size_t check(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_)
      throw invalid_input("matrix index out of range");
    return static_cast<std::size_t>(r - 1) * cols_ + (c - 1);
  }
  int rows_, cols_;
  std::vector<Scalar> c_;
};

} // namespace trilie
