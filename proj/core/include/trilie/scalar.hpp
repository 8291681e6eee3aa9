#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace trilie {

/// Error type for malformed inputs and violated preconditions.
class invalid_input : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Gaussian rational a + b*i with arbitrary-precision rational parts.
///
/// All arithmetic is exact. Components are kept in lowest terms with
/// positive denominator (GMP canonical form), so equality is structural.
class Scalar {
public:
  Scalar() : re_(0), im_(0) {}
  Scalar(long n) : re_(n), im_(0) {}
  Scalar(mpq_class re) : re_(std::move(re)), im_(0) {}
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}
  Scalar(long num, long den);

  /// The imaginary unit.
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses "p/q" or "p" into an exact rational.
  static mpq_class parse_rational(const std::string& text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  Scalar conj() const { return Scalar(re_, mpq_class(-im_)); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  Scalar operator-() const { return Scalar(mpq_class(-re_), mpq_class(-im_)); }

  /// *this += a * b, with a fast path for real operands.
  void add_product(const Scalar& a, const Scalar& b);
  /// *this -= a * b.
  void sub_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Lowest-terms rendering: "p/q", "p/q+p'/q'i", "-2/3i", "0", ...
  std::string str() const;

private:
  mpq_class re_, im_;
};

std::string rational_str(const mpq_class& q);

} // namespace trilie
