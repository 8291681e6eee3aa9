#include "trilie/scalar.hpp"

#include <cctype>

namespace trilie {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
  if (den == 0) throw invalid_input("rational with zero denominator");
  re_.canonicalize();
}

mpq_class Scalar::parse_rational(const std::string& text) {
  if (text.empty()) throw invalid_input("empty rational literal");
  // GMP accepts whitespace and some exotic forms; insist on [-]digits[/digits].
  std::size_t pos = 0;
  auto digits = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    return p > start;
  };
  if (text[pos] == '-' || text[pos] == '+') ++pos;
  if (!digits(pos)) throw invalid_input("malformed rational: " + text);
  if (pos < text.size()) {
    if (text[pos] != '/') throw invalid_input("malformed rational: " + text);
    ++pos;
    if (!digits(pos) || pos != text.size())
      throw invalid_input("malformed rational: " + text);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw invalid_input("malformed rational: " + text);
  if (sgn(q.get_den()) == 0) throw invalid_input("zero denominator: " + text);
  q.canonicalize();
  return q;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw invalid_input("division by zero scalar");
  if (is_real()) return Scalar(mpq_class(1 / re_));
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

void Scalar::sub_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    re_ -= a.re_ * b.re_;
    return;
  }
  re_ -= a.re_ * b.re_ - a.im_ * b.im_;
  im_ -= a.re_ * b.im_ + a.im_ * b.re_;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = rational_str(re_);
  if (sgn(im_) != 0) {
    if (!out.empty() && sgn(im_) > 0) out += "+";
    out += rational_str(im_) + "i";
  }
  return out;
}

} // namespace trilie
