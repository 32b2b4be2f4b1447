#ifndef SUPM_GAUSSIAN_HPP
#define SUPM_GAUSSIAN_HPP

#include <string>

#include "supm/rational.hpp"

namespace supm {

// Element of Q(i), the coefficient field of the whole library.
// Canonical componentwise: equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}  // NOLINT: implicit on purpose
  GaussianRational(BigRational re) : re_(std::move(re)) {}
  GaussianRational(BigRational re, BigRational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(BigRational(0), BigRational(1)); }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == BigRational(1); }
  bool is_rational() const { return im_.is_zero(); }
  bool is_integer() const { return im_.is_zero() && re_.is_integer(); }
  bool is_gaussian_integer() const { return re_.is_integer() && im_.is_integer(); }

  GaussianRational conj() const { return {re_, -im_}; }
  // |x|^2 = re^2 + im^2, always a nonnegative rational.
  BigRational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    // (a+bi)(c+di) = (ac - bd) + (ad + bc)i; copies tolerate o aliasing *this
    BigRational a = re_, b = im_, c = o.re_, d = o.im_;
    re_ = a * c - b * d;
    im_ = a * d + b * c;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    BigRational n = norm();
    return {re_ / n, -im_ / n};
  }

  GaussianRational pow(unsigned e) const;

  // "a/b", "c/di" or "a/b+c/di"; round-trips through the expression parser.
  std::string str() const;

 private:
  BigRational re_, im_;
};

}  // namespace supm

#endif
