#ifndef SUPM_RATIONAL_HPP
#define SUPM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace supm {

// Exact rational number. Canonical at all times: reduced, denominator > 0.
// Equality is structural equality of the canonical form.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  explicit BigRational(const mpz_class& n) : v_(n) {}
  BigRational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    v_.canonicalize();
  }
  BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

  // Accepts "p" or "p/q" with optional leading '-'.
  static BigRational from_string(const std::string& s);

  const mpz_class numerator() const { return v_.get_num(); }
  const mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
  long to_long() const { return v_.get_num().get_si(); }

  std::string str() const;

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

  BigRational inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    return BigRational(mpq_class(1 / v_));
  }

  BigRational abs() const { return v_ < 0 ? -*this : *this; }

  BigRational pow(unsigned e) const;

 private:
  explicit BigRational(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

}  // namespace supm

#endif
