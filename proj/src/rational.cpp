#include "supm/rational.hpp"

namespace supm {

BigRational BigRational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("BigRational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return BigRational(mpz_class(s, 10));
    mpz_class num(s.substr(0, slash), 10);
    mpz_class den(s.substr(slash + 1), 10);
    return BigRational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
  }
}

std::string BigRational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational BigRational::pow(unsigned e) const {
  BigRational r(1);
  BigRational base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace supm
