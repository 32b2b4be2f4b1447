#include "supm/gaussian.hpp"

namespace supm {

GaussianRational GaussianRational::pow(unsigned e) const {
  GaussianRational r(1);
  GaussianRational base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

namespace {
// imaginary part alone: "i", "-i", "3i", "-2/3i"
std::string im_str(const BigRational& im) {
  if (im == BigRational(1)) return "i";
  if (im == BigRational(-1)) return "-i";
  return im.str() + "i";
}
}  // namespace

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_str(im_);
  if (im_ < BigRational(0)) {
    BigRational m = -im_;
    return re_.str() + "-" + (m == BigRational(1) ? "i" : m.str() + "i");
  }
  return re_.str() + "+" + (im_ == BigRational(1) ? "i" : im_.str() + "i");
}

}  // namespace supm
