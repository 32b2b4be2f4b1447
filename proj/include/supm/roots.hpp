#ifndef SUPM_ROOTS_HPP
#define SUPM_ROOTS_HPP

#include <utility>
#include <vector>

#include "supm/poly.hpp"

namespace supm {

// Result of splitting off all Q(i)-rational roots of a polynomial.
struct RationalRootExtraction {
  std::vector<std::pair<GaussianRational, int>> roots;  // (root, multiplicity)
  Poly remaining;  // monic cofactor after dividing the roots out
  // True when the divisor enumeration was exhaustive, i.e. `remaining` is
  // guaranteed to have no Q(i) roots. False only when the factorization
  // effort budget was exceeded; `remaining` is then left unsplit.
  bool complete = true;
};

// Exhaustive rational-root test over Q(i): candidates p/q with p a Gaussian-
// integer divisor of the trailing coefficient (times a unit) and q a divisor
// of the leading coefficient, after clearing denominators. Throws on zero input.
RationalRootExtraction extract_rational_roots(const Poly& f);

}  // namespace supm

#endif
