#ifndef SUPM_CRITICAL_HPP
#define SUPM_CRITICAL_HPP

#include <optional>
#include <vector>

#include "supm/poly.hpp"
#include "supm/roots.hpp"

namespace supm {

// One group of critical points sharing a derivative multiplicity. Explicit
// points (Q(i)-rational) are split into their own entries with min_poly
// (z - point); points we cannot express in Q(i) stay grouped under their
// square-free factor of P'.
struct CriticalPoint {
  std::optional<GaussianRational> point;
  Poly min_poly;                    // monic; degree 1 iff point is explicit
  int derivative_multiplicity = 1;  // q_i: multiplicity as a zero of P'
  int value_order = 2;              // q_i + 1: order of the point as a P(point)-point
  std::optional<GaussianRational> critical_value;
  Poly value_poly;  // monic in w; roots are P(.) over the represented points
  bool splitting_complete = true;

  bool is_explicit() const { return point.has_value(); }
  int count() const { return min_poly.degree(); }  // points represented
};

// Distinct critical value(s) with the size of the fiber above them.
struct FiberCount {
  std::optional<GaussianRational> value;
  Poly value_factor;  // monic in w; degree 1 iff value is explicit
  int multiplicity_in_weighted_poly = 1;
  int distinct_preimages = 0;
  bool splitting_complete = true;

  int count() const { return value_factor.degree(); }
};

struct CriticalStructure {
  Poly polynomial;
  std::vector<CriticalPoint> points;
  int k = 0;                // number of distinct critical points
  Poly critical_value_poly; // R(w) = Res_z(S, w - P), S the square-free part of P'
  Poly weighted_value_poly; // D(w) = Res_z(P', w - P)
  bool critically_injective = false;  // iff R is square-free
  bool simple_zeros = false;          // iff gcd(P, P') is constant

  int degree() const { return polynomial.degree(); }
  // q_i over all distinct critical points, expanded and sorted descending.
  std::vector<int> multiplicities() const;
};

// Full critical structure of P. Requires deg P >= 2.
CriticalStructure analyze(const Poly& P);

// One entry per distinct critical value, from the square-free decomposition
// of D(w); no root-finding needed for the counts.
std::vector<FiberCount> fiber_counts(const CriticalStructure& cs);

// Distinct roots of P - value, read off the multiplicity of value in D(w).
int distinct_preimages_at(const CriticalStructure& cs, const GaussianRational& value);

// Monic polynomial (in w) whose roots are P(d_l) + P(d_m) over unordered
// pairs of distinct critical points; degree k(k-1)/2. Requires k >= 2.
Poly pairwise_value_sum_poly(const CriticalStructure& cs);

// P(d_1) + ... + P(d_k), exact even when individual values are irrational.
GaussianRational sum_of_critical_values(const CriticalStructure& cs);

// Root-sum composition for a monic polynomial r: eliminate u from r(u) and
// r(w - u), strip the doubled-root diagonal, take the exact square root.
Poly root_pair_sum_poly(const Poly& monic_r);
// Monic polynomial whose roots are u + v over roots u of r1, v of r2 (r1, r2 monic).
Poly root_cross_sum_poly(const Poly& r1, const Poly& r2);

}  // namespace supm

#endif
