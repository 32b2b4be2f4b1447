#include "supm/critical.hpp"

#include <algorithm>

namespace supm {

std::vector<int> CriticalStructure::multiplicities() const {
  std::vector<int> qs;
  for (const auto& pt : points)
    for (int j = 0; j < pt.count(); ++j) qs.push_back(pt.derivative_multiplicity);
  std::sort(qs.rbegin(), qs.rend());
  return qs;
}

CriticalStructure analyze(const Poly& P) {
  if (P.is_zero() || P.degree() < 2)
    throw std::domain_error("analyze: critical structure requires degree >= 2");

  CriticalStructure cs;
  cs.polynomial = P;
  Poly dP = derivative(P);
  SquareFreeDecomposition sqf = squarefree_decompose(dP);

  Poly squarefree_part(1);
  for (const auto& part : sqf.parts) squarefree_part *= part.factor;
  cs.k = squarefree_part.is_constant() ? 0 : squarefree_part.degree();

  cs.critical_value_poly = bivariate_resultant_in_w(squarefree_part, P);
  cs.weighted_value_poly = bivariate_resultant_in_w(dP, P);
  cs.critically_injective = is_squarefree(cs.critical_value_poly);
  cs.simple_zeros = gcd(P, dP).is_constant();

  for (const auto& part : sqf.parts) {
    RationalRootExtraction ext = extract_rational_roots(part.factor);
    for (const auto& [root, mult] : ext.roots) {
      (void)mult;  // square-free factor: always 1
      CriticalPoint pt;
      pt.point = root;
      pt.min_poly = Poly::linear_root(root);
      pt.derivative_multiplicity = part.multiplicity;
      pt.value_order = part.multiplicity + 1;
      pt.critical_value = P.eval(root);
      pt.value_poly = Poly::linear_root(*pt.critical_value);
      cs.points.push_back(std::move(pt));
    }
    if (!ext.remaining.is_constant()) {
      CriticalPoint pt;
      pt.min_poly = ext.remaining;
      pt.derivative_multiplicity = part.multiplicity;
      pt.value_order = part.multiplicity + 1;
      pt.value_poly = bivariate_resultant_in_w(ext.remaining, P);
      pt.splitting_complete = ext.complete;
      cs.points.push_back(std::move(pt));
    }
  }
  return cs;
}

std::vector<FiberCount> fiber_counts(const CriticalStructure& cs) {
  int n = cs.degree();
  std::vector<FiberCount> out;
  SquareFreeDecomposition dsqf = squarefree_decompose(cs.weighted_value_poly);
  for (const auto& part : dsqf.parts) {
    RationalRootExtraction ext = extract_rational_roots(part.factor);
    for (const auto& [value, mult] : ext.roots) {
      (void)mult;
      FiberCount fc;
      fc.value = value;
      fc.value_factor = Poly::linear_root(value);
      fc.multiplicity_in_weighted_poly = part.multiplicity;
      fc.distinct_preimages = n - part.multiplicity;
      out.push_back(std::move(fc));
    }
    if (!ext.remaining.is_constant()) {
      FiberCount fc;
      fc.value_factor = ext.remaining;
      fc.multiplicity_in_weighted_poly = part.multiplicity;
      fc.distinct_preimages = n - part.multiplicity;
      fc.splitting_complete = ext.complete;
      out.push_back(std::move(fc));
    }
  }
  return out;
}

int distinct_preimages_at(const CriticalStructure& cs, const GaussianRational& value) {
  int mult = squarefree_decompose(cs.weighted_value_poly).multiplicity_at(value);
  return cs.degree() - mult;
}

GaussianRational sum_of_critical_values(const CriticalStructure& cs) {
  if (cs.k < 1) throw std::domain_error("sum_of_critical_values: no critical points");
  const Poly& r = cs.critical_value_poly;
  return -r.coeff(r.degree() - 1);
}

Poly root_cross_sum_poly(const Poly& r1, const Poly& r2) {
  if (r1.is_zero() || r2.is_zero() || !r1.is_monic() || !r2.is_monic())
    throw std::domain_error("root_cross_sum_poly: requires monic polynomials");
  if (r1.is_constant() || r2.is_constant()) return Poly(1);
  int d = r1.degree() * r2.degree();
  // E(w) = Res_u(r1(u), r2(w - u)) = prod_i r2(w - u_i): monic of degree d in w.
  std::vector<GaussianRational> xs, ys;
  xs.reserve(static_cast<size_t>(d) + 1);
  ys.reserve(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    GaussianRational wj{BigRational(j)};
    // r2(w_j - u) as a polynomial in u
    Poly shifted = compose(r2, Poly(std::vector<GaussianRational>{wj, GaussianRational(-1)}));
    xs.push_back(wj);
    ys.push_back(resultant(r1, shifted));
  }
  Poly e = lagrange_interpolate(xs, ys);
  if (e.is_zero() || e.degree() != d || !e.is_monic())
    throw std::logic_error("root_cross_sum_poly: eliminant contract violated");
  return e;
}

Poly root_pair_sum_poly(const Poly& monic_r) {
  if (monic_r.is_zero() || !monic_r.is_monic())
    throw std::domain_error("root_pair_sum_poly: requires a monic polynomial");
  if (monic_r.is_constant() || monic_r.degree() < 2)
    throw std::domain_error("root_pair_sum_poly: requires degree >= 2");
  Poly eliminant = root_cross_sum_poly(monic_r, monic_r);
  // Ordered pairs (l, m): the diagonal l = m contributes roots 2*v_l once,
  // every unordered pair l != m twice.
  Poly diagonal = scale_roots(monic_r, GaussianRational(2));
  Poly off_diagonal_squared = divexact(eliminant, diagonal);
  return sqrt_exact(off_diagonal_squared);
}

Poly pairwise_value_sum_poly(const CriticalStructure& cs) {
  if (cs.k < 2) throw std::domain_error("pairwise_value_sum_poly: requires k >= 2");
  return root_pair_sum_poly(cs.critical_value_poly);
}

}  // namespace supm
