#ifndef SUPM_POLY_HPP
#define SUPM_POLY_HPP

#include <utility>
#include <vector>

#include "supm/gaussian.hpp"

namespace supm {

// Dense univariate polynomial over Q(i), coefficients in ascending power order.
// Normalized: no stored leading zeros; the zero polynomial has no coefficients.
// degree() is only defined for nonzero polynomials (throws otherwise) so no
// -1 sentinel can leak into degree arithmetic.
class Poly {
 public:
  Poly() = default;
  Poly(GaussianRational constant) {  // NOLINT: implicit on purpose
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }
  Poly(long constant) : Poly(GaussianRational(constant)) {}
  explicit Poly(std::vector<GaussianRational> ascending) : c_(std::move(ascending)) {
    normalize();
  }

  // z^k
  static Poly monomial(int k, GaussianRational coeff = GaussianRational(1));
  // z - r
  static Poly linear_root(const GaussianRational& r);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const {
    if (is_zero()) throw std::logic_error("Poly: degree of zero polynomial");
    return static_cast<int>(c_.size()) - 1;
  }
  const GaussianRational& leading() const {
    if (is_zero()) throw std::logic_error("Poly: leading coefficient of zero polynomial");
    return c_.back();
  }
  // Coefficient of z^k; zero beyond the stored range.
  const GaussianRational& coeff(int k) const;
  const std::vector<GaussianRational>& coeffs() const { return c_; }

  bool is_monic() const { return !is_zero() && leading().is_one(); }
  Poly monic() const;

  GaussianRational eval(const GaussianRational& x) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const GaussianRational& s) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussianRational> c_;
};

// Quotient and remainder: f = q*g + r with r = 0 or deg r < deg g.
// Throws on zero divisor.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
// Exact division; throws if the remainder is nonzero.
Poly divexact(const Poly& f, const Poly& g);

Poly derivative(const Poly& f);

// Monic gcd. Throws when both inputs are zero.
Poly gcd(const Poly& f, const Poly& g);

bool is_squarefree(const Poly& f);

// Yun square-free decomposition: f = unit * prod parts[i].factor^parts[i].multiplicity,
// factors monic, square-free, pairwise coprime, multiplicities strictly increasing.
struct SquareFreePart {
  Poly factor;
  int multiplicity = 1;
};
struct SquareFreeDecomposition {
  std::vector<SquareFreePart> parts;
  GaussianRational unit;

  Poly reconstruct() const;
  // Number of distinct roots = sum of the factor degrees.
  int distinct_root_count() const;
  // Multiplicity of x as a root of the decomposed polynomial (0 if not a root).
  int multiplicity_at(const GaussianRational& x) const;
};
SquareFreeDecomposition squarefree_decompose(const Poly& f);

// Resultant with the convention Res(f, g) = lc(f)^deg(g) * prod g(alpha_i)
// over the roots alpha_i of f counted with multiplicity. Zero iff f and g
// share a root over C. Throws on zero input.
GaussianRational resultant(const Poly& f, const Poly& g);

// R(w) = Res_z(f(z), w - P(z)) normalized monic: the monic polynomial whose
// roots are P(alpha) over the roots alpha of f, with multiplicity. deg R = deg f.
// Throws if f = 0 or P is constant.
Poly bivariate_resultant_in_w(const Poly& f, const Poly& P);

// f(g(z))
Poly compose(const Poly& f, const Poly& g);

// Unique monic interpolating polynomial of degree <= points-1. Nodes must be distinct.
Poly lagrange_interpolate(const std::vector<GaussianRational>& xs,
                          const std::vector<GaussianRational>& ys);

// Monic S with S^2 = f (f monic, even degree); throws if f is not a perfect square.
Poly sqrt_exact(const Poly& f);

// For monic f with roots v_i: the monic polynomial with roots s*v_i.
Poly scale_roots(const Poly& f, const GaussianRational& s);

// Power sums p_1..p_count of the roots of a monic polynomial (Newton identities).
std::vector<GaussianRational> root_power_sums(const Poly& monic, int count);
// Monic polynomial of degree n whose roots have the given power sums p_1..p_n.
Poly poly_from_power_sums(const std::vector<GaussianRational>& sums);
// For monic f: the monic polynomial whose roots are v_i^e (with multiplicity).
Poly root_power_poly(const Poly& monic, unsigned e);

}  // namespace supm

#endif
