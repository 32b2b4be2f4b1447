#include "supm/poly.hpp"

#include <algorithm>

namespace supm {

namespace {
const GaussianRational kZero{};
}

Poly Poly::monomial(int k, GaussianRational coeff) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  std::vector<GaussianRational> c(static_cast<size_t>(k) + 1);
  c[static_cast<size_t>(k)] = std::move(coeff);
  return Poly(std::move(c));
}

Poly Poly::linear_root(const GaussianRational& r) {
  return Poly(std::vector<GaussianRational>{-r, GaussianRational(1)});
}

const GaussianRational& Poly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return kZero;
  return c_[static_cast<size_t>(k)];
}

Poly Poly::monic() const {
  if (is_zero()) throw std::logic_error("Poly: monic of zero polynomial");
  return scaled(leading().inverse());
}

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator-() const {
  std::vector<GaussianRational> c(c_.size());
  for (size_t t = 0; t < c_.size(); ++t) c[t] = -c_[t];
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t t = 0; t < c.size(); ++t) {
    if (t < a.c_.size()) c[t] += a.c_[t];
    if (t < b.c_.size()) c[t] += b.c_[t];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t s = 0; s < a.c_.size(); ++s) {
    if (a.c_[s].is_zero()) continue;
    for (size_t t = 0; t < b.c_.size(); ++t) c[s + t] += a.c_[s] * b.c_[t];
  }
  return Poly(std::move(c));
}

Poly Poly::scaled(const GaussianRational& s) const {
  if (s.is_zero()) return Poly();
  std::vector<GaussianRational> c(c_.size());
  for (size_t t = 0; t < c_.size(); ++t) c[t] = c_[t] * s;
  return Poly(std::move(c));
}

Poly Poly::pow(unsigned e) const {
  Poly r(1);
  Poly base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  if (f.is_zero()) return {Poly(), Poly()};
  int dg = g.degree();
  if (f.degree() < dg) return {Poly(), f};
  std::vector<GaussianRational> rem = f.coeffs();
  std::vector<GaussianRational> quo(static_cast<size_t>(f.degree() - dg) + 1);
  GaussianRational inv_lead = g.leading().inverse();
  for (int t = f.degree() - dg; t >= 0; --t) {
    GaussianRational q = rem[static_cast<size_t>(t + dg)] * inv_lead;
    if (q.is_zero()) continue;
    quo[static_cast<size_t>(t)] = q;
    for (int s = 0; s <= dg; ++s)
      rem[static_cast<size_t>(t + s)] -= q * g.coeff(s);
  }
  rem.resize(static_cast<size_t>(dg));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly divexact(const Poly& f, const Poly& g) {
  auto [q, r] = divrem(f, g);
  if (!r.is_zero()) throw std::logic_error("Poly: inexact division");
  return q;
}

Poly derivative(const Poly& f) {
  if (f.is_constant()) return Poly();
  std::vector<GaussianRational> c(static_cast<size_t>(f.degree()));
  for (int t = 1; t <= f.degree(); ++t)
    c[static_cast<size_t>(t - 1)] = f.coeff(t) * GaussianRational(t);
  return Poly(std::move(c));
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero())
    throw std::domain_error("Poly: gcd of two zero polynomials");
  Poly a = f, b = g;
  // Monic normalization every round keeps coefficient growth in check.
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = b.monic();
  }
  return a.monic();
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("Poly: square-freeness of zero polynomial");
  if (f.is_constant()) return true;
  return gcd(f, derivative(f)).is_constant();
}

Poly SquareFreeDecomposition::reconstruct() const {
  Poly p(unit);
  for (const auto& part : parts) p *= part.factor.pow(static_cast<unsigned>(part.multiplicity));
  return p;
}

int SquareFreeDecomposition::distinct_root_count() const {
  int k = 0;
  for (const auto& part : parts) k += part.factor.degree();
  return k;
}

int SquareFreeDecomposition::multiplicity_at(const GaussianRational& x) const {
  for (const auto& part : parts)
    if (part.factor.eval(x).is_zero()) return part.multiplicity;
  return 0;
}

SquareFreeDecomposition squarefree_decompose(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("Poly: square-free decomposition of zero");
  SquareFreeDecomposition out;
  out.unit = f.leading();
  if (f.is_constant()) return out;

  // Yun's algorithm over characteristic zero.
  Poly fm = f.monic();
  Poly df = derivative(fm);
  Poly g = gcd(fm, df);
  Poly w = divexact(fm, g);
  Poly z = divexact(df, g) - derivative(w);
  int i = 1;
  while (!w.is_constant()) {
    Poly h = gcd(w, z);  // gcd(w, 0) = monic w closes the final round
    if (!h.is_constant()) out.parts.push_back({h, i});
    w = divexact(w, h);
    z = divexact(z, h) - derivative(w);
    ++i;
  }
  return out;
}

GaussianRational resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("Poly: resultant of zero polynomial");
  if (f.is_constant()) return f.leading().pow(static_cast<unsigned>(g.is_constant() ? 0 : g.degree()));
  if (g.is_constant()) return g.leading().pow(static_cast<unsigned>(f.degree()));
  int m = f.degree(), n = g.degree();
  if (m > n) {
    GaussianRational sign = (m % 2 == 1 && n % 2 == 1) ? GaussianRational(-1) : GaussianRational(1);
    return sign * resultant(g, f);
  }
  Poly r = divrem(g, f).second;
  if (r.is_zero()) return GaussianRational();
  int dr = r.is_constant() ? 0 : r.degree();
  return f.leading().pow(static_cast<unsigned>(n - dr)) * resultant(f, r);
}

Poly lagrange_interpolate(const std::vector<GaussianRational>& xs,
                          const std::vector<GaussianRational>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("lagrange_interpolate: bad node lists");
  // Newton form: divided differences, then expand.
  size_t n = xs.size();
  std::vector<GaussianRational> dd = ys;
  for (size_t level = 1; level < n; ++level)
    for (size_t j = n - 1; j >= level; --j)
      dd[j] = (dd[j] - dd[j - 1]) / (xs[j] - xs[j - level]);
  Poly p(dd[n - 1]);
  for (size_t j = n - 1; j-- > 0;)
    p = p * Poly::linear_root(xs[j]) + Poly(dd[j]);
  return p;
}

Poly bivariate_resultant_in_w(const Poly& f, const Poly& P) {
  if (f.is_zero()) throw std::domain_error("bivariate_resultant_in_w: zero polynomial");
  if (P.is_constant()) throw std::domain_error("bivariate_resultant_in_w: constant P");
  if (f.is_constant()) return Poly(1);
  int d = f.degree();
  // Res_z(f, w - P) is a degree-d polynomial in w with leading coefficient
  // lc(f)^deg(P); recover it exactly from d+1 scalar resultants.
  std::vector<GaussianRational> xs, ys;
  xs.reserve(static_cast<size_t>(d) + 1);
  ys.reserve(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    GaussianRational wj{BigRational(j)};
    xs.push_back(wj);
    ys.push_back(resultant(f, Poly(wj) - P));
  }
  Poly r = lagrange_interpolate(xs, ys);
  if (r.is_zero() || r.degree() != d)
    throw std::logic_error("bivariate_resultant_in_w: degree contract violated");
  return r.monic();
}

Poly compose(const Poly& f, const Poly& g) {
  Poly acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
    acc = acc * g + Poly(*it);
  return acc;
}

Poly sqrt_exact(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("sqrt_exact: zero polynomial");
  if (!f.is_monic() || f.degree() % 2 != 0)
    throw std::domain_error("sqrt_exact: requires a monic polynomial of even degree");
  int d = f.degree() / 2;
  std::vector<GaussianRational> s(static_cast<size_t>(d) + 1);
  s[static_cast<size_t>(d)] = GaussianRational(1);
  GaussianRational two(2);
  for (int j = 1; j <= d; ++j) {
    // Coefficient of w^(2d-j) in S^2 must match f; only s[d-j] is unknown there.
    GaussianRational acc;
    for (int a = d - j + 1; a <= d; ++a) {
      int b = 2 * d - j - a;
      if (b < 0 || b > d || b <= d - j) continue;
      if (b > a) continue;
      GaussianRational term = s[static_cast<size_t>(a)] * s[static_cast<size_t>(b)];
      acc += (a == b) ? term : two * term;
    }
    s[static_cast<size_t>(d - j)] = (f.coeff(2 * d - j) - acc) / two;
  }
  Poly root{std::vector<GaussianRational>(s)};
  if (root * root != f) throw std::domain_error("sqrt_exact: not a perfect square");
  return root;
}

Poly scale_roots(const Poly& f, const GaussianRational& s) {
  if (f.is_zero() || !f.is_monic())
    throw std::domain_error("scale_roots: requires a monic polynomial");
  int d = f.degree();
  std::vector<GaussianRational> c(static_cast<size_t>(d) + 1);
  GaussianRational p(1);
  for (int t = d; t >= 0; --t) {
    c[static_cast<size_t>(t)] = f.coeff(t) * p;
    p *= s;
  }
  return Poly(std::move(c));
}

std::vector<GaussianRational> root_power_sums(const Poly& monic, int count) {
  if (monic.is_zero() || !monic.is_monic())
    throw std::domain_error("root_power_sums: requires a monic polynomial");
  int k = monic.is_constant() ? 0 : monic.degree();
  // e_j with sign: monic = sum_{j} (-1)^j e_j w^{k-j}
  std::vector<GaussianRational> e(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    GaussianRational c = monic.coeff(k - j);
    e[static_cast<size_t>(j)] = (j % 2 == 0) ? c : -c;
  }
  std::vector<GaussianRational> p(static_cast<size_t>(count) + 1);
  for (int j = 1; j <= count; ++j) {
    GaussianRational acc;
    for (int t = 1; t < j && t <= k; ++t) {
      GaussianRational term = e[static_cast<size_t>(t)] * p[static_cast<size_t>(j - t)];
      acc += (t % 2 == 1) ? term : -term;
    }
    if (j <= k) {
      GaussianRational je = GaussianRational(j) * e[static_cast<size_t>(j)];
      acc += (j % 2 == 1) ? je : -je;
    }
    p[static_cast<size_t>(j)] = acc;
  }
  return {p.begin() + 1, p.end()};
}

Poly poly_from_power_sums(const std::vector<GaussianRational>& sums) {
  int n = static_cast<int>(sums.size());
  std::vector<GaussianRational> e(static_cast<size_t>(n) + 1);
  e[0] = GaussianRational(1);
  for (int j = 1; j <= n; ++j) {
    GaussianRational acc;
    for (int t = 1; t <= j; ++t) {
      GaussianRational term = e[static_cast<size_t>(j - t)] * sums[static_cast<size_t>(t - 1)];
      acc += (t % 2 == 1) ? term : -term;
    }
    e[static_cast<size_t>(j)] = acc / GaussianRational(j);
  }
  std::vector<GaussianRational> c(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    c[static_cast<size_t>(n - j)] = (j % 2 == 0) ? e[static_cast<size_t>(j)] : -e[static_cast<size_t>(j)];
  return Poly(std::move(c));
}

Poly root_power_poly(const Poly& monic, unsigned e) {
  if (monic.is_zero() || !monic.is_monic())
    throw std::domain_error("root_power_poly: requires a monic polynomial");
  if (monic.is_constant()) return Poly(1);
  int k = monic.degree();
  auto p = root_power_sums(monic, static_cast<int>(e) * k);
  std::vector<GaussianRational> q(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j)
    q[static_cast<size_t>(j - 1)] = p[static_cast<size_t>(static_cast<int>(e) * j - 1)];
  return poly_from_power_sums(q);
}

}  // namespace supm
