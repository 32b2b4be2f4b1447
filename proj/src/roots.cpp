#include "supm/roots.hpp"

#include <optional>
#include <unordered_set>

namespace supm {

namespace {

struct Gint {
  mpz_class re, im;

  mpz_class norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }
  Gint conj() const { return {re, -im}; }
  Gint operator*(const Gint& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
};

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  // nearest integer to a/b, ties toward zero are fine for Euclid
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r >= b) ++q;
  return q;
}

// Exact quotient a/b when b | a in Z[i], otherwise nullopt.
std::optional<Gint> divide_exact(const Gint& a, const Gint& b) {
  mpz_class n = b.norm();
  Gint num = a * b.conj();
  if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
  return Gint{num.re / n, num.im / n};
}

Gint gint_mod(const Gint& a, const Gint& b) {
  mpz_class n = b.norm();
  Gint num = a * b.conj();
  Gint q{round_div(num.re, n), round_div(num.im, n)};
  Gint qb = q * b;
  return {a.re - qb.re, a.im - qb.im};
}

Gint gint_gcd(Gint a, Gint b) {
  while (!b.is_zero()) {
    Gint r = gint_mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

constexpr unsigned long kTrialLimit = 1u << 20;
constexpr size_t kMaxCandidates = 200000;

// Factor n > 0 into rational primes. Returns false if a composite cofactor
// survives trial division (budget exceeded).
bool factor_integer(mpz_class n, std::vector<std::pair<mpz_class, int>>& out) {
  auto push = [&out](const mpz_class& p) {
    if (!out.empty() && out.back().first == p)
      out.back().second++;
    else
      out.emplace_back(p, 1);
  };
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_class(p) * p > n) break;
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0) return false;
    push(n);
  }
  return true;
}

// Square root of -1 mod p for prime p = 1 (mod 4).
mpz_class sqrt_minus_one(const mpz_class& p) {
  mpz_class exp = (p - 1) / 4;
  for (unsigned long a = 2;; ++a) {
    mpz_class base(a);
    if (mpz_legendre(base.get_mpz_t(), p.get_mpz_t()) != -1) continue;
    mpz_class x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
    return x;
  }
}

// Gaussian prime factorization of nonzero b, up to units.
bool gint_factor(Gint b, std::vector<std::pair<Gint, int>>& out) {
  std::vector<std::pair<mpz_class, int>> norm_primes;
  if (!factor_integer(b.norm(), norm_primes)) return false;
  for (const auto& [p, _] : norm_primes) {
    std::vector<Gint> primes;
    if (p == 2) {
      primes.push_back({1, 1});
    } else if (p % 4 == 3) {
      primes.push_back({p, 0});
    } else {
      Gint pi = gint_gcd({p, 0}, {sqrt_minus_one(p), 1});
      primes.push_back(pi);
      primes.push_back(pi.conj());
    }
    for (const auto& pi : primes) {
      int e = 0;
      while (true) {
        auto q = divide_exact(b, pi);
        if (!q) break;
        b = *q;
        ++e;
      }
      if (e > 0) out.emplace_back(pi, e);
    }
  }
  return b.is_unit();
}

std::vector<Gint> divisors_up_to_units(const Gint& b) {
  std::vector<std::pair<Gint, int>> primes;
  if (!gint_factor(b, primes)) return {};
  std::vector<Gint> divs{{1, 0}};
  for (const auto& [p, e] : primes) {
    std::vector<Gint> next;
    next.reserve(divs.size() * static_cast<size_t>(e + 1));
    for (const auto& d : divs) {
      Gint cur = d;
      next.push_back(cur);
      for (int j = 0; j < e; ++j) {
        cur = cur * p;
        next.push_back(cur);
      }
    }
    divs = std::move(next);
    if (divs.size() > kMaxCandidates) return {};
  }
  return divs;
}

GaussianRational to_gr(const Gint& g) {
  return {BigRational(g.re), BigRational(g.im)};
}

}  // namespace

RationalRootExtraction extract_rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("extract_rational_roots: zero polynomial");
  RationalRootExtraction out;
  Poly rest = f;

  // Root at the origin first.
  int zero_mult = 0;
  while (!rest.is_constant() && rest.coeff(0).is_zero()) {
    rest = divexact(rest, Poly::monomial(1));
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(GaussianRational(), zero_mult);

  auto take_root = [&](const GaussianRational& r) {
    int mult = 0;
    while (!rest.is_constant()) {
      auto [q, rem] = divrem(rest, Poly::linear_root(r));
      if (!rem.is_zero()) break;
      rest = q;
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  };

  if (!rest.is_constant() && rest.degree() == 1) {
    take_root(-rest.coeff(0) / rest.coeff(1));
  } else if (!rest.is_constant()) {
    // Clear denominators to land in Z[i].
    mpz_class scale = 1;
    for (const auto& c : rest.coeffs()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), c.re().denominator().get_mpz_t(),
              c.im().denominator().get_mpz_t());
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), l.get_mpz_t());
    }
    auto as_gint = [&scale](const GaussianRational& c) {
      return Gint{c.re().numerator() * (scale / c.re().denominator()),
                  c.im().numerator() * (scale / c.im().denominator())};
    };
    Gint trailing = as_gint(rest.coeff(0));
    Gint leading = as_gint(rest.leading());
    // Shrink the anchors by the full Z[i] content: the primitive part has the
    // same roots and strictly smaller divisor sets.
    Gint content{0, 0};
    for (const auto& c : rest.coeffs()) content = gint_gcd(content, as_gint(c));
    if (!content.is_unit()) {
      trailing = *divide_exact(trailing, content);
      leading = *divide_exact(leading, content);
    }

    auto num_divs = divisors_up_to_units(trailing);
    auto den_divs = divisors_up_to_units(leading);
    if (num_divs.empty() || den_divs.empty() ||
        num_divs.size() * den_divs.size() * 4 > kMaxCandidates) {
      out.complete = false;
      out.remaining = rest.monic();
      return out;
    }

    const GaussianRational units[4] = {
        GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
        -GaussianRational::i()};
    std::unordered_set<std::string> seen;
    for (const auto& p : num_divs) {
      if (rest.is_constant()) break;
      for (const auto& q : den_divs) {
        if (rest.is_constant()) break;
        GaussianRational base = to_gr(p) / to_gr(q);
        for (const auto& u : units) {
          if (rest.is_constant()) break;
          GaussianRational cand = base * u;
          if (!seen.insert(cand.str()).second) continue;
          if (rest.eval(cand).is_zero()) take_root(cand);
        }
      }
    }
  }

  out.remaining = rest.is_zero() ? rest : rest.monic();
  return out;
}

}  // namespace supm
