#include "supm/families.hpp"

#include <numeric>

#include "supm/parser.hpp"

namespace supm {

const char* to_string(FamilyId id) {
  switch (id) {
    case FamilyId::Yi_PY: return "py";
    case FamilyId::FrankReinders_PFR: return "pfr";
    case FamilyId::Banerjee_PB: return "pb";
    case FamilyId::Generalized_P: return "genp";
    case FamilyId::Shifted_PB: return "shifted_pb";
    case FamilyId::PowerGap: return "powergap";
    case FamilyId::Thm2_3: return "thm2_3";
  }
  return "?";
}

std::optional<FamilyId> family_id_from_string(const std::string& name) {
  for (const auto& info : family_catalog())
    if (name == info.cli_name) return info.id;
  return std::nullopt;
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = {
      {FamilyId::Yi_PY, "py", "z^n + a z^(n-r) + b", "n, r, a, b",
       "gcd(n,r) = 1, 2 <= r < n, n >= 6, a*b != 0"},
      {FamilyId::FrankReinders_PFR, "pfr",
       "(n-1)(n-2)/2 z^n - n(n-2) z^(n-1) + n(n-1)/2 z^(n-2) - c", "n, c",
       "n >= 3, c not in {0, 1, 1/2}"},
      {FamilyId::Banerjee_PB, "pb",
       "sum_i C(m,i)(-1)^i/(n+m+1-i) z^(n+m+1-i) + c", "n, m, c",
       "n, m >= 1, c not in {0, -L, -L/2} with L = sum_i C(m,i)(-1)^i/(n+m+1-i)"},
      {FamilyId::Generalized_P, "genp",
       "Q(z) + c, Q'(z) = (z-b)^m (z-a)^n", "n, m, a, b, c",
       "n, m >= 1, b != 0, a != b, c not in {0, -Q(a), -Q(b), -(Q(a)+Q(b))/2}"},
      {FamilyId::Shifted_PB, "shifted_pb",
       "sum_i C(m,i)(-1)^i/(n+m+1-i) b^i z^(n+m+1-i) + c", "n, m, b, c",
       "n, m >= 1, b*c != 0, c not in {-b^(n+m+1) L, -b^(n+m+1) L/2}"},
      {FamilyId::PowerGap, "powergap", "z^n - (n/m) z^m + b", "n, m, b",
       "gcd(m,n) = 1, n - m >= 2, n >= 5, m >= 1, b not in {0, (n-m)/m, (n-m)/(2m)}"},
      {FamilyId::Thm2_3, "thm2_3", "z^n + a z^(n-1) + b z^(n-2)", "n, a, b",
       "n >= 6, a*b != 0, a^2 = lambda b with lambda = 4(1 - 1/(n-1)^2)"},
  };
  return catalog;
}

BigRational lambda_pb(long m, long n) {
  BigRational acc;
  for (long i = 0; i <= m; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m),
                 static_cast<unsigned long>(i));
    BigRational term(binom, mpz_class(n + m + 1 - i));
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

BigRational lambda_thm23(long n) {
  return BigRational(4) * (BigRational(1) - BigRational(1, (n - 1) * (n - 1)));
}

namespace {

[[noreturn]] void violate(const std::string& constraint, const std::string& excluded) {
  std::string message = "parameter violation: " + constraint;
  if (!excluded.empty()) message += "; excluded set " + excluded;
  throw FamilyViolation(constraint, excluded, message);
}

std::string set_str(const std::vector<GaussianRational>& vals) {
  std::string s = "{";
  for (size_t j = 0; j < vals.size(); ++j) {
    if (j) s += ", ";
    s += vals[j].str();
  }
  return s + "}";
}

long get_int(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) violate("missing integer parameter " + key, "");
  if (!it->second.is_integer())
    violate("parameter " + key + " must be an integer", "");
  return it->second.re().to_long();
}

GaussianRational get_scalar(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) violate("missing parameter " + key, "");
  return it->second;
}

void check_excluded(const GaussianRational& value, const std::string& name,
                    const std::vector<GaussianRational>& excluded) {
  for (const auto& e : excluded)
    if (value == e)
      violate(name + " = " + value.str() + " is excluded", set_str(excluded));
}

mpz_class binom(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

// The double-sum expansion with Q'(z) = (z-b)^m (z-a)^n; every family with
// two critical points is an instance of this.
Poly generalized_q(long m, long n, const GaussianRational& a, const GaussianRational& b) {
  std::vector<GaussianRational> coeffs(static_cast<size_t>(n + m + 2));
  for (long i = 0; i <= m; ++i) {
    GaussianRational bi = b.pow(static_cast<unsigned>(i));
    for (long j = 0; j <= n; ++j) {
      long e = n + m + 1 - i - j;
      GaussianRational term(BigRational(binom(m, i) * binom(n, j), mpz_class(e)));
      term *= bi * a.pow(static_cast<unsigned>(j));
      if ((i + j) % 2 == 1) term = -term;
      coeffs[static_cast<size_t>(e)] += term;
    }
  }
  return Poly(std::move(coeffs));
}

Poly construct_genp(long m, long n, const GaussianRational& a, const GaussianRational& b,
                    const GaussianRational& c) {
  if (n < 1 || m < 1) violate("n, m >= 1", "");
  if (b.is_zero()) violate("b != 0", "");
  if (a == b) violate("a != b", "");
  Poly q = generalized_q(m, n, a, b);
  GaussianRational qa = q.eval(a), qb = q.eval(b);
  std::vector<GaussianRational> excluded{GaussianRational(), -qa, -qb,
                                         -(qa + qb) / GaussianRational(2)};
  check_excluded(c, "c", excluded);
  return q + Poly(c);
}

}  // namespace

Poly construct_family(const FamilySpec& spec) {
  switch (spec.family) {
    case FamilyId::Yi_PY: {
      long n = get_int(spec, "n"), r = get_int(spec, "r");
      GaussianRational a = get_scalar(spec, "a"), b = get_scalar(spec, "b");
      if (r < 2) violate("r >= 2", "");
      if (n <= r) violate("n > r", "");
      if (n < 6) violate("n >= 6", "");
      if (std::gcd(n, r) != 1) violate("gcd(n, r) = 1", "");
      if ((a * b).is_zero()) violate("a*b != 0", "");
      return Poly::monomial(static_cast<int>(n)) +
             Poly::monomial(static_cast<int>(n - r), a) + Poly(b);
    }
    case FamilyId::FrankReinders_PFR: {
      long n = get_int(spec, "n");
      GaussianRational c = get_scalar(spec, "c");
      if (n < 3) violate("n >= 3", "");
      check_excluded(c, "c",
                     {GaussianRational(), GaussianRational(1),
                      GaussianRational(BigRational(1, 2))});
      return Poly::monomial(static_cast<int>(n), BigRational((n - 1) * (n - 2), 2)) +
             Poly::monomial(static_cast<int>(n - 1), BigRational(-n * (n - 2))) +
             Poly::monomial(static_cast<int>(n - 2), BigRational(n * (n - 1), 2)) +
             Poly(-c);
    }
    case FamilyId::Banerjee_PB: {
      long n = get_int(spec, "n"), m = get_int(spec, "m");
      GaussianRational c = get_scalar(spec, "c");
      if (n < 1 || m < 1) violate("n, m >= 1", "");
      GaussianRational lambda{lambda_pb(m, n)};
      check_excluded(c, "c", {GaussianRational(), -lambda, -lambda / GaussianRational(2)});
      return generalized_q(m, n, GaussianRational(), GaussianRational(1)) + Poly(c);
    }
    case FamilyId::Generalized_P: {
      long n = get_int(spec, "n"), m = get_int(spec, "m");
      return construct_genp(m, n, get_scalar(spec, "a"), get_scalar(spec, "b"),
                            get_scalar(spec, "c"));
    }
    case FamilyId::Shifted_PB: {
      long n = get_int(spec, "n"), m = get_int(spec, "m");
      return construct_genp(m, n, GaussianRational(), get_scalar(spec, "b"),
                            get_scalar(spec, "c"));
    }
    case FamilyId::PowerGap: {
      long n = get_int(spec, "n"), m = get_int(spec, "m");
      GaussianRational b = get_scalar(spec, "b");
      if (m < 1) violate("m >= 1", "");
      if (n - m < 2) violate("n - m >= 2", "");
      if (n < 5) violate("n >= 5", "");
      if (std::gcd(m, n) != 1) violate("gcd(m, n) = 1", "");
      check_excluded(b, "b",
                     {GaussianRational(), GaussianRational(BigRational(n - m, m)),
                      GaussianRational(BigRational(n - m, 2 * m))});
      return Poly::monomial(static_cast<int>(n)) +
             Poly::monomial(static_cast<int>(m), BigRational(-n, m)) + Poly(b);
    }
    case FamilyId::Thm2_3: {
      long n = get_int(spec, "n");
      GaussianRational a = get_scalar(spec, "a"), b = get_scalar(spec, "b");
      if (n < 6) violate("n >= 6", "");
      if ((a * b).is_zero()) violate("a*b != 0", "");
      GaussianRational lambda{lambda_thm23(n)};
      if (a * a != lambda * b)
        violate("a^2 = lambda*b with lambda = " + lambda.str() + " (got a^2 = " +
                    (a * a).str() + ", lambda*b = " + (lambda * b).str() + ")",
                "");
      return Poly::monomial(static_cast<int>(n)) +
             Poly::monomial(static_cast<int>(n - 1), a) +
             Poly::monomial(static_cast<int>(n - 2), b);
    }
  }
  throw std::logic_error("construct_family: unknown family");
}

Poly psi_poly(long n, const GaussianRational& A) {
  if (n < 3) throw std::domain_error("psi_poly: requires n >= 3");
  GaussianRational lambda{lambda_thm23(n)};
  Poly tn1 = Poly::monomial(static_cast<int>(n - 1)) - Poly(A);
  Poly tn2 = Poly::monomial(static_cast<int>(n - 2)) - Poly(A);
  Poly tn = Poly::monomial(static_cast<int>(n)) - Poly(A);
  return (tn1 * tn1).scaled(lambda) - (tn2 * tn).scaled(GaussianRational(4));
}

LemmaResult verify_lemma_3_1(long n, const GaussianRational& A) {
  if (A.is_zero() || A.is_one())
    throw std::domain_error("verify_lemma_3_1: requires A outside {0, 1}");
  Poly psi = psi_poly(n, A);
  Poly g = gcd(psi, derivative(psi));
  LemmaResult res;
  res.holds = g.is_constant();
  res.witness["gcd(psi, psi')"] = render_poly(g, 't');
  // psi(1) = (lambda - 4)(1 - A)^2, nonzero for A != 1; recorded since the
  // closed form is load-bearing for the no-multiple-roots claim.
  res.witness["psi(1)"] = psi.eval(GaussianRational(1)).str();
  res.witness["psi(1) closed form"] = "(lambda - 4)(1 - A)^2";
  return res;
}

LemmaResult verify_lemma_3_2_structure(long n) {
  if (n < 5) throw std::domain_error("verify_lemma_3_2_structure: requires n >= 5");
  Poly psi = psi_poly(n, GaussianRational(1));
  SquareFreeDecomposition sqf = squarefree_decompose(psi);
  LemmaResult res;
  const Poly t_minus_1 = Poly::linear_root(GaussianRational(1));
  res.holds = sqf.parts.size() == 2 && sqf.parts[0].multiplicity == 1 &&
              sqf.parts[1].multiplicity == 4 && sqf.parts[1].factor == t_minus_1 &&
              sqf.parts[0].factor.degree() == 2 * static_cast<int>(n) - 6 &&
              !sqf.parts[0].factor.eval(GaussianRational(1)).is_zero();
  std::string decomposition;
  for (const auto& part : sqf.parts) {
    if (!decomposition.empty()) decomposition += " * ";
    decomposition += "(" + render_poly(part.factor, 't') + ")^" +
                     std::to_string(part.multiplicity);
  }
  res.witness["decomposition"] = decomposition;
  if (!sqf.parts.empty())
    res.witness["deg_g"] = std::to_string(sqf.parts[0].factor.degree());
  return res;
}

LemmaResult verify_lemma_3_3(long n, const GaussianRational& A) {
  if (A.is_zero() || A.is_one())
    throw std::domain_error("verify_lemma_3_3: requires A outside {0, 1}");
  Poly psi = psi_poly(n, A);
  Poly g = gcd(psi, Poly::monomial(static_cast<int>(n)) - Poly(A));
  LemmaResult res;
  res.holds = g.is_constant();
  res.witness["gcd(psi, t^n - A)"] = render_poly(g, 't');
  return res;
}

}  // namespace supm
