#ifndef SUPM_FAMILIES_HPP
#define SUPM_FAMILIES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supm/poly.hpp"

namespace supm {

enum class FamilyId {
  Yi_PY,             // z^n + a z^(n-r) + b
  FrankReinders_PFR, // (n-1)(n-2)/2 z^n - n(n-2) z^(n-1) + n(n-1)/2 z^(n-2) - c
  Banerjee_PB,       // sum_i C(m,i)(-1)^i/(n+m+1-i) z^(n+m+1-i) + c
  Generalized_P,     // double-sum expansion with critical points a (mult n), b (mult m)
  Shifted_PB,        // Generalized_P at a = 0
  PowerGap,          // z^n - (n/m) z^m + b
  Thm2_3,            // z^n + a z^(n-1) + b z^(n-2), a^2 = lambda b
};

const char* to_string(FamilyId id);
std::optional<FamilyId> family_id_from_string(const std::string& name);

struct FamilySpec {
  FamilyId family;
  // Integer parameters (n, m, r) are passed as rational integers.
  std::map<std::string, GaussianRational> params;
};

// Raised when parameters hit an excluded value or break a side condition.
struct FamilyViolation : std::invalid_argument {
  FamilyViolation(std::string constraint_, std::string excluded_,
                  const std::string& message)
      : std::invalid_argument(message),
        constraint(std::move(constraint_)),
        excluded_set(std::move(excluded_)) {}
  std::string constraint;    // the violated condition
  std::string excluded_set;  // rendering of the forbidden values, when applicable
};

// Exact expansion of the named family; validates all side conditions.
Poly construct_family(const FamilySpec& spec);

struct FamilyInfo {
  FamilyId id;
  const char* cli_name;
  const char* display;
  const char* parameters;
  const char* constraints;
};
const std::vector<FamilyInfo>& family_catalog();

// sum_{i=0}^{m} C(m,i) (-1)^i / (n+m+1-i); the critical-value gap of the
// two-critical-point families (namespaced apart from lambda_thm23).
BigRational lambda_pb(long m, long n);
// 4 (1 - 1/(n-1)^2)
BigRational lambda_thm23(long n);

// psi(t) = lambda (t^(n-1) - A)^2 - 4 (t^(n-2) - A)(t^n - A), degree 2n-2.
Poly psi_poly(long n, const GaussianRational& A);

struct LemmaResult {
  bool holds = false;
  std::map<std::string, std::string> witness;
};

// psi has no multiple roots (A outside {0, 1}; witness: gcd(psi, psi')).
LemmaResult verify_lemma_3_1(long n, const GaussianRational& A);
// At A = 1: psi = (t-1)^4 g with g square-free, g(1) != 0, deg g = 2n-6.
LemmaResult verify_lemma_3_2_structure(long n);
// psi and t^n - A share no root (witness: their gcd).
LemmaResult verify_lemma_3_3(long n, const GaussianRational& A);

}  // namespace supm

#endif
