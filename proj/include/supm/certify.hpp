#ifndef SUPM_CERTIFY_HPP
#define SUPM_CERTIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "supm/critical.hpp"

namespace supm {

enum class TheoremId {
  FujimotoA,
  FujimotoB,
  FujimotoC,
  FujimotoD,
  Thm2_1,
  Thm2_2,
  Cor2_1,
  Thm2_3_family,
  URS_F,
  URS_G,
  URS_2_4,
  URS_2_5,
};

enum class Verdict { Certified, HypothesisFailed, Inconclusive };

enum class Conclusion { UPM, SUPM, URSM_l, URSE_l, None };

const char* to_string(TheoremId id);
const char* to_string(Verdict v);
const char* to_string(Conclusion c);
std::optional<TheoremId> theorem_id_from_string(const std::string& name);

// Machine-checkable verdict for one criterion. Certified means every
// hypothesis of the named statement was verified exactly; HypothesisFailed
// names the first condition that is exactly false; Inconclusive means some
// needed quantity is out of reach of the Q(i) engine (reason in witnesses).
struct Certificate {
  Certificate() = default;
  explicit Certificate(TheoremId id) : theorem_id(id) {}

  TheoremId theorem_id = TheoremId::FujimotoA;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<std::string> failed_hypothesis;
  std::map<std::string, std::string> witnesses;
  Conclusion conclusion = Conclusion::None;
};

// Critically injective P is a uniqueness polynomial iff
// sum_{l<m} q_l q_m > sum_l q_l. The failure side refutes UPM.
Certificate check_fujimoto_A(const CriticalStructure& cs);

// k >= 4 and P(d_1) + ... + P(d_k) != 0 give a strong uniqueness polynomial.
Certificate check_fujimoto_B(const CriticalStructure& cs);

// k = 3, some q_i >= 2, pairwise value ratios != +-1 and no two ratios agree
// across a permutation.
Certificate check_fujimoto_C(const CriticalStructure& cs);

// k = 2 with (q_1 >= 3 and value sum != 0) or (q_1 >= 2 and q_2 >= q_1 + 3).
Certificate check_fujimoto_D(const CriticalStructure& cs);

struct Thm21Options {
  // Scan every pair of critical points instead of only the maximal-
  // multiplicity pair(s); an extension beyond the literal statement.
  bool any_pair = false;
};

// max{t,p} + t + p >= 5 + n and P(alpha) + P(beta) != 0 for the two critical
// points of maximal multiplicity (value orders t, p) upgrade a critically
// injective uniqueness polynomial with simple zeros to a strong one.
Certificate check_thm_2_1(const CriticalStructure& cs, const Thm21Options& opts = {});

// Fiber-count criterion: |p - q| >= 3 and every d outside the two chosen
// critical values has at least min{p,q} + 3 distinct preimages.
Certificate check_thm_2_2(
    const CriticalStructure& cs,
    std::optional<std::pair<GaussianRational, GaussianRational>> value_pair = {});

// P(delta) = 1, P(gamma)^2 not in {0, 1}, and at least q + 3 distinct zeros
// of P - d for every d outside the pair.
Certificate check_cor_2_1(const CriticalStructure& cs);

// Multiple-zero family z^n + a z^(n-1) + b z^(n-2): strong uniqueness
// polynomial when n >= 6, ab != 0 and a^2 = lambda b, lambda = 4(1 - 1/(n-1)^2).
Certificate check_thm_2_3_family(long n, const GaussianRational& a,
                                 const GaussianRational& b);
// Same check after recognizing the shape from a polynomial.
Certificate check_thm_2_3_poly(const Poly& P);

inline constexpr unsigned kUrsLevelInfinity = 0;  // l = infinity marker

struct UrsParams {
  unsigned l = 3;  // truncation level; kUrsLevelInfinity means infinity
  std::optional<BigRational> theta_min;  // lower bound on min Theta(infinity; .)
};

// Cardinality/deficiency thresholds under which the zero set of a certified
// strong uniqueness polynomial is a unique range set (level-l truncation).
// Thresholds: l>=3: n > 2k+6 (entire 2k+2); l=2: n > 2k+7 (2k+2);
// l=1: n > 2k+10 (2k+4). With theta_min given, the deficiency variants
// theta > (6+2k-n)/4, (14+4k-2n)/9, (10+2k-n)/6 are used instead.
// pprime_has_simple_zero: exact knowledge about simple zeros of P' when
// available; with k = 2 the standing hypotheses require there are none.
Certificate check_urs_thresholds(long n, long k, const UrsParams& params, bool entire,
                                 std::optional<bool> pprime_has_simple_zero = {});

// Thresholds specialized to the two-critical-point catalog profile of degree
// m + n + 1 (k = 2, P' without simple zeros for m, n >= 2).
Certificate check_urs_genp_profile(long m, long n, const UrsParams& params, bool entire);

struct ChainOptions {
  bool any_pair = false;
  // Empty set = the default chain A, B, C, D, 2.1, 2.2, Cor 2.1.
  std::set<TheoremId> theorems;
};

// All applicable certificates in a fixed order; never short-circuits on
// success so theorem reach can be compared.
std::vector<Certificate> run_certification_chain(const CriticalStructure& cs,
                                                 const ChainOptions& opts = {});

// Strongest conclusion in a certificate list (SUPM > UPM > none), with the
// certifying theorem when one exists.
std::pair<Conclusion, std::optional<TheoremId>> strongest_conclusion(
    const std::vector<Certificate>& certs);

}  // namespace supm

#endif
