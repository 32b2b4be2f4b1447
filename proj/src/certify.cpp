#include "supm/certify.hpp"

#include <algorithm>

#include "supm/parser.hpp"

namespace supm {

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::FujimotoA: return "FujimotoA";
    case TheoremId::FujimotoB: return "FujimotoB";
    case TheoremId::FujimotoC: return "FujimotoC";
    case TheoremId::FujimotoD: return "FujimotoD";
    case TheoremId::Thm2_1: return "Thm2_1";
    case TheoremId::Thm2_2: return "Thm2_2";
    case TheoremId::Cor2_1: return "Cor2_1";
    case TheoremId::Thm2_3_family: return "Thm2_3_family";
    case TheoremId::URS_F: return "URS_F";
    case TheoremId::URS_G: return "URS_G";
    case TheoremId::URS_2_4: return "URS_2_4";
    case TheoremId::URS_2_5: return "URS_2_5";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::HypothesisFailed: return "HypothesisFailed";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::UPM: return "UPM";
    case Conclusion::SUPM: return "SUPM";
    case Conclusion::URSM_l: return "URSM_l";
    case Conclusion::URSE_l: return "URSE_l";
    case Conclusion::None: return "none";
  }
  return "?";
}

std::optional<TheoremId> theorem_id_from_string(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "a" || s == "fujimotoa") return TheoremId::FujimotoA;
  if (s == "b" || s == "fujimotob") return TheoremId::FujimotoB;
  if (s == "c" || s == "fujimotoc") return TheoremId::FujimotoC;
  if (s == "d" || s == "fujimotod") return TheoremId::FujimotoD;
  if (s == "thm2_1" || s == "2.1" || s == "2_1") return TheoremId::Thm2_1;
  if (s == "thm2_2" || s == "2.2" || s == "2_2") return TheoremId::Thm2_2;
  if (s == "cor2_1" || s == "cor2.1") return TheoremId::Cor2_1;
  if (s == "thm2_3" || s == "2.3" || s == "thm2_3_family") return TheoremId::Thm2_3_family;
  if (s == "urs_f") return TheoremId::URS_F;
  if (s == "urs_g") return TheoremId::URS_G;
  if (s == "urs_2_4") return TheoremId::URS_2_4;
  if (s == "urs_2_5") return TheoremId::URS_2_5;
  return std::nullopt;
}

namespace {

std::string multiset_str(const std::vector<int>& qs) {
  std::string s = "{";
  for (size_t j = 0; j < qs.size(); ++j) {
    if (j) s += ", ";
    s += std::to_string(qs[j]);
  }
  return s + "}";
}

Certificate fail(Certificate cert, const std::string& hypothesis) {
  cert.verdict = Verdict::HypothesisFailed;
  cert.failed_hypothesis = hypothesis;
  cert.conclusion = Conclusion::None;
  return cert;
}

Certificate inconclusive(Certificate cert, const std::string& reason) {
  cert.verdict = Verdict::Inconclusive;
  cert.witnesses["reason"] = reason;
  cert.conclusion = Conclusion::None;
  return cert;
}

bool differs_from_pure_power(const Poly& t) {
  for (int j = 0; j < t.degree(); ++j)
    if (!t.coeff(j).is_zero()) return true;
  return false;
}

}  // namespace

Certificate check_fujimoto_A(const CriticalStructure& cs) {
  Certificate cert{TheoremId::FujimotoA};
  auto qs = cs.multiplicities();
  cert.witnesses["k"] = std::to_string(cs.k);
  cert.witnesses["q_multiset"] = multiset_str(qs);
  if (!cs.critically_injective)
    return inconclusive(std::move(cert), "not critically injective");

  long long sum = 0, sum_sq = 0;
  for (int q : qs) {
    sum += q;
    sum_sq += static_cast<long long>(q) * q;
  }
  long long pair_products = (sum * sum - sum_sq) / 2;
  cert.witnesses["sum_q"] = std::to_string(sum);
  cert.witnesses["sum_pair_products"] = std::to_string(pair_products);

  if (pair_products > sum) {
    cert.verdict = Verdict::Certified;
    cert.conclusion = Conclusion::UPM;
    return cert;
  }
  // Theorem A is an equivalence under critical injectivity, so the failed
  // inequality refutes the uniqueness property outright.
  cert.witnesses["not_upm"] = "true";
  return fail(std::move(cert), "pair_product_inequality");
}

Certificate check_fujimoto_B(const CriticalStructure& cs) {
  Certificate cert{TheoremId::FujimotoB};
  cert.witnesses["k"] = std::to_string(cs.k);
  if (!cs.critically_injective) return fail(std::move(cert), "critically_injective");
  if (cs.k < 4) return fail(std::move(cert), "k >= 4");
  GaussianRational sum = sum_of_critical_values(cs);
  cert.witnesses["value_sum"] = sum.str();
  if (sum.is_zero()) return fail(std::move(cert), "value_sum_nonzero");
  cert.verdict = Verdict::Certified;
  cert.conclusion = Conclusion::SUPM;
  return cert;
}

Certificate check_fujimoto_C(const CriticalStructure& cs) {
  Certificate cert{TheoremId::FujimotoC};
  cert.witnesses["k"] = std::to_string(cs.k);
  if (!cs.critically_injective) return fail(std::move(cert), "critically_injective");
  if (cs.k != 3) return fail(std::move(cert), "k == 3");

  auto qs = cs.multiplicities();
  cert.witnesses["q_multiset"] = multiset_str(qs);
  if (qs[0] < 2) return fail(std::move(cert), "max_multiplicity >= 2");

  const Poly& r = cs.critical_value_poly;
  cert.witnesses["critical_value_poly"] = render_poly(r, 'w');
  if (r.eval(GaussianRational()).is_zero())
    return fail(std::move(cert), "critical_values_nonzero");

  // Ratios of +1 are excluded by critical injectivity (distinct values);
  // recorded rather than silently skipped.
  cert.witnesses["ratio_plus_one"] = "excluded by critical injectivity";

  // Ratio -1 for some pair means that pair of values sums to zero.
  Poly pair_sums = root_pair_sum_poly(r);
  GaussianRational at_zero = pair_sums.eval(GaussianRational());
  cert.witnesses["pair_sum_poly_at_0"] = at_zero.str();
  if (at_zero.is_zero()) return fail(std::move(cert), "ratio_minus_one");

  // P(d_m)^2 = P(d_l) P(d_n) for the middle element m iff v_m^3 = e_3; the
  // permutation condition over all six permutations is therefore R_3(e_3) != 0
  // where R_3 has the cubed values as roots.
  GaussianRational e3 = -r.coeff(0);
  Poly cubed = root_power_poly(r, 3);
  GaussianRational perm = cubed.eval(e3);
  cert.witnesses["permutation_product"] = ((perm / e3) * (perm / e3)).str();
  if (perm.is_zero()) return fail(std::move(cert), "permutation_condition");

  cert.verdict = Verdict::Certified;
  cert.conclusion = Conclusion::SUPM;
  return cert;
}

Certificate check_fujimoto_D(const CriticalStructure& cs) {
  Certificate cert{TheoremId::FujimotoD};
  cert.witnesses["k"] = std::to_string(cs.k);
  if (!cs.critically_injective) return fail(std::move(cert), "critically_injective");
  if (cs.k != 2) return fail(std::move(cert), "k == 2");

  auto qs = cs.multiplicities();
  int q1 = qs[1], q2 = qs[0];  // q1 <= q2
  GaussianRational sum = sum_of_critical_values(cs);
  cert.witnesses["q1"] = std::to_string(q1);
  cert.witnesses["q2"] = std::to_string(q2);
  cert.witnesses["value_sum"] = sum.str();

  bool clause1 = q1 >= 3 && !sum.is_zero();
  bool clause2 = q1 >= 2 && q2 >= q1 + 3;
  cert.witnesses["clause1"] = clause1 ? "true" : "false";
  cert.witnesses["clause2"] = clause2 ? "true" : "false";
  if (!clause1 && !clause2) return fail(std::move(cert), "clause1_or_clause2");
  cert.verdict = Verdict::Certified;
  cert.conclusion = Conclusion::SUPM;
  return cert;
}

namespace {

// Value polynomial of all critical points with derivative multiplicity q.
Poly group_value_poly(const CriticalStructure& cs, int q, int* point_count) {
  Poly prod(1);
  int count = 0;
  for (const auto& pt : cs.points) {
    if (pt.derivative_multiplicity != q) continue;
    prod *= pt.value_poly;
    count += pt.count();
  }
  *point_count = count;
  return prod;
}

// Monic polynomial whose roots are P(alpha) + P(beta) over the maximal-
// multiplicity pairs of critical points.
Poly maximal_pair_sum_poly(const CriticalStructure& cs, int m1, int m2) {
  int count1 = 0;
  Poly top = group_value_poly(cs, m1, &count1);
  if (count1 >= 2) return root_pair_sum_poly(top);
  // Unique maximal point: a count-1 group has a linear min_poly, so its value
  // is explicit; pair it against every second-multiplicity point.
  GaussianRational alpha_value = -top.coeff(0);
  int count2 = 0;
  Poly second = group_value_poly(cs, m2, &count2);
  return compose(second, Poly(std::vector<GaussianRational>{-alpha_value, GaussianRational(1)}));
}

}  // namespace

Certificate check_thm_2_1(const CriticalStructure& cs, const Thm21Options& opts) {
  Certificate cert{TheoremId::Thm2_1};
  int n = cs.degree();
  cert.witnesses["n"] = std::to_string(n);
  cert.witnesses["k"] = std::to_string(cs.k);
  if (!cs.simple_zeros) return fail(std::move(cert), "simple_zeros");
  if (!cs.critically_injective) return fail(std::move(cert), "critically_injective");
  if (cs.k < 2) return fail(std::move(cert), "k >= 2");

  auto qs = cs.multiplicities();
  int m1 = qs[0], m2 = qs[1];
  int p = m1 + 1, t = m2 + 1;
  long lhs = std::max(t, p) + t + p, rhs = 5l + n;
  cert.witnesses["t"] = std::to_string(t);
  cert.witnesses["p"] = std::to_string(p);
  cert.witnesses["inequality_lhs"] = std::to_string(lhs);
  cert.witnesses["inequality_rhs"] = std::to_string(rhs);

  if (opts.any_pair) {
    cert.witnesses["mode"] = "extended: all pairs scanned (beyond the literal statement)";
    // Every unordered pair of distinct critical points, grouped by entries.
    bool found = false;
    for (size_t i = 0; i < cs.points.size() && !found; ++i) {
      for (size_t j = i; j < cs.points.size() && !found; ++j) {
        const auto& a = cs.points[i];
        const auto& b = cs.points[j];
        if (i == j && a.count() < 2) continue;
        int tt = std::min(a.derivative_multiplicity, b.derivative_multiplicity) + 1;
        int pp = std::max(a.derivative_multiplicity, b.derivative_multiplicity) + 1;
        if (std::max(tt, pp) + tt + pp < rhs) continue;
        Poly sums = (i == j) ? root_pair_sum_poly(a.value_poly)
                             : root_cross_sum_poly(a.value_poly, b.value_poly);
        if (differs_from_pure_power(sums)) {
          found = true;
          cert.witnesses["t"] = std::to_string(tt);
          cert.witnesses["p"] = std::to_string(pp);
          cert.witnesses["pair_sums"] = render_poly(sums, 'w');
        }
      }
    }
    if (!found) return fail(std::move(cert), "no_pair_satisfies_conditions");
  } else {
    Poly sums = maximal_pair_sum_poly(cs, m1, m2);
    if (sums.degree() == 1)
      cert.witnesses["sum"] = (-sums.coeff(0)).str();
    else
      cert.witnesses["maximal_pair_sums"] = render_poly(sums, 'w');
    if (lhs < rhs) return fail(std::move(cert), "inequality");
    if (!differs_from_pure_power(sums)) return fail(std::move(cert), "value_sum");
  }

  Certificate upm = check_fujimoto_A(cs);
  if (upm.verdict != Verdict::Certified) {
    cert.witnesses["upm_via"] = std::string("FujimotoA: ") + to_string(upm.verdict);
    return fail(std::move(cert), "upm");
  }
  cert.witnesses["upm_via"] = "FujimotoA";
  cert.verdict = Verdict::Certified;
  cert.conclusion = Conclusion::SUPM;
  return cert;
}

Certificate check_thm_2_2(
    const CriticalStructure& cs,
    std::optional<std::pair<GaussianRational, GaussianRational>> value_pair) {
  Certificate cert{TheoremId::Thm2_2};
  int n = cs.degree();
  cert.witnesses["n"] = std::to_string(n);
  cert.witnesses["k"] = std::to_string(cs.k);
  if (!cs.simple_zeros) return fail(std::move(cert), "simple_zeros");
  if (!cs.critically_injective) return fail(std::move(cert), "critically_injective");
  if (cs.k < 2) return fail(std::move(cert), "k >= 2");

  std::vector<FiberCount> fibers = fiber_counts(cs);

  auto entry_label = [](const FiberCount& f) {
    return f.value ? f.value->str() : "roots of " + render_poly(f.value_factor, 'w');
  };

  auto pair_passes = [&](size_t i, size_t j, std::string* note) {
    int pi = fibers[i].distinct_preimages;
    int qj = fibers[j].distinct_preimages;
    int lo = std::min(pi, qj);
    if (std::abs(pi - qj) < 3) {
      *note = "|p-q| = " + std::to_string(std::abs(pi - qj)) + " < 3";
      return false;
    }
    if (n < lo + 3) {
      *note = "degree " + std::to_string(n) + " < " + std::to_string(lo + 3);
      return false;
    }
    for (size_t e = 0; e < fibers.size(); ++e) {
      int leftover = fibers[e].count() - (e == i ? 1 : 0) - (e == j ? 1 : 0);
      if (leftover > 0 && fibers[e].distinct_preimages < lo + 3) {
        *note = "critical value " + entry_label(fibers[e]) + " has " +
                std::to_string(fibers[e].distinct_preimages) + " < " +
                std::to_string(lo + 3) + " distinct preimages";
        return false;
      }
    }
    return true;
  };

  auto certify_pair = [&](size_t i, size_t j) {
    cert.witnesses["gamma_value"] = entry_label(fibers[i]);
    cert.witnesses["delta_value"] = entry_label(fibers[j]);
    cert.witnesses["p"] = std::to_string(fibers[i].distinct_preimages);
    cert.witnesses["q"] = std::to_string(fibers[j].distinct_preimages);
    cert.witnesses["min_bound"] =
        std::to_string(std::min(fibers[i].distinct_preimages, fibers[j].distinct_preimages) + 3);
    cert.verdict = Verdict::Certified;
    cert.conclusion = Conclusion::SUPM;
  };

  if (value_pair) {
    const auto& [gv, dv] = *value_pair;
    if (gv == dv) return fail(std::move(cert), "selected_values_distinct");
    auto locate = [&](const GaussianRational& v) -> std::optional<size_t> {
      for (size_t e = 0; e < fibers.size(); ++e)
        if (fibers[e].value && *fibers[e].value == v) return e;
      return std::nullopt;
    };
    auto gi = locate(gv), di = locate(dv);
    if (!gi || !di) return fail(std::move(cert), "selected_values_not_critical");
    std::string note;
    if (!pair_passes(*gi, *di, &note)) {
      cert.witnesses["failure"] = note;
      return fail(std::move(cert), "fiber_conditions");
    }
    certify_pair(*gi, *di);
    return cert;
  }

  int scanned = 0;
  for (size_t i = 0; i < fibers.size(); ++i) {
    for (size_t j = 0; j < fibers.size(); ++j) {
      if (i == j) continue;  // same value, or same group: p = q
      std::string note;
      ++scanned;
      if (pair_passes(i, j, &note)) {
        certify_pair(i, j);
        return cert;
      }
      cert.witnesses["pair " + entry_label(fibers[i]) + " / " + entry_label(fibers[j])] = note;
    }
  }
  cert.witnesses["pairs_scanned"] = std::to_string(scanned);
  return fail(std::move(cert), "fiber_conditions");
}

Certificate check_cor_2_1(const CriticalStructure& cs) {
  Certificate cert{TheoremId::Cor2_1};
  int n = cs.degree();
  cert.witnesses["n"] = std::to_string(n);
  cert.witnesses["k"] = std::to_string(cs.k);
  if (!cs.simple_zeros) return fail(std::move(cert), "simple_zeros");
  if (!cs.critically_injective) return fail(std::move(cert), "critically_injective");
  if (cs.k < 2) return fail(std::move(cert), "k >= 2");

  std::vector<FiberCount> fibers = fiber_counts(cs);
  const GaussianRational one(1);

  std::optional<size_t> delta;
  bool unsplit = false;
  for (size_t e = 0; e < fibers.size(); ++e) {
    if (fibers[e].value && *fibers[e].value == one) delta = e;
    if (!fibers[e].splitting_complete) unsplit = true;
  }
  if (!delta) {
    // A split symbolic factor has only irrational roots, none of which can
    // equal 1; only an unsplit factor leaves the question open.
    if (unsplit)
      return inconclusive(std::move(cert),
                          "unsplit critical-value factor; cannot locate P(delta) = 1");
    return fail(std::move(cert), "delta_value_one");
  }

  int q = fibers[*delta].distinct_preimages;
  cert.witnesses["delta_value"] = "1";
  cert.witnesses["q"] = std::to_string(q);
  cert.witnesses["required_min_distinct_zeros"] = std::to_string(q + 3);
  if (n < q + 3) return fail(std::move(cert), "fiber_bound");

  // gamma candidates: critical values with value^2 not in {0, 1}. A factor
  // that does not vanish at 0, 1 or -1 has no root in {0, 1, -1}, so all of
  // its (possibly irrational) roots qualify.
  auto gamma_ok = [&](const FiberCount& f) {
    if (f.value) return !(f.value->is_zero() || *f.value == GaussianRational(-1));
    for (long v : {0l, 1l, -1l})
      if (f.value_factor.eval(GaussianRational(v)).is_zero()) return false;
    return true;
  };

  bool any_candidate = false;
  for (size_t g = 0; g < fibers.size(); ++g) {
    if (g == *delta || !gamma_ok(fibers[g])) continue;
    any_candidate = true;
    bool ok = true;
    for (size_t e = 0; e < fibers.size() && ok; ++e) {
      int leftover = fibers[e].count() - (e == *delta ? 1 : 0) - (e == g ? 1 : 0);
      if (leftover > 0 && fibers[e].distinct_preimages < q + 3) ok = false;
    }
    if (ok) {
      cert.witnesses["gamma_value"] = fibers[g].value
                                          ? fibers[g].value->str()
                                          : "root of " + render_poly(fibers[g].value_factor, 'w');
      cert.verdict = Verdict::Certified;
      cert.conclusion = Conclusion::SUPM;
      return cert;
    }
  }
  return fail(std::move(cert), any_candidate ? "others_fiber_bound" : "gamma_square");
}

Certificate check_thm_2_3_family(long n, const GaussianRational& a,
                                 const GaussianRational& b) {
  Certificate cert{TheoremId::Thm2_3_family};
  cert.witnesses["n"] = std::to_string(n);
  cert.witnesses["a"] = a.str();
  cert.witnesses["b"] = b.str();
  if (n < 6) return fail(std::move(cert), "n >= 6");

  BigRational lambda = BigRational(4) * (BigRational(1) - BigRational(1, (n - 1) * (n - 1)));
  cert.witnesses["lambda"] = lambda.str();
  if ((a * b).is_zero()) return fail(std::move(cert), "ab_nonzero");
  if (a * a != GaussianRational(lambda) * b) {
    cert.witnesses["a^2"] = (a * a).str();
    cert.witnesses["lambda*b"] = (GaussianRational(lambda) * b).str();
    return fail(std::move(cert), "a^2 = lambda*b");
  }
  Poly p = Poly::monomial(static_cast<int>(n)) +
           Poly::monomial(static_cast<int>(n) - 1, a) +
           Poly::monomial(static_cast<int>(n) - 2, b);
  cert.witnesses["polynomial"] = render_poly(p);
  cert.verdict = Verdict::Certified;
  cert.conclusion = Conclusion::SUPM;
  return cert;
}

Certificate check_thm_2_3_poly(const Poly& P) {
  Certificate cert{TheoremId::Thm2_3_family};
  if (P.is_zero() || P.degree() < 3 || !P.is_monic()) {
    cert.witnesses["shape"] = "expected monic z^n + a z^(n-1) + b z^(n-2)";
    return fail(std::move(cert), "family_shape");
  }
  int n = P.degree();
  for (int j = 0; j <= n - 3; ++j) {
    if (!P.coeff(j).is_zero()) {
      cert.witnesses["shape"] = "expected monic z^n + a z^(n-1) + b z^(n-2)";
      return fail(std::move(cert), "family_shape");
    }
  }
  return check_thm_2_3_family(n, P.coeff(n - 1), P.coeff(n - 2));
}

Certificate check_urs_thresholds(long n, long k, const UrsParams& params, bool entire,
                                 std::optional<bool> pprime_has_simple_zero) {
  Certificate cert{params.theta_min ? TheoremId::URS_G : TheoremId::URS_F};
  cert.witnesses["n"] = std::to_string(n);
  cert.witnesses["k"] = std::to_string(k);
  cert.witnesses["l"] =
      params.l == kUrsLevelInfinity ? std::string("inf") : std::to_string(params.l);
  cert.witnesses["functions"] = entire ? "entire" : "meromorphic";

  if (k < 2)
    return inconclusive(std::move(cert),
                        "standing hypotheses need k >= 3, or k = 2 with no simple zero of P'");
  if (k == 2 && pprime_has_simple_zero && *pprime_has_simple_zero)
    return inconclusive(std::move(cert), "k = 2 but P' has a simple zero");

  int bucket = (params.l == 1) ? 1 : (params.l == 2) ? 2 : 3;
  bool ok;
  if (params.theta_min) {
    const BigRational& theta = *params.theta_min;
    if (theta < BigRational(0) || theta > BigRational(1))
      throw std::invalid_argument("check_urs_thresholds: theta_min outside [0,1]");
    BigRational bound = bucket == 3 ? BigRational(6 + 2 * k - n, 4)
                        : bucket == 2 ? BigRational(14 + 4 * k - 2 * n, 9)
                                      : BigRational(10 + 2 * k - n, 6);
    cert.witnesses["theta_min"] = theta.str();
    cert.witnesses["deficiency_bound"] = bound.str();
    ok = theta > bound;
  } else {
    long threshold = bucket == 3 ? (entire ? 2 * k + 2 : 2 * k + 6)
                     : bucket == 2 ? (entire ? 2 * k + 2 : 2 * k + 7)
                                   : (entire ? 2 * k + 4 : 2 * k + 10);
    cert.witnesses["threshold"] = "n > " + std::to_string(threshold);
    ok = n > threshold;
  }
  if (!ok) return fail(std::move(cert), "threshold");
  cert.verdict = Verdict::Certified;
  cert.conclusion = entire ? Conclusion::URSE_l : Conclusion::URSM_l;
  return cert;
}

Certificate check_urs_genp_profile(long m, long n, const UrsParams& params, bool entire) {
  Certificate cert = check_urs_thresholds(m + n + 1, 2, params, entire,
                                          std::min(m, n) < 2 ? std::optional<bool>(true)
                                                             : std::optional<bool>(false));
  cert.theorem_id = params.theta_min ? TheoremId::URS_2_5 : TheoremId::URS_2_4;
  cert.witnesses["m"] = std::to_string(m);
  cert.witnesses["n"] = std::to_string(n);
  cert.witnesses["m+n"] = std::to_string(m + n);
  cert.witnesses["degree"] = std::to_string(m + n + 1);
  return cert;
}

std::vector<Certificate> run_certification_chain(const CriticalStructure& cs,
                                                 const ChainOptions& opts) {
  auto wanted = [&opts](TheoremId id) {
    return opts.theorems.empty() ? id != TheoremId::Thm2_3_family
                                 : opts.theorems.count(id) > 0;
  };
  std::vector<Certificate> out;
  if (wanted(TheoremId::FujimotoA)) out.push_back(check_fujimoto_A(cs));
  if (wanted(TheoremId::FujimotoB)) out.push_back(check_fujimoto_B(cs));
  if (wanted(TheoremId::FujimotoC)) out.push_back(check_fujimoto_C(cs));
  if (wanted(TheoremId::FujimotoD)) out.push_back(check_fujimoto_D(cs));
  if (wanted(TheoremId::Thm2_1)) out.push_back(check_thm_2_1(cs, {opts.any_pair}));
  if (wanted(TheoremId::Thm2_2)) out.push_back(check_thm_2_2(cs));
  if (wanted(TheoremId::Cor2_1)) out.push_back(check_cor_2_1(cs));
  if (!opts.theorems.empty() && opts.theorems.count(TheoremId::Thm2_3_family))
    out.push_back(check_thm_2_3_poly(cs.polynomial));
  return out;
}

std::pair<Conclusion, std::optional<TheoremId>> strongest_conclusion(
    const std::vector<Certificate>& certs) {
  auto rank = [](Conclusion c) {
    switch (c) {
      case Conclusion::SUPM: return 2;
      case Conclusion::UPM: return 1;
      default: return 0;
    }
  };
  Conclusion best = Conclusion::None;
  std::optional<TheoremId> by;
  for (const auto& cert : certs) {
    if (cert.verdict != Verdict::Certified) continue;
    if (rank(cert.conclusion) > rank(best)) {
      best = cert.conclusion;
      by = cert.theorem_id;
    }
  }
  return {best, by};
}

}  // namespace supm
