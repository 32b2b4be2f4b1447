#include <doctest.h>

#include "supm/certify.hpp"
#include "supm/families.hpp"
#include "supm/parser.hpp"
#include "test_util.hpp"

using namespace supm;
using namespace supm::testutil;

namespace {

GaussianRational gr(long num, long den = 1) { return {BigRational(num, den)}; }

FamilySpec spec(FamilyId id, std::map<std::string, GaussianRational> params) {
  return {id, std::move(params)};
}

}  // namespace

TEST_CASE("the two lambda symbols stay separate") {
  CHECK(lambda_pb(2, 3) == BigRational(1, 60));
  CHECK(lambda_pb(3, 2) == BigRational(-1, 60));
  CHECK(lambda_thm23(6) == BigRational(96, 25));
  CHECK(lambda_thm23(5) == BigRational(15, 4));
}

TEST_CASE("pb expansion matches the displayed sum and its derivative") {
  Poly p = construct_family(spec(FamilyId::Banerjee_PB,
                                 {{"n", gr(3)}, {"m", gr(2)}, {"c", gr(1)}}));
  CHECK(p == parse_poly("1/6 z^6 - 2/5 z^5 + 1/4 z^4 + 1"));
  CHECK(derivative(p) == parse_poly("z^3 (z-1)^2"));
  CHECK(p.eval(gr(1)) - p.eval(gr(0)) == GaussianRational(BigRational(1, 60)));
}

TEST_CASE("generalized family: derivative shape and the a=0, b=1 specialization") {
  auto rng = make_rng(101);
  for (int t = 0; t < 12; ++t) {
    std::uniform_int_distribution<int> small(1, 4);
    long m = small(rng), n = small(rng);
    GaussianRational a = random_gaussian(rng, 3, 2);
    GaussianRational b = random_nonzero_gaussian(rng, 3, 2);
    if (a == b) continue;
    Poly q;
    try {
      q = construct_family(spec(FamilyId::Generalized_P,
                                {{"n", gr(n)}, {"m", gr(m)}, {"a", a}, {"b", b},
                                 {"c", gr(1)}}));
    } catch (const FamilyViolation&) {
      continue;  // c = 1 can land in the excluded set for some draws
    }
    Poly expected_derivative =
        Poly::linear_root(b).pow(static_cast<unsigned>(m)) *
        Poly::linear_root(a).pow(static_cast<unsigned>(n));
    CHECK(derivative(q) == expected_derivative);
    // antiderivative route: same polynomial up to the constant term
    CHECK(q == antiderivative(expected_derivative, q.eval(GaussianRational())));
  }

  // coefficientwise identity with the one-parameter family over a small grid
  for (long m = 1; m <= 3; ++m) {
    for (long n = 1; n <= 3; ++n) {
      Poly via_general = construct_family(spec(
          FamilyId::Generalized_P,
          {{"n", gr(n)}, {"m", gr(m)}, {"a", gr(0)}, {"b", gr(1)}, {"c", gr(2)}}));
      Poly direct = construct_family(
          spec(FamilyId::Banerjee_PB, {{"n", gr(n)}, {"m", gr(m)}, {"c", gr(2)}}));
      CHECK(via_general == direct);
    }
  }
}

TEST_CASE("catalog profiles match the analyzer") {
  // two-point family: points 0 (q = n) and 1 (q = m)
  CriticalStructure pb = analyze(construct_family(
      spec(FamilyId::Banerjee_PB, {{"n", gr(3)}, {"m", gr(2)}, {"c", gr(1)}})));
  CHECK(pb.k == 2);
  for (const auto& pt : pb.points) {
    REQUIRE(pt.is_explicit());
    if (pt.point->is_zero()) CHECK(pt.derivative_multiplicity == 3);
    else CHECK(pt.derivative_multiplicity == 2);
  }

  // Frank-Reinders profile: points 0 (q = n-3) and 1 (q = 2)
  CriticalStructure fr = analyze(construct_family(
      spec(FamilyId::FrankReinders_PFR, {{"n", gr(8)}, {"c", gr(2)}})));
  CHECK(fr.k == 2);
  for (const auto& pt : fr.points) {
    if (pt.point->is_zero()) CHECK(pt.derivative_multiplicity == 5);
    else CHECK(pt.derivative_multiplicity == 2);
  }

  // power-gap family: derivative n z^(m-1) (z^(n-m) - 1)
  Poly pg = construct_family(
      spec(FamilyId::PowerGap, {{"n", gr(7)}, {"m", gr(5)}, {"b", gr(1)}}));
  CHECK(derivative(pg) == parse_poly("7z^4(z^2 - 1)"));
  CriticalStructure pgs = analyze(pg);
  CHECK(pgs.k == 3);

  // Yi family z^n + a z^(n-r) + b
  Poly py = construct_family(spec(
      FamilyId::Yi_PY, {{"n", gr(7)}, {"r", gr(3)}, {"a", gr(1)}, {"b", gr(1)}}));
  CHECK(py == parse_poly("z^7 + z^4 + 1"));
}

TEST_CASE("excluded sets reject exactly the forbidden values") {
  // c constraints of the degree-6 fixture: {0, -1/60, -1/120}
  for (auto c : {gr(0), gr(-1, 60), gr(-1, 120)}) {
    CHECK_THROWS_AS(construct_family(spec(FamilyId::Banerjee_PB,
                                          {{"n", gr(3)}, {"m", gr(2)}, {"c", c}})),
                    FamilyViolation);
  }
  CHECK_NOTHROW(construct_family(
      spec(FamilyId::Banerjee_PB, {{"n", gr(3)}, {"m", gr(2)}, {"c", gr(-1, 59)}})));

  for (auto c : {gr(0), gr(1), gr(1, 2)}) {
    CHECK_THROWS_AS(construct_family(spec(FamilyId::FrankReinders_PFR,
                                          {{"n", gr(6)}, {"c", c}})),
                    FamilyViolation);
  }

  for (auto b : {gr(0), gr(2, 5), gr(1, 5)}) {
    CHECK_THROWS_AS(construct_family(spec(FamilyId::PowerGap,
                                          {{"n", gr(7)}, {"m", gr(5)}, {"b", b}})),
                    FamilyViolation);
  }

  // arithmetic side conditions
  CHECK_THROWS_AS(construct_family(spec(FamilyId::PowerGap,
                                        {{"n", gr(6)}, {"m", gr(4)}, {"b", gr(1)}})),
                  FamilyViolation);  // gcd != 1
  CHECK_THROWS_AS(construct_family(spec(FamilyId::PowerGap,
                                        {{"n", gr(6)}, {"m", gr(5)}, {"b", gr(1)}})),
                  FamilyViolation);  // n - m < 2
  CHECK_THROWS_AS(
      construct_family(spec(FamilyId::Yi_PY, {{"n", gr(7)}, {"r", gr(3)},
                                              {"a", gr(0)}, {"b", gr(1)}})),
      FamilyViolation);  // ab = 0
  CHECK_THROWS_AS(
      construct_family(spec(FamilyId::Generalized_P,
                            {{"n", gr(3)}, {"m", gr(2)}, {"a", gr(1)}, {"b", gr(1)},
                             {"c", gr(1)}})),
      FamilyViolation);  // a = b

  // violation metadata carries the excluded set
  try {
    construct_family(spec(FamilyId::FrankReinders_PFR, {{"n", gr(6)}, {"c", gr(1, 2)}}));
    CHECK(false);
  } catch (const FamilyViolation& e) {
    CHECK(e.excluded_set == "{0, 1, 1/2}");
  }
}

TEST_CASE("shifted family equals the generalized family at a = 0") {
  Poly shifted = construct_family(spec(
      FamilyId::Shifted_PB,
      {{"n", gr(3)}, {"m", gr(2)}, {"b", gr(2)}, {"c", gr(1)}}));
  Poly general = construct_family(spec(
      FamilyId::Generalized_P,
      {{"n", gr(3)}, {"m", gr(2)}, {"a", gr(0)}, {"b", gr(2)}, {"c", gr(1)}}));
  CHECK(shifted == general);
  CHECK(derivative(shifted) == parse_poly("(z-2)^2 z^3"));

  // excluded set: c in {0, -b^(n+m+1) L, -b^(n+m+1) L/2}, L = 1/60, b^6 = 64
  CHECK_THROWS_AS(construct_family(spec(FamilyId::Shifted_PB,
                                        {{"n", gr(3)}, {"m", gr(2)}, {"b", gr(2)},
                                         {"c", gr(-64, 60)}})),
                  FamilyViolation);
}

TEST_CASE("psi polynomial") {
  Poly psi = psi_poly(6, gr(2));
  CHECK(psi.degree() == 10);
  CHECK(psi.leading() == GaussianRational(BigRational(-4, 25)));  // lambda - 4
  CHECK(psi.eval(gr(1)) == GaussianRational(BigRational(-4, 25)));  // (lambda-4)(1-A)^2

  // A = 0 degenerates to (lambda - 4) t^(2n-2)
  Poly degenerate = psi_poly(6, gr(0));
  CHECK(degenerate == Poly::monomial(10, GaussianRational(BigRational(-4, 25))));

  CHECK_THROWS_AS(psi_poly(2, gr(2)), std::domain_error);
}

TEST_CASE("lemma 3.1: psi square-free away from A in {0, 1}") {
  auto r1 = verify_lemma_3_1(6, gr(2));
  CHECK(r1.holds);
  CHECK(r1.witness.at("gcd(psi, psi')") == "1");
  CHECK(r1.witness.at("psi(1)") == "-4/25");

  auto r2 = verify_lemma_3_1(7, GaussianRational::i());
  CHECK(r2.holds);

  CHECK_THROWS_AS(verify_lemma_3_1(6, gr(1)), std::domain_error);
  CHECK_THROWS_AS(verify_lemma_3_1(6, gr(0)), std::domain_error);
}

TEST_CASE("lemma 3.2: fourth-order root at 1 when A = 1") {
  for (long n : {5l, 6l, 8l}) {
    auto res = verify_lemma_3_2_structure(n);
    CHECK(res.holds);
    CHECK(res.witness.at("deg_g") == std::to_string(2 * n - 6));
  }
  CHECK_THROWS_AS(verify_lemma_3_2_structure(4), std::domain_error);

  // the A = 1 degeneration seen directly: psi gains the factor (t-1)^4 and
  // shares the root t = 1 with t^n - 1
  Poly psi1 = psi_poly(6, gr(1));
  Poly g = gcd(psi1, Poly::monomial(6) - Poly(gr(1)));
  CHECK(divrem(g, Poly::linear_root(gr(1))).second.is_zero());
}

TEST_CASE("lemma 3.3: psi and t^n - A are coprime") {
  auto r1 = verify_lemma_3_3(6, gr(2));
  CHECK(r1.holds);
  CHECK(r1.witness.at("gcd(psi, t^n - A)") == "1");
  CHECK(verify_lemma_3_3(4, gr(-1)).holds);
  CHECK_THROWS_AS(verify_lemma_3_3(6, gr(1)), std::domain_error);
}

TEST_CASE("catalog metadata is consistent") {
  CHECK(family_catalog().size() == 7);
  for (const auto& info : family_catalog()) {
    CHECK(family_id_from_string(info.cli_name) == info.id);
    CHECK(to_string(info.id) == std::string(info.cli_name));
  }
  CHECK_FALSE(family_id_from_string("nope").has_value());
  CHECK_THROWS_AS(
      construct_family(spec(FamilyId::Banerjee_PB, {{"n", gr(3)}, {"m", gr(2)}})),
      FamilyViolation);  // missing c
  CHECK_THROWS_AS(
      construct_family(spec(FamilyId::Banerjee_PB,
                            {{"n", gr(1, 2)}, {"m", gr(2)}, {"c", gr(1)}})),
      FamilyViolation);  // non-integer n
}

TEST_CASE("excluded values break the matching downstream hypothesis") {
  // c = 1/2 on the Frank-Reinders shape: P(0) + P(1) = 0 kills the value sum
  Poly fr_half = parse_poly("10z^6 - 24z^5 + 15z^4 - 1/2");
  CHECK((fr_half.eval(gr(0)) + fr_half.eval(gr(1))).is_zero());
  auto cert = check_thm_2_1(analyze(fr_half));
  CHECK(cert.failed_hypothesis == "value_sum");

  // c = 0 or 1: a critical point becomes a zero, so zeros are not simple
  CHECK_FALSE(analyze(parse_poly("10z^6 - 24z^5 + 15z^4")).simple_zeros);
  CHECK_FALSE(analyze(parse_poly("10z^6 - 24z^5 + 15z^4 - 1")).simple_zeros);
}
