#include <doctest.h>

#include "supm/parser.hpp"
#include "supm/poly.hpp"
#include "supm/roots.hpp"
#include "test_util.hpp"

using namespace supm;
using namespace supm::testutil;

TEST_CASE("ring operations") {
  Poly f = parse_poly("z^2 - 1");
  Poly g = parse_poly("z - 1");
  auto [q, r] = divrem(f, g);
  CHECK(q == parse_poly("z + 1"));
  CHECK(r.is_zero());

  CHECK((parse_poly("z^3") - parse_poly("z^3")).is_zero());
  CHECK(parse_poly("(z + i)(z - i)") == parse_poly("z^2 + 1"));
  CHECK_THROWS_AS(divrem(f, Poly()), std::domain_error);
}

TEST_CASE("divrem contract on random pairs") {
  auto rng = make_rng(23);
  for (int t = 0; t < 100; ++t) {
    Poly f = random_poly(rng, 8);
    Poly g = random_nonzero_poly(rng, 4);
    auto [q, r] = divrem(f, g);
    CHECK(f == q * g + r);
    if (!r.is_zero()) CHECK(r.degree() < g.degree());
  }
}

TEST_CASE("degree of the zero polynomial is distinguished") {
  CHECK(Poly().is_zero());
  CHECK_THROWS_AS(Poly().degree(), std::logic_error);
  CHECK_THROWS_AS(Poly().leading(), std::logic_error);
}

TEST_CASE("derivative") {
  // power rule on z^n + a z^(n-1) + b z^(n-2), n = 6, a = 4, b = 25/6
  Poly p = parse_poly("z^6 + 4z^5 + 25/6 z^4");
  CHECK(derivative(p) == parse_poly("6z^5 + 20z^4 + 50/3 z^3"));
  CHECK(derivative(Poly(GaussianRational(7))).is_zero());
  CHECK(derivative(Poly()).is_zero());

  auto rng = make_rng(29);
  for (int t = 0; t < 60; ++t) {
    Poly f = random_poly(rng), g = random_poly(rng);
    CHECK(derivative(f + g) == derivative(f) + derivative(g));
    CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
  }
}

TEST_CASE("gcd examples and contract") {
  CHECK(gcd(parse_poly("z^2 - 1"), parse_poly("z - 1")) == parse_poly("z - 1"));
  CHECK(gcd(parse_poly("z^2 + 1"), parse_poly("z^2 - 1")) == Poly(1));
  // f = (z-1)^2 (z+2) = z^3 - 3z + 2, f' = 3z^2 - 3; Euclid by hand gives z - 1
  Poly f = parse_poly("z^3 - 3z + 2");
  CHECK(gcd(f, derivative(f)) == parse_poly("z - 1"));
  CHECK_THROWS_AS(gcd(Poly(), Poly()), std::domain_error);

  auto rng = make_rng(31);
  for (int t = 0; t < 50; ++t) {
    Poly a = random_nonzero_poly(rng, 5);
    Poly b = random_nonzero_poly(rng, 5);
    Poly g = gcd(a, b);
    CHECK(g.is_monic());
    CHECK(divrem(a, g).second.is_zero());
    CHECK(divrem(b, g).second.is_zero());
  }
}

TEST_CASE("square-free decomposition") {
  auto d1 = squarefree_decompose(parse_poly("z^3 - 3z + 2"));  // (z-1)^2 (z+2)
  REQUIRE(d1.parts.size() == 2);
  CHECK(d1.parts[0].factor == parse_poly("z + 2"));
  CHECK(d1.parts[0].multiplicity == 1);
  CHECK(d1.parts[1].factor == parse_poly("z - 1"));
  CHECK(d1.parts[1].multiplicity == 2);

  auto d2 = squarefree_decompose(parse_poly("z^2 + 1"));
  REQUIRE(d2.parts.size() == 1);
  CHECK(d2.parts[0].factor == parse_poly("z^2 + 1"));
  CHECK(d2.parts[0].multiplicity == 1);

  // derivative of the degree-6 two-critical-point polynomial: z^3 (z-1)^2
  auto d3 = squarefree_decompose(parse_poly("z^5 - 2z^4 + z^3"));
  REQUIRE(d3.parts.size() == 2);
  CHECK(d3.parts[0].factor == parse_poly("z - 1"));
  CHECK(d3.parts[0].multiplicity == 2);
  CHECK(d3.parts[1].factor == parse_poly("z"));
  CHECK(d3.parts[1].multiplicity == 3);

  CHECK_THROWS_AS(squarefree_decompose(Poly()), std::domain_error);
}

TEST_CASE("square-free decomposition recovers constructed multiplicity profiles") {
  auto rng = make_rng(37);
  for (int t = 0; t < 40; ++t) {
    // distinct random roots with multiplicities 1..3
    std::vector<GaussianRational> roots;
    std::vector<int> mults;
    std::uniform_int_distribution<int> count(1, 3), mult(1, 3);
    int c = count(rng);
    for (int j = 0; j < c; ++j) {
      GaussianRational r = random_gaussian(rng, 4, 2);
      bool dup = false;
      for (const auto& seen : roots) dup |= seen == r;
      if (dup) continue;
      roots.push_back(r);
      mults.push_back(mult(rng));
    }
    if (roots.empty()) continue;
    Poly p(GaussianRational(BigRational(3, 7)));
    for (size_t j = 0; j < roots.size(); ++j)
      p *= Poly::linear_root(roots[j]).pow(static_cast<unsigned>(mults[j]));
    auto dec = squarefree_decompose(p);
    CHECK(dec.reconstruct() == p);
    CHECK(dec.unit == GaussianRational(BigRational(3, 7)));
    int total = 0;
    for (const auto& part : dec.parts) {
      CHECK(part.factor.is_monic());
      CHECK(is_squarefree(part.factor));
      total += part.factor.degree();
      for (size_t j = 0; j < roots.size(); ++j)
        if (part.factor.eval(roots[j]).is_zero()) CHECK(part.multiplicity == mults[j]);
    }
    CHECK(total == static_cast<int>(roots.size()));
    for (size_t a = 1; a < dec.parts.size(); ++a)
      CHECK(dec.parts[a - 1].multiplicity < dec.parts[a].multiplicity);
  }
}

TEST_CASE("resultant convention and zero detection") {
  // Res(f, g) = lc(f)^deg g * prod g(alpha_i): Res(z-2, z-3) = (2-3) = -1
  CHECK(resultant(parse_poly("z - 2"), parse_poly("z - 3")) == GaussianRational(-1));
  CHECK(resultant(parse_poly("z^2 + 1"), parse_poly("z^2 + 1")).is_zero());
  // Res(z^2 - 1, z) = z(1) * z(-1) = -1
  CHECK(resultant(parse_poly("z^2 - 1"), parse_poly("z")) == GaussianRational(-1));
  CHECK_THROWS_AS(resultant(Poly(), parse_poly("z")), std::domain_error);

  auto rng = make_rng(41);
  for (int t = 0; t < 60; ++t) {
    Poly f = random_nonzero_poly(rng, 4);
    Poly g = random_nonzero_poly(rng, 4);
    bool share = !f.is_constant() && !g.is_constant() && !gcd(f, g).is_constant();
    CHECK(resultant(f, g).is_zero() == share);
  }
}

TEST_CASE("resultant symmetry sign") {
  auto rng = make_rng(43);
  for (int t = 0; t < 40; ++t) {
    Poly f = random_nonzero_poly(rng, 4);
    Poly g = random_nonzero_poly(rng, 4);
    if (f.is_constant() || g.is_constant()) continue;
    GaussianRational sign((f.degree() * g.degree()) % 2 == 0 ? 1 : -1);
    CHECK(resultant(f, g) == sign * resultant(g, f));
  }
}

TEST_CASE("bivariate resultant in w") {
  // critical values of z^3 - 3z at the roots of z^2 - 1 are -+2
  Poly r = bivariate_resultant_in_w(parse_poly("z^2 - 1"), parse_poly("z^3 - 3z"));
  CHECK(r == parse_poly("w^2 - 4", 'w'));
  CHECK(bivariate_resultant_in_w(parse_poly("z"), parse_poly("z^3 - 3z")) ==
        parse_poly("w", 'w'));
  CHECK_THROWS_AS(bivariate_resultant_in_w(Poly(), parse_poly("z^2")), std::domain_error);
  CHECK_THROWS_AS(bivariate_resultant_in_w(parse_poly("z"), Poly(3)), std::domain_error);

  auto rng = make_rng(47);
  for (int t = 0; t < 40; ++t) {
    // single-root case: R(w) = w - P(c), and the degree contract in general
    GaussianRational c = random_gaussian(rng);
    Poly p = random_poly(rng, 5) + Poly::monomial(2);
    if (p.is_constant()) continue;
    CHECK(bivariate_resultant_in_w(Poly::linear_root(c), p) ==
          Poly::linear_root(p.eval(c)));
    Poly f = random_nonzero_poly(rng, 4);
    if (f.is_constant()) continue;
    CHECK(bivariate_resultant_in_w(f, p).degree() == f.degree());
  }
}

TEST_CASE("composition, interpolation, exact square root, root transforms") {
  auto rng = make_rng(53);
  for (int t = 0; t < 30; ++t) {
    Poly f = random_poly(rng, 4);
    Poly g = random_poly(rng, 3);
    GaussianRational x = random_gaussian(rng, 5, 3);
    CHECK(compose(f, g).eval(x) == f.eval(g.eval(x)));
  }
  for (int t = 0; t < 20; ++t) {
    Poly f = random_nonzero_poly(rng, 5);
    int d = f.is_constant() ? 0 : f.degree();
    std::vector<GaussianRational> xs, ys;
    for (int j = 0; j <= d; ++j) {
      xs.emplace_back(BigRational(j));
      ys.push_back(f.eval(xs.back()));
    }
    CHECK(lagrange_interpolate(xs, ys) == f);
  }
  for (int t = 0; t < 20; ++t) {
    Poly s = random_poly(rng, 4).monic();  // monic: random + normalize
    if (s.is_constant()) continue;
    CHECK(sqrt_exact(s * s) == s);
  }
  CHECK_THROWS(sqrt_exact(parse_poly("z^2 + 1") * parse_poly("z^2 - 1")));

  // scale_roots and root_power_poly against explicit roots
  Poly r = poly_from_roots({GaussianRational(1), GaussianRational(2), GaussianRational(4)});
  CHECK(scale_roots(r, GaussianRational(2)) ==
        poly_from_roots({GaussianRational(2), GaussianRational(4), GaussianRational(8)}));
  CHECK(root_power_poly(r, 3) ==
        poly_from_roots({GaussianRational(1), GaussianRational(8), GaussianRational(64)}));

  auto sums = root_power_sums(r, 3);
  CHECK(sums[0] == GaussianRational(7));
  CHECK(sums[1] == GaussianRational(21));
  CHECK(sums[2] == GaussianRational(73));
  CHECK(poly_from_power_sums(sums) == r);
}

TEST_CASE("rational root extraction over Q(i)") {
  // roots 0, 3/2, -i
  Poly p = Poly::monomial(1) * parse_poly("2z - 3") * parse_poly("z + i");
  auto ext = extract_rational_roots(p);
  CHECK(ext.complete);
  CHECK(ext.remaining == Poly(1));
  REQUIRE(ext.roots.size() == 3);
  CHECK(ext.roots[0].first.is_zero());

  // z^2 - 2 has no rational roots; z^2 + 1 has +-i
  auto e2 = extract_rational_roots(parse_poly("z^2 - 2"));
  CHECK(e2.roots.empty());
  CHECK(e2.complete);
  CHECK(e2.remaining == parse_poly("z^2 - 2"));
  auto e3 = extract_rational_roots(parse_poly("z^2 + 1"));
  CHECK(e3.roots.size() == 2);

  auto rng = make_rng(59);
  for (int t = 0; t < 25; ++t) {
    std::vector<GaussianRational> roots;
    std::uniform_int_distribution<int> count(1, 4);
    int c = count(rng);
    for (int j = 0; j < c; ++j) roots.push_back(random_gaussian(rng, 6, 3));
    Poly p2 = poly_from_roots(roots);
    auto ext2 = extract_rational_roots(p2);
    CHECK(ext2.complete);
    CHECK(ext2.remaining == Poly(1));
    int found = 0;
    for (const auto& [root, mult] : ext2.roots) {
      found += mult;
      CHECK(p2.eval(root).is_zero());
    }
    CHECK(found == static_cast<int>(roots.size()));
  }
}

TEST_CASE("square-free parts are pairwise coprime") {
  auto rng = make_rng(103);
  for (int t = 0; t < 15; ++t) {
    Poly p = random_nonzero_poly(rng, 4);
    Poly q = random_nonzero_poly(rng, 3);
    if (p.is_constant() || q.is_constant()) continue;
    auto dec = squarefree_decompose(p * p * q);
    for (size_t a = 0; a < dec.parts.size(); ++a)
      for (size_t b = a + 1; b < dec.parts.size(); ++b)
        CHECK(gcd(dec.parts[a].factor, dec.parts[b].factor).is_constant());
  }
}
