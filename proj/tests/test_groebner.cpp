#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "charvar/groebner.hpp"
#include "charvar/io.hpp"
#include "charvar/resultant.hpp"

using namespace charvar;

namespace {

Ideal ideal(const std::string& text, const Variables& v) { return parse_ideal(text, v); }

/// Reduced: monic, and no term of any element divisible by another's leading monomial.
bool is_reduced(const GroebnerBasis& g) {
  const auto lms = g.leading_monomials();
  for (std::size_t k = 0; k < g.basis().size(); ++k) {
    const Poly& p = g.basis()[k];
    if (!p.coefficient(lms[k]).is_one()) return false;
    for (const auto& [e, c] : p.terms())
      for (std::size_t m = 0; m < lms.size(); ++m)
        if (m != k && divides(lms[m], e)) return false;
  }
  return true;
}

Ideal random_ideal(std::mt19937_64& rng, const Variables& v) {
  std::uniform_int_distribution<int> coef(-3, 3), ngens(2, 3), nterms(2, 4);
  std::uniform_int_distribution<Exponent> ex(0, 2);
  std::vector<Poly> gens;
  const int n = ngens(rng);
  for (int g = 0; g < n; ++g) {
    Poly p(v);
    const int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
      ExponentVector e(v.size());
      for (auto& x : e) x = ex(rng);
      p.add_term(e, Rational(coef(rng)));
    }
    gens.push_back(p);
  }
  return Ideal(v, gens);
}

}  // namespace

TEST_CASE("small reduced bases") {
  const Variables v{"x", "y"};
  const auto g = groebner(ideal("x^2 + y; x*y", v), MonomialOrder::lex());
  std::vector<Poly> expected = {parse_polynomial("x^2 + y", v), parse_polynomial("x*y", v),
                                parse_polynomial("y^2", v)};
  CHECK(g.basis().size() == 3);
  for (const auto& p : expected) CHECK(contains(g, p));
  CHECK(is_reduced(g));
  CHECK(satisfies_buchberger_criterion(g));
}

TEST_CASE("unit and zero ideals") {
  const Variables v{"x", "y"};
  CHECK(groebner(ideal("x; x - 1", v), MonomialOrder::grevlex()).is_unit());
  CHECK(groebner(Ideal(v, {}), MonomialOrder::grevlex()).is_zero_ideal());
  CHECK(krull_dimension(Ideal(v, {})) == 2);
  CHECK_THROWS_AS(krull_dimension(ideal("1", v)), InputError);
  CHECK(krull_dimension(ideal("x - 1; y - 2", v)) == 0);
  CHECK(krull_dimension(ideal("x*y - 1", v)) == 1);
  CHECK(krull_dimension(ideal("x*y", v)) == 1);
}

TEST_CASE("random ideals: certificates, canonicity, thread independence") {
  const Variables v{"x", "y", "z"};
  std::mt19937_64 rng(17);
  for (int n = 0; n < 40; ++n) {
    const Ideal I = random_ideal(rng, v);
    for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
      // Lex runs may pass through intermediate elements above the default cap.
      GroebnerLimits one;
      one.max_degree = 80;
      GroebnerLimits four = one;
      four.threads = 4;
      const auto g1 = groebner(I, order, one);
      CHECK(satisfies_buchberger_criterion(g1));
      CHECK(is_reduced(g1));
      for (const auto& p : I.generators()) CHECK(normal_form(p, g1).is_zero());
      CHECK(groebner(I, order, four) == g1);
      // Same ideal from shuffled and redundant generators.
      std::vector<Poly> gens = I.generators();
      std::shuffle(gens.begin(), gens.end(), rng);
      gens.push_back(gens.front() * Poly::variable(v, "y") + gens.back());
      CHECK(groebner(Ideal(v, gens), order, one) == g1);
    }
  }
}

TEST_CASE("resource caps raise without a result") {
  const Variables v{"x", "y", "z"};
  GroebnerLimits tight;
  tight.max_degree = 3;
  CHECK_THROWS_AS(groebner(ideal("x^3 - y*z; y^3 - x*z; z^3 - x*y", v), MonomialOrder::lex(), tight),
                  ResourceCapExceeded);
  GroebnerLimits few;
  few.max_pairs = 1;
  CHECK_THROWS_AS(groebner(ideal("x^3 - y*z; y^3 - x*z; z^3 - x*y", v), MonomialOrder::lex(), few),
                  ResourceCapExceeded);
}

TEST_CASE("elimination") {
  const Variables v{"t", "x", "y"};
  const Ideal e = eliminate(ideal("x - t^2; y - t^3", v), {"t"});
  CHECK(e.variables() == Variables{"x", "y"});
  REQUIRE(e.generators().size() == 1);
  const Poly expected = parse_polynomial("y^2 - x^3", e.variables());
  CHECK((e.generators()[0] == expected || e.generators()[0] == -expected));
  CHECK_THROWS_AS(eliminate(ideal("x - t^2", v), {"w"}), InputError);
}

TEST_CASE("resultants") {
  const Variables v{"s", "t"};
  CHECK(resultant(parse_polynomial("t^2 - s", v), parse_polynomial("t^2 - s - 1", v), "t") ==
        Poly::constant(v, 1));
  // Quadratic resultant by the closed formula.
  const Variables x{"x"};
  const Poly a = parse_polynomial("x^2 + 2*x + 3", x), b = parse_polynomial("4*x^2 + 5*x + 6", x);
  const auto m = sylvester_matrix(a, b, "x");
  CHECK(m.rows() == 4);
  const Rational a2 = 1, a1 = 2, a0 = 3, b2 = 4, b1 = 5, b0 = 6;
  const Rational closed = (a2 * b0 - a0 * b2) * (a2 * b0 - a0 * b2) - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1);
  CHECK(resultant(a, b, "x") == Poly::constant(x, closed));
  CHECK(closed == 27);
  // Common root x = s makes the resultant in x vanish identically in s.
  const Variables sx{"s", "x"};
  const Poly r = resultant(parse_polynomial("(x - s)*(x + 1)", sx), parse_polynomial("(x - s)*(x - 2)", sx), "x");
  CHECK(r.is_zero());
  CHECK(divide_exact(parse_polynomial("x^2 - s^2", sx), parse_polynomial("x - s", sx)) ==
        parse_polynomial("x + s", sx));
  CHECK_THROWS_AS(divide_exact(parse_polynomial("x^2 + 1", sx), parse_polynomial("x - s", sx)), InputError);
}

TEST_CASE("M147 fixture") {
  const Variables v{"x", "y", "z", "l"};
  const Ideal I = parse_ideal(read_file(oracle::fixture("m147.poly")), v);
  CHECK(krull_dimension(I) == 1);
  const auto g = groebner(I, elimination_order(v, {"x", "y", "z"}));
  CHECK(satisfies_buchberger_criterion(g));
  CHECK(oracle::finite_over_variable(I, "l"));
}
