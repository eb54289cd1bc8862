#include <random>

#include "doctest.h"

#include "charvar/io.hpp"
#include "charvar/monomial_order.hpp"
#include "charvar/polynomial.hpp"
#include "charvar/univariate.hpp"

using namespace charvar;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(4, -2).to_string() == "-2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
  Rational r(1, 3);
  CHECK_THROWS_AS(r /= Rational(0), InputError);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("variables are validated and compared by content") {
  CHECK(Variables::parse("x,y,z,l").size() == 4);
  CHECK(Variables{"x", "y"} == Variables::parse("x, y"));
  CHECK_THROWS_AS(Variables::parse("x,x"), InputError);
  CHECK_THROWS_AS(Variables::parse("x,1y"), InputError);
  CHECK(Variables{"a", "b"}.require("b") == 1);
  CHECK_THROWS_AS(Variables{"a"}.require("c"), InputError);
}

TEST_CASE("polynomial arithmetic") {
  const Variables v{"x", "y"};
  const Poly x = Poly::variable(v, "x"), y = Poly::variable(v, "y"), one = Poly::constant(v, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + one).pow(3) == x * x * x + Rational(3) * x * x + Rational(3) * x + one);
  CHECK((x - x).is_zero());
  CHECK((x - x).total_degree() == -1);
  CHECK((x * y * y).degree_in(1) == 2);
  CHECK(evaluate(x * y - one, std::map<std::string, Rational>{{"x", 2}, {"y", Rational(1, 2)}}).is_zero());
  CHECK_THROWS_AS(evaluate(x * y, std::map<std::string, Rational>{{"x", 2}}), InputError);
  const Poly z = Poly::variable(Variables{"x", "z"}, "z");
  CHECK_THROWS_AS(x + z, InputError);
  CHECK(embed(x, Variables{"y", "x", "w"}) == Poly::variable(Variables{"y", "x", "w"}, "x"));
}

TEST_CASE("canonical printing") {
  const Variables v{"x", "y", "z"};
  CHECK(to_string(parse_polynomial("1/2 - 3*z + y*x^2", v)) == "x^2*y - 3*z + 1/2");
  CHECK(to_string(Poly(v)) == "0");
  CHECK(to_string(parse_polynomial("-x", v)) == "-x");
  CHECK(to_string(parse_polynomial("(x+y)^2", v)) == "x^2 + 2*x*y + y^2");
}

TEST_CASE("monomial orders") {
  const auto lex = MonomialOrder::lex(), grevlex = MonomialOrder::grevlex();
  const ExponentVector a{1, 0, 0}, b{0, 2, 0}, c{0, 1, 1}, one{0, 0, 0};
  CHECK(lex.less(b, a));
  CHECK(grevlex.less(a, b));
  CHECK(grevlex.less(c, b));  // y^2 > yz
  CHECK(lex.less(one, c));
  const auto block = MonomialOrder::block({false, true, true});
  // Any monomial with y or z beats every monomial in x alone.
  CHECK(block.less(ExponentVector{9, 0, 0}, ExponentVector{0, 0, 1}));
  CHECK(block.less(ExponentVector{0, 0, 1}, ExponentVector{1, 0, 1}));

  SUBCASE("orders are total, multiplicative and well founded on random samples") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Exponent> e(0, 4);
    for (const auto& order : {lex, grevlex, block, MonomialOrder::block({true, false, true}, MonomialOrder::Kind::Lex)}) {
      for (int n = 0; n < 300; ++n) {
        ExponentVector p{e(rng), e(rng), e(rng)}, q{e(rng), e(rng), e(rng)}, r{e(rng), e(rng), e(rng)};
        const auto pq = order.compare(p, q);
        CHECK((pq == 0) == (p == q));
        CHECK(order.compare(product(p, r), product(q, r)) == pq);
        CHECK(!order.less(product(p, r), p));
      }
    }
  }
}

TEST_CASE("univariate arithmetic and fractions") {
  const UniPoly x = UniPoly::x();
  const UniPoly a = (x - UniPoly(1)) * (x + UniPoly(2)), b = (x - UniPoly(1)) * (x - UniPoly(3));
  CHECK(gcd(a, b) == x - UniPoly(1));
  auto [q, r] = divmod(a, x - UniPoly(1));
  CHECK(q == x + UniPoly(2));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(a, UniPoly()), InputError);

  const RationalFunction f(a, b);
  CHECK(f.numerator() == x + UniPoly(2));
  CHECK(f.denominator() == x - UniPoly(3));
  CHECK(RationalFunction(UniPoly(std::vector<Rational>{0, 2}), UniPoly(std::vector<Rational>{0, 4})) ==
        RationalFunction(Rational(1, 2)));
  CHECK((f - f).is_zero());
  CHECK((f / f) == RationalFunction(1));
  CHECK(RationalFunction(UniPoly(-1), x).to_string("x") == "-1/x");
}
