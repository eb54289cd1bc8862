#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "charvar/groebner.hpp"
#include "charvar/io.hpp"
#include "charvar/trace.hpp"

using namespace charvar;

namespace {

Poly tp(const std::string& w) { return trace_polynomial(GroupWord::parse(w)); }
Poly xyz(const std::string& text) { return parse_polynomial(text, trace_variables()); }

}  // namespace

TEST_CASE("group words") {
  CHECK(GroupWord::parse("aAb").to_string() == "b");
  CHECK(GroupWord::parse("abBA").to_string() == "1");
  CHECK(GroupWord::parse("1").empty());
  CHECK(GroupWord::parse("a b").to_string() == "ab");
  CHECK(GroupWord::parse("ab").inverse().to_string() == "BA");
  CHECK(GroupWord::parse("ab").pow(-2).to_string() == "BABA");
  CHECK(GroupWord::parse("Aba").cyclically_reduced().to_string() == "b");
  CHECK_THROWS_AS(GroupWord::parse("abc"), SyntaxError);
  try {
    GroupWord::parse("ab?");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.column() == 3);
  }
}

TEST_CASE("basic trace polynomials") {
  CHECK(tp("1") == xyz("2"));
  CHECK(tp("a") == xyz("x"));
  CHECK(tp("B") == xyz("y"));
  CHECK(tp("ab") == xyz("z"));
  CHECK(tp("aB") == xyz("x*y - z"));
  CHECK(tp("aa") == xyz("x^2 - 2"));
  CHECK(tp("abAB") == xyz("x^2 + y^2 + z^2 - x*y*z - 2"));
}

TEST_CASE("trace polynomials agree with exact matrix products") {
  std::mt19937_64 rng(11);
  std::vector<std::pair<oracle::M2, oracle::M2>> pairs;
  for (int k = 0; k < 25; ++k) pairs.emplace_back(oracle::random_sl2(rng), oracle::random_sl2(rng));
  for (std::size_t len = 0; len <= 5; ++len) {
    for (const auto& w : oracle::reduced_words(len)) {
      const Poly p = tp(w);
      for (const auto& [A, B] : pairs) {
        const std::map<std::string, Rational> at{
            {"x", A.a + A.d}, {"y", B.a + B.d}, {"z", oracle::word_trace("ab", A, B)}};
        CHECK_MESSAGE(evaluate(p, at) == oracle::word_trace(w, A, B), w);
      }
    }
  }
}

TEST_CASE("trace invariances") {
  std::mt19937_64 rng(5);
  const auto words = oracle::reduced_words(6);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int n = 0; n < 60; ++n) {
    const GroupWord w = GroupWord::parse(words[pick(rng)]);
    const Poly p = trace_polynomial(w);
    CHECK(trace_polynomial(w.inverse()) == p);
    for (std::size_t k = 0; k < w.length(); ++k) CHECK(trace_polynomial(w.rotated(k)) == p);
    CHECK(has_integer_coefficients(p));
  }
}

TEST_CASE("numeric oracle in the library matches the test oracle") {
  std::mt19937_64 rng(2);
  for (int n = 0; n < 20; ++n) {
    const auto A = oracle::random_sl2(rng), B = oracle::random_sl2(rng);
    const SL2Matrix a(A.a, A.b, A.c, A.d), b(B.a, B.b, B.c, B.d);
    CHECK(numeric_trace_oracle(GroupWord::parse("abAAbaB"), a, b) == oracle::word_trace("abAAbaB", A, B));
  }
  CHECK_THROWS_AS(SL2Matrix(1, 1, 1, 1), InputError);
}

TEST_CASE("character ideals") {
  SUBCASE("free group gives the zero ideal") {
    CHECK(character_ideal(Presentation()).is_zero());
  }
  SUBCASE("abelian characters of the figure-eight group lie on the variety") {
    const auto pres = parse_presentation(read_file(oracle::fixture("fig8.pres")));
    const Ideal I = character_ideal(pres.presentation);
    for (int t = -3; t <= 3; ++t) {
      const Rational x(t, 2);
      for (const auto& g : I.generators())
        CHECK(evaluate(g, std::map<std::string, Rational>{{"x", x}, {"y", x}, {"z", x * x - 2}}).is_zero());
    }
  }
  SUBCASE("eliminating y leaves the abelian and Riley components") {
    const auto pres = parse_presentation(read_file(oracle::fixture("fig8.pres")));
    const Ideal e = eliminate(character_ideal(pres.presentation), {"y"});
    const Variables xz{"x", "z"};
    const Poly product = parse_polynomial("(x^2 - z - 2)*(z^2 - (x^2 + 1)*z + 2*x^2 - 1)", xz);
    CHECK(groebner(e, MonomialOrder::grevlex()) == groebner(Ideal(xz, {product}), MonomialOrder::grevlex()));
  }
}

TEST_CASE("slope traces") {
  const auto fig8 = parse_presentation(read_file(oracle::fixture("fig8.pres")));
  const auto& ps = *fig8.peripheral;
  CHECK(slope_trace(ps, Slope(1, 0)) == xyz("x"));
  CHECK(slope_trace(ps, Slope(0, 1)) == tp("BabAAbaB"));
  CHECK(slope_trace(ps, Slope(-1, 0)) == slope_trace(ps, Slope(1, 0)));

  SUBCASE("the M147 longitude trace is l modulo the ideal") {
    const Variables v{"x", "y", "z", "l"};
    const Ideal I = parse_ideal(read_file(oracle::fixture("m147.poly")), v);
    const auto m147 = parse_presentation(read_file(oracle::fixture("m147.pres")));
    const Poly lam = embed(slope_trace(*m147.peripheral, Slope(0, 1)), v);
    CHECK(contains(groebner(I, MonomialOrder::grevlex()), Poly::variable(v, "l") - lam));
  }
}
