#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bihar/multipoly.hpp"

using namespace bihar;

namespace {

MultiPoly P(std::string_view s) { return MultiPoly::parse(s); }

// Small random polynomials in up to three variables; dense enough to exercise
// the arithmetic, small enough that resultants stay cheap.
MultiPoly random_poly(std::mt19937_64& rng, std::initializer_list<Var> vars,
                      unsigned max_terms = 4, unsigned max_exp = 2) {
  MultiPoly p;
  unsigned terms = 1 + unsigned(rng() % max_terms);
  for (unsigned i = 0; i < terms; ++i) {
    Monomial m;
    for (Var v : vars)
      m = m.with(v, static_cast<std::uint16_t>(rng() % (max_exp + 1)));
    long c = long(rng() % 11) - 5;
    p = p + MultiPoly::term(Rational(c), m);
  }
  return p;
}

MultiPoly random_nonzero(std::mt19937_64& rng, std::initializer_list<Var> vars,
                         unsigned max_terms = 4, unsigned max_exp = 2) {
  for (;;) {
    MultiPoly p = random_poly(rng, vars, max_terms, max_exp);
    if (!p.is_zero()) return p;
  }
}

}  // namespace

TEST_CASE("variable names round trip") {
  for (Var v : kAllVars) {
    auto back = var_from_name(var_name(v));
    REQUIRE(back.has_value());
    CHECK(*back == v);
  }
  CHECK_FALSE(var_from_name("epsilon").has_value());
}

TEST_CASE("grlex order: degree first, then precedence") {
  Monomial g = Monomial::var(Var::gamma);
  Monomial b = Monomial::var(Var::beta);
  Monomial a = Monomial::var(Var::alpha);
  Monomial dd = Monomial::var(Var::d);
  CHECK(grlex_compare(g, b) > 0);
  CHECK(grlex_compare(b, a) > 0);
  CHECK(grlex_compare(a, dd) > 0);
  CHECK(grlex_compare(dd, Monomial::var(Var::delta)) > 0);
  // degree dominates precedence
  CHECK(grlex_compare(Monomial::var(Var::c, 3), Monomial::var(Var::gamma, 2)) > 0);
  // leading term of a polynomial is the grlex-largest
  CHECK(P("alpha^2 + gamma^2").leading_monomial() == Monomial::var(Var::gamma, 2));
}

TEST_CASE("ring identities on random polynomials") {
  std::mt19937_64 rng(0x5EED);
  auto vars = {Var::alpha, Var::gamma, Var::X};
  for (int i = 0; i < 60; ++i) {
    MultiPoly p = random_poly(rng, vars), q = random_poly(rng, vars), r = random_poly(rng, vars);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == MultiPoly::zero());
    CHECK(p + MultiPoly::zero() == p);
    CHECK(p * MultiPoly::constant(Rational(1)) == p);
  }
}

TEST_CASE("frozen expansion identities") {
  CHECK(P("(X+1)*(X-1)") == P("X^2-1"));
  CHECK(P("X^2*(5*X^2-24*X+51) + 51*X^2-24*X+5") == P("5*X^4-24*X^3+102*X^2-24*X+5"));
  CHECK(P("X^2*(9*X^2-40*X+79) + 79*X^2-40*X+9") == P("9*X^4-40*X^3+158*X^2-40*X+9"));
  CHECK(P("(alpha - 1/2*gamma)^2 + 3/4*gamma^2") == P("alpha^2 - alpha*gamma + gamma^2"));
}

TEST_CASE("derivatives") {
  CHECK(P("-9*beta^2").derivative(Var::beta) == P("-18*beta"));
  CHECK(P("100*gamma^3+300*alpha*gamma^2+(300*alpha^2-126)*gamma+100*alpha^3-369*alpha")
            .derivative(Var::gamma) ==
        P("300*gamma^2+600*alpha*gamma+300*alpha^2-126"));
  std::mt19937_64 rng(0xD1FF);
  auto vars = {Var::alpha, Var::beta};
  for (int i = 0; i < 40; ++i) {
    MultiPoly p = random_poly(rng, vars), q = random_poly(rng, vars);
    CHECK((p * q).derivative(Var::alpha) ==
          p.derivative(Var::alpha) * q + p * q.derivative(Var::alpha));
  }
}

TEST_CASE("univariate views round trip") {
  std::mt19937_64 rng(0xF00D);
  for (int i = 0; i < 40; ++i) {
    MultiPoly p = random_poly(rng, {Var::alpha, Var::gamma, Var::B});
    auto cs = p.coefficients_in(Var::gamma);
    CHECK(MultiPoly::from_coefficients_in(Var::gamma, cs) == p);
    for (const auto& c : cs) CHECK_FALSE(c.depends_on(Var::gamma));
  }
  CHECK_THROWS_AS(
      MultiPoly::from_coefficients_in(Var::gamma, {MultiPoly::variable(Var::gamma)}),
      std::invalid_argument);
}

TEST_CASE("substitution") {
  MultiPoly eq1 = P("mu^2 - (alpha+gamma)*mu + alpha*gamma - beta^2");

  SUBCASE("rational value with constant denominator") {
    PolyFraction third(P("-(alpha+gamma)"), P("3"));
    PolyFraction out = eq1.substitute(Var::mu, third);
    REQUIRE(out.is_polynomial());
    auto s = proportional(out.to_polynomial(), P("4*gamma^2+17*alpha*gamma-9*beta^2+4*alpha^2"));
    REQUIRE(s.has_value());
    CHECK(*s == Rational(1, 9));
  }

  SUBCASE("polynomial value is exact") {
    MultiPoly out = eq1.substitute(Var::mu, P("d - alpha - gamma"));
    CHECK(out == P("2*alpha^2 - beta^2 - 3*alpha*d + d^2 + 5*alpha*gamma - 3*d*gamma + 2*gamma^2"));
  }

  SUBCASE("nonconstant denominator stays a fraction") {
    PolyFraction v(P("1"), P("X"));
    PolyFraction out = P("X^2+1").substitute(Var::X, v);
    CHECK(out == PolyFraction(P("X^2+1"), P("X^2")));
  }

  SUBCASE("variable flip") {
    CHECK(P("t^3 - t^2 + t").negate_var(Var::t) == P("-t^3 - t^2 - t"));
  }
}

TEST_CASE("evaluation") {
  MultiPoly num = P("5*X^4-4*X^3+62*X^2-4*X+5");
  MultiPoly den = P("X*(X-1)^2");
  std::map<Var, Rational> at4 = {{Var::X, Rational(4)}};
  CHECK(num.evaluate(at4) == Rational(2005));
  CHECK(den.evaluate(at4) == Rational(36));
  CHECK(P("5*X^4-24*X^3+102*X^2-24*X+5").evaluate({{Var::X, Rational(1)}}) == Rational(64));
  CHECK_THROWS_AS(num.evaluate({}), std::invalid_argument);
}

TEST_CASE("exact division") {
  CHECK(exact_divide(P("X^2-1"), P("X+1")) == P("X-1"));
  CHECK_FALSE(exact_divide(P("X^2+1"), P("X+1")).has_value());
  CHECK_THROWS_AS(exact_divide(P("X"), MultiPoly::zero()), DivisionByZeroError);
  std::mt19937_64 rng(0xD1CE);
  auto vars = {Var::alpha, Var::gamma};
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = random_poly(rng, vars);
    MultiPoly q = random_nonzero(rng, vars);
    auto quot = exact_divide(p * q, q);
    REQUIRE(quot.has_value());
    CHECK(*quot == p);
  }
}

TEST_CASE("content and primitive part") {
  auto cp = content_primitive(P("54*beta^4 + 54*beta^2"));
  CHECK(cp.content == Rational(54));
  CHECK(cp.primitive == P("beta^4 + beta^2"));

  auto cn = content_primitive(P("-3*X"));
  CHECK(cn.content == Rational(-3));
  CHECK(cn.primitive == P("X"));

  auto cq = content_primitive(
      P("1000*gamma^4+2600*alpha*gamma^3+(5000*alpha^2+700*alpha-1113)*gamma^2"
        "+(4400*alpha^3+500*alpha^2-2055*alpha)*gamma+1000*alpha^4-200*alpha^3"
        "-1842*alpha^2-450*alpha+189"));
  CHECK(cq.content == Rational(1));

  auto ch = content_primitive(P("2/3*X^2 - 4/9"));
  CHECK(ch.content == Rational(2, 9));
  CHECK(ch.primitive == P("3*X^2 - 2"));

  CHECK_THROWS_AS(content_primitive(MultiPoly::zero()), std::invalid_argument);

  std::mt19937_64 rng(0xCAFE);
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = random_nonzero(rng, {Var::X, Var::B});
    auto c = content_primitive(p);
    CHECK(c.primitive * c.content == p);
    CHECK(c.primitive.leading_coefficient().sign() > 0);
    CHECK(content_primitive(c.primitive).content == Rational(1));
  }
}

TEST_CASE("proportionality detection") {
  auto s = proportional(P("2*X+2"), P("X+1"));
  REQUIRE(s.has_value());
  CHECK(*s == Rational(2));
  CHECK_FALSE(proportional(P("X+1"), P("X+2")).has_value());
  CHECK_FALSE(proportional(P("X"), MultiPoly::zero()).has_value());
  CHECK(proportional(MultiPoly::zero(), MultiPoly::zero()) == Rational(1));
  CHECK(proportional(P("-1/3*X + 2/3"), P("X - 2")) == Rational(-1, 3));
}

TEST_CASE("pseudo remainder against a linear divisor") {
  // prem(p, v - a) recovers p(a) scaled by a unit power of the leading coefficient
  std::mt19937_64 rng(0xAB1E);
  for (int i = 0; i < 30; ++i) {
    MultiPoly p = random_nonzero(rng, {Var::X}, 4, 3);
    MultiPoly lin = P("X - alpha");
    if (p.degree_in(Var::X) < 1) continue;
    MultiPoly r = pseudo_remainder(p, lin, Var::X);
    PolyFraction expected = p.substitute(Var::X, PolyFraction(MultiPoly::variable(Var::alpha)));
    CHECK(r == expected.to_polynomial());
  }
}

TEST_CASE("resultant convention and frozen values") {
  CHECK(resultant_value(P("X-alpha"), P("X-gamma"), Var::X) == P("gamma-alpha"));
  CHECK(sylvester_resultant_value(P("X-alpha"), P("X-gamma"), Var::X) == P("gamma-alpha"));
  CHECK(resultant_value(P("X^2-2"), P("X^2-3"), Var::X) == P("1"));
  CHECK(sylvester_resultant_value(P("X^2-2"), P("X^2-3"), Var::X) == P("1"));
  // a planted common factor forces a zero resultant
  CHECK(resultant_value(P("(X-gamma)*(X+1)"), P("(X-gamma)*(X-2)"), Var::X) == MultiPoly::zero());
  CHECK(sylvester_resultant_value(P("(X-gamma)*(X+1)"), P("(X-gamma)*(X-2)"), Var::X) ==
        MultiPoly::zero());
}

TEST_CASE("resultant: PRS agrees with the Sylvester determinant on 100 random instances") {
  std::mt19937_64 rng(0x9E3779B9);
  auto vars = {Var::X, Var::alpha};
  int done = 0;
  while (done < 100) {
    MultiPoly p = random_nonzero(rng, vars, 4, 3);
    MultiPoly q = random_nonzero(rng, vars, 4, 3);
    if (p.degree_in(Var::X) == 0 && q.degree_in(Var::X) == 0) continue;
    CHECK(resultant_value(p, q, Var::X) == sylvester_resultant_value(p, q, Var::X));
    ++done;
  }
}

TEST_CASE("resultant properties") {
  std::mt19937_64 rng(0x7777);
  auto vars = {Var::X, Var::gamma};
  for (int i = 0; i < 25; ++i) {
    MultiPoly p = random_nonzero(rng, vars, 3, 2);
    MultiPoly q = random_nonzero(rng, vars, 3, 2);
    MultiPoly r = random_nonzero(rng, vars, 3, 2);

    // swap antisymmetry
    MultiPoly lhs = resultant_value(p, q, Var::X);
    MultiPoly rhs = resultant_value(q, p, Var::X);
    unsigned dp = p.degree_in(Var::X), dq = q.degree_in(Var::X);
    CHECK(lhs == ((dp * dq) % 2 == 1 ? -rhs : rhs));

    // multiplicativity in the second argument
    CHECK(resultant_value(p, q * r, Var::X) ==
          resultant_value(p, q, Var::X) * resultant_value(p, r, Var::X));
  }
}

TEST_CASE("planted common roots are detected under specialization") {
  std::mt19937_64 rng(0x1234);
  for (int i = 0; i < 20; ++i) {
    MultiPoly p = random_nonzero(rng, {Var::X, Var::gamma}, 3, 2);
    MultiPoly q = random_nonzero(rng, {Var::X, Var::gamma}, 3, 2);
    MultiPoly shared = P("X - gamma");
    MultiPoly res = resultant_value(p * shared, q * shared, Var::X);
    CHECK(res == MultiPoly::zero());
  }
}

TEST_CASE("normalized resultants expose the scalar") {
  auto scaled = resultant(P("2*X^2-2"), P("3*X-3"), Var::X);
  CHECK(scaled.scale * scaled.poly == resultant_value(P("2*X^2-2"), P("3*X-3"), Var::X));
  if (!scaled.poly.is_zero())
    CHECK(content_primitive(scaled.poly).content == Rational(1));
}

TEST_CASE("text: parse accepts the documented grammar") {
  CHECK(P("  5/6 * X ^ 2") == MultiPoly::term(Rational(5, 6), Monomial::var(Var::X, 2)));
  CHECK(P("-X") == -MultiPoly::variable(Var::X));
  CHECK(P("+X") == MultiPoly::variable(Var::X));
  CHECK(P("(X+1)^2") == P("X^2+2*X+1"));
  CHECK(P("0") == MultiPoly::zero());
  CHECK(P("2-3") == MultiPoly::constant(Rational(-1)));
}

TEST_CASE("text: parse errors carry positions") {
  auto expect_error_at = [](std::string_view text, std::size_t pos) {
    try {
      MultiPoly::parse(text);
      FAIL("expected a ParseError for: ", text);
    } catch (const ParseError& e) {
      CHECK(e.position == pos);
    }
  };
  expect_error_at("X +", 3);
  expect_error_at("2*", 2);
  expect_error_at("foo", 0);
  expect_error_at("X^", 2);
  expect_error_at("(X", 2);
  expect_error_at("1/0", 2);
  expect_error_at("X@2", 1);
  expect_error_at("X 2", 2);  // implicit multiplication is not in the grammar
}

TEST_CASE("text: round trip is the identity") {
  CHECK(P("5*X^4-24*X^3+102*X^2-24*X+5").str() == "5*X^4 - 24*X^3 + 102*X^2 - 24*X + 5");
  CHECK(MultiPoly::zero().str() == "0");
  CHECK(P("beta - 2/3*alpha*gamma").str() == "-2/3*alpha*gamma + beta");
  std::mt19937_64 rng(0x0DDC0DE);
  for (int i = 0; i < 80; ++i) {
    MultiPoly p = random_poly(rng, {Var::alpha, Var::beta, Var::gamma, Var::d}, 6, 3);
    CHECK(MultiPoly::parse(p.str()) == p);
  }
}

TEST_CASE("fractions") {
  PolyFraction f(P("X^2-1"), P("X-1"));
  CHECK(f == PolyFraction(P("X+1")));
  CHECK(f.reduced().num() == P("X+1"));
  CHECK(f.reduced().den() == P("1"));

  PolyFraction g(P("X^3-X"), P("X^2-2*X+1"));
  auto gr = g.reduced();
  CHECK(gr.num() == P("X^2+X"));
  CHECK(gr.den() == P("X-1"));

  CHECK_THROWS_AS(PolyFraction(P("1"), MultiPoly::zero()), DivisionByZeroError);

  std::mt19937_64 rng(0xFAB);
  for (int i = 0; i < 40; ++i) {
    PolyFraction a(random_poly(rng, {Var::t}, 3, 2), random_nonzero(rng, {Var::t}, 3, 2));
    PolyFraction b(random_poly(rng, {Var::t}, 3, 2), random_nonzero(rng, {Var::t}, 3, 2));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
    CHECK(a - a == PolyFraction(MultiPoly::zero()));
  }

  // denominators normalize to primitive with positive leading coefficient
  PolyFraction h(P("X"), P("-2*X+2"));
  CHECK(h.den() == P("X-1"));
  CHECK(h.num() == P("-1/2*X"));
}
