#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "bihar/tubes.hpp"

using namespace bihar;

namespace {

MultiPoly P(std::string_view s) { return MultiPoly::parse(s); }
Rational Q(std::string_view s) { return Rational::parse(s); }

Rational eval_fraction(const PolyFraction& f, Var v, const Rational& x) {
  std::map<Var, Rational> pt{{v, x}};
  return f.num().evaluate(pt) / f.den().evaluate(pt);
}

Rational power_of_ten(unsigned digits) {
  return Rational(Integer(1), Integer(10).pow(digits));
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E}) {
    auto back = family_from_name(family_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK(!family_from_name("F").has_value());
  CHECK(!family_from_name("").has_value());
}

TEST_CASE("model constraints are enforced") {
  CHECK_THROWS_AS(TubeModel::make(Family::A, 2), std::invalid_argument);      // m missing
  CHECK_THROWS_AS(TubeModel::make(Family::A, 2, 1), std::invalid_argument);   // m > n-2
  CHECK_THROWS_AS(TubeModel::make(Family::A, 1, 0), std::invalid_argument);   // n < 2
  CHECK_THROWS_AS(TubeModel::make(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(TubeModel::make(Family::B, 3, 0), std::invalid_argument);   // stray m
  CHECK_THROWS_AS(TubeModel::make(Family::C, 4), std::invalid_argument);      // even
  CHECK_THROWS_AS(TubeModel::make(Family::C, 3), std::invalid_argument);      // too small
  CHECK_THROWS_AS(TubeModel::make(Family::D, 8), std::invalid_argument);
  CHECK_THROWS_AS(TubeModel::make(Family::E, 9), std::invalid_argument);
}

TEST_CASE("multiplicities fill the hypersurface dimension") {
  struct Case { Family f; unsigned n; std::optional<unsigned> m; };
  for (const auto& c : std::vector<Case>{{Family::A, 2, 0}, {Family::A, 5, 2},
                                         {Family::A, 9, 7}, {Family::B, 2, {}},
                                         {Family::B, 7, {}}, {Family::C, 5, {}},
                                         {Family::C, 11, {}}, {Family::D, 9, {}},
                                         {Family::E, 15, {}}}) {
    TubeModel model = TubeModel::make(c.f, c.n, c.m);
    CHECK(model.spectrum_dimension() == model.dimension());
    CHECK(model.dimension() == 2 * c.n - 1);
  }
  // Branches with zero multiplicity are dropped: the geodesic sphere keeps a
  // single spectrum entry.
  CHECK(TubeModel::make(Family::A, 3, 0).spectrum.size() == 1);
  CHECK(TubeModel::make(Family::A, 3, 1).spectrum.size() == 2);
}

TEST_CASE("squared shape norm in X, frozen forms") {
  PolyFraction d_norm = norm_a_squared(TubeModel::make(Family::D, 9));
  CHECK(d_norm == PolyFraction(P("5*X^4-4*X^3+62*X^2-4*X+5"), P("X*(X-1)^2")));
  CHECK(d_norm.den() == P("X^3-2*X^2+X"));
  CHECK(eval_fraction(d_norm, Var::X, Rational(4)) == Q("2005/36"));

  PolyFraction e_norm = norm_a_squared(TubeModel::make(Family::E, 15));
  PolyFraction e_expected =
      PolyFraction(P("3*(3*X^4-2*X^3+30*X^2-2*X+3)"), P("X*(X-1)^2")) - PolyFraction(Rational(2));
  CHECK(e_norm == e_expected);
  CHECK(e_norm == PolyFraction(P("9*X^4-8*X^3+94*X^2-8*X+9"), P("X*(X-1)^2")));
  CHECK(eval_fraction(e_norm, Var::X, Rational(4)) == Q("3273/36"));

  CHECK(norm_a_squared(TubeModel::make(Family::A, 2, 0)) ==
        PolyFraction(P("3*X^2-2*X+1"), P("X")));
  CHECK(norm_a_squared(TubeModel::make(Family::A, 5, 2)) ==
        PolyFraction(P("5*X^2-2*X+5"), P("X")));
  CHECK(norm_a_squared(TubeModel::make(Family::B, 2)) ==
        PolyFraction(P("X^4-2*X^3+18*X^2-2*X+1"), P("X*(X-1)^2")));
}

TEST_CASE("X rewrite agrees with the raw spectrum sum at sample angles") {
  std::vector<TubeModel> models;
  models.push_back(TubeModel::make(Family::A, 3, 1));
  models.push_back(TubeModel::make(Family::A, 6, 0));
  models.push_back(TubeModel::make(Family::B, 3));
  models.push_back(TubeModel::make(Family::C, 7));
  models.push_back(TubeModel::make(Family::D, 9));
  models.push_back(TubeModel::make(Family::E, 15));
  const std::vector<Rational> angles = {Q("3/2"), Q("5/3"), Q("2"), Q("7/3"), Q("11/5")};
  for (const auto& model : models) {
    PolyFraction norm = norm_a_squared(model);
    for (const Rational& t : angles) {
      Rational direct = eval_fraction(model.hopf_curvature, Var::t, t).pow(2);
      for (const auto& b : model.spectrum)
        direct += eval_fraction(b.value, Var::t, t).pow(2) *
                  Rational(static_cast<long>(b.multiplicity));
      CHECK(eval_fraction(norm, Var::X, t * t) == direct);
    }
  }
}

TEST_CASE("trace conditions, frozen numerators") {
  BiharmonicCondition d = biharmonic_condition(TubeModel::make(Family::D, 9));
  CHECK(d.numerator == P("5*X^4-24*X^3+102*X^2-24*X+5"));
  CHECK(d.scale == Rational(1));
  CHECK(d.denominator == P("X^3-2*X^2+X"));
  CHECK(validate_positive(d.denominator_positive, d.denominator, Var::X, d.domain));

  BiharmonicCondition e = biharmonic_condition(TubeModel::make(Family::E, 15));
  CHECK(e.numerator == P("9*X^4-40*X^3+158*X^2-40*X+9"));
  CHECK(e.scale == Rational(1));

  BiharmonicCondition a20 = biharmonic_condition(TubeModel::make(Family::A, 2, 0));
  CHECK(a20.numerator == P("3*X^2-8*X+1"));
  CHECK(a20.denominator == P("X"));
  CHECK(a20.domain == RationalInterval::greater_than(Rational(0)));
  CHECK(validate_positive(a20.denominator_positive, a20.denominator, Var::X, a20.domain));

  CHECK(biharmonic_condition(TubeModel::make(Family::A, 5, 2)).numerator ==
        P("5*X^2-14*X+5"));
  CHECK(biharmonic_condition(TubeModel::make(Family::B, 2)).numerator ==
        P("X^4-8*X^3+30*X^2-8*X+1"));
  CHECK(biharmonic_condition(TubeModel::make(Family::B, 3)).numerator ==
        P("X^4-8*X^3+46*X^2-8*X+1"));

  // Family C spot value: condition at X = 4 for n = 5.
  BiharmonicCondition c5 = biharmonic_condition(TubeModel::make(Family::C, 5));
  std::map<Var, Rational> at4{{Var::X, Rational(4)}};
  CHECK(c5.scale * c5.numerator.evaluate(at4) / c5.denominator.evaluate(at4) == Q("611/36"));
}

TEST_CASE("quartic positivity decompositions") {
  CHECK(P("5*X^4-24*X^3+102*X^2-24*X+5") ==
        P("X^2") * P("5*X^2-24*X+51") + P("51*X^2-24*X+5"));
  CHECK(P("9*X^4-40*X^3+158*X^2-40*X+9") ==
        P("X^2") * P("9*X^2-40*X+79") + P("79*X^2-40*X+9"));
}

TEST_CASE("admissible root counts") {
  auto count = [](Family f, unsigned n, std::optional<unsigned> m = {}) {
    return admissible_roots(biharmonic_condition(TubeModel::make(f, n, m))).roots.size();
  };
  CHECK(count(Family::D, 9) == 0);
  CHECK(count(Family::E, 15) == 0);
  CHECK(count(Family::B, 2) == 0);
  CHECK(count(Family::B, 3) == 0);
  CHECK(count(Family::B, 10) == 0);
  CHECK(count(Family::C, 5) == 0);
  CHECK(count(Family::C, 9) == 0);
  CHECK(count(Family::A, 2, 0) == 2);
  CHECK(count(Family::A, 5, 2) == 2);
  CHECK(count(Family::A, 12, 3) == 2);
}

TEST_CASE("geodesic sphere radii, frozen digits") {
  BiharmonicCondition cond = biharmonic_condition(TubeModel::make(Family::A, 2, 0));
  RootIsolation iso = admissible_roots(cond);
  REQUIRE(iso.roots.size() == 2);
  Rational tol = power_of_ten(12);
  RationalInterval small_root =
      refine_root(cond.numerator, Var::X, iso.roots[0].interval, tol);
  RationalInterval large_root =
      refine_root(cond.numerator, Var::X, iso.roots[1].interval, tol);

  // (4 -+ sqrt(13))/3 to twelve places.
  Rational small_expected = Rational(Integer::parse("131482908179"), Integer(10).pow(12));
  Rational large_expected = Rational(Integer::parse("2535183758488"), Integer(10).pow(12));
  CHECK((small_root.midpoint() - small_expected).abs() <= Rational(2) * tol);
  CHECK((large_root.midpoint() - large_expected).abs() <= Rational(2) * tol);

  // The closed-form enclosures must land on the same roots.
  auto [lo_enc, hi_enc] = closed_form_root_enclosures(2, 0, tol);
  CHECK(!lo_enc.intersect(small_root).empty());
  CHECK(!hi_enc.intersect(large_root).empty());
}

TEST_CASE("closed-form radius quadratic matches the condition") {
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned m = 0; m + 2 <= n; ++m) {
      RadiusFormulaCheck check = check_radius_formula(n, m);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(check.ok);
      CHECK(check.detail.empty());
      CHECK(check.discriminant_quarter == check.radicand);
    }
  CHECK(check_radius_formula(2, 0).radicand == Rational(13));
  CHECK(check_radius_formula(5, 2).radicand == Rational(24));
  CHECK(radius_discriminant_identity());
}

TEST_CASE("rational radicand case hits exact roots") {
  // n = 23, m = 10: radicand 100, roots 3/5 and 7/5 of 25 X^2 - 50 X + 21.
  RadiusFormulaCheck check = check_radius_formula(23, 10);
  CHECK(check.ok);
  CHECK(check.radicand == Rational(100));
  CHECK(check.condition == P("25*X^2-50*X+21"));
  auto [lo_enc, hi_enc] = closed_form_root_enclosures(23, 10, power_of_ten(9));
  CHECK(lo_enc.contains(Q("3/5")));
  CHECK(hi_enc.contains(Q("7/5")));
  std::map<Var, Rational> probe{{Var::X, Q("3/5")}};
  CHECK(check.condition.evaluate(probe).is_zero());
}

TEST_CASE("arccot enclosures, frozen sandwiches") {
  Rational eps = power_of_ten(15);
  RationalInterval at3 = arccot_sqrt_bounds(Rational(3), eps);
  CHECK(at3.hi() - at3.lo() <= eps);
  // pi/6 = 0.523598775598298873...
  CHECK(at3.lo() > Rational(Integer::parse("523598775598297"), Integer(10).pow(15)));
  CHECK(at3.hi() < Rational(Integer::parse("523598775598300"), Integer(10).pow(15)));

  RationalInterval at1 = arccot_sqrt_bounds(Rational(1), eps);
  // pi/4 = 0.785398163397448309...
  CHECK(at1.lo() > Rational(Integer::parse("785398163397447"), Integer(10).pow(15)));
  CHECK(at1.hi() < Rational(Integer::parse("785398163397450"), Integer(10).pow(15)));

  // arccot is decreasing in the argument.
  CHECK(at1.lo() > at3.hi());

  CHECK_THROWS_AS(arccot_sqrt_bounds(Rational(0), eps), std::invalid_argument);
  CHECK_THROWS_AS(arccot_sqrt_bounds(Rational(3), Rational(0)), std::invalid_argument);
}

TEST_CASE("radius rendering, frozen digits") {
  Rational prec = power_of_ten(12);
  CHECK(render_radius(RationalInterval::point(Rational(3)), prec) == "0.523598775598");
  CHECK(render_radius(RationalInterval::point(Rational(1)), prec) == "0.785398163397");
  CHECK(render_radius(RationalInterval::point(Rational(3)), power_of_ten(6)) == "0.523599");

  // The two geodesic-sphere radii in the smallest ambient dimension:
  // arccot(sqrt((4 -+ sqrt(13))/3)).
  BiharmonicCondition cond = biharmonic_condition(TubeModel::make(Family::A, 2, 0));
  RootIsolation iso = admissible_roots(cond);
  REQUIRE(iso.roots.size() == 2);
  Rational tight = power_of_ten(14);
  RationalInterval x_small = refine_root(cond.numerator, Var::X, iso.roots[0].interval, tight);
  RationalInterval x_large = refine_root(cond.numerator, Var::X, iso.roots[1].interval, tight);
  CHECK(render_radius(x_small, prec) == "1.222935900863");
  CHECK(render_radius(x_large, prec) == "0.560790665218");

  // Enclosure plumbing rejects hopeless inputs.
  CHECK_THROWS_AS(radius_enclosure(RationalInterval::closed(Rational(1), Rational(3)), prec),
                  std::invalid_argument);
  CHECK_THROWS_AS(radius_enclosure(RationalInterval::closed(Rational(-1), Rational(1)), prec),
                  std::invalid_argument);
  CHECK_THROWS_AS(radius_enclosure(RationalInterval::greater_than(Rational(1)), prec),
                  std::invalid_argument);
}

TEST_CASE("corrupted spectra are caught") {
  // Family D with the wrong multiplicity split no longer matches anything.
  TubeModel good = TubeModel::make(Family::D, 9);
  std::vector<CurvatureBranch> wrong = good.spectrum;
  wrong[2].multiplicity = 2;
  wrong[3].multiplicity = 2;
  TubeModel bad = TubeModel::raw(Family::D, 9, 0, wrong);
  CHECK(bad.spectrum_dimension() != bad.dimension());
  CHECK(!(norm_a_squared(bad) == norm_a_squared(good)));
  CHECK(!(biharmonic_condition(bad).numerator == P("5*X^4-24*X^3+102*X^2-24*X+5")));
}
