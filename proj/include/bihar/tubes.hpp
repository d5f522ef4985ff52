#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bihar/realalg.hpp"

namespace bihar {

/// The five families of homogeneous model hypersurfaces, by their usual
/// letters. A is the tube over a totally geodesic complex subspace (m = the
/// complex dimension of the core; m = 0 is the geodesic sphere), B over the
/// complex quadric, C, D, E over the remaining rank-two cores.
enum class Family { A, B, C, D, E };

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view s);

/// One principal-curvature branch: its value as a rational function of
/// t = cot r, and its multiplicity.
struct CurvatureBranch {
  std::string label;
  PolyFraction value;  // univariate in Var::t
  unsigned multiplicity;
};

/// Shape data of one model hypersurface with the radius encoded by t = cot r.
/// The branch along the structure vector (value 2*cot(2r), multiplicity 1) is
/// stored separately from the rest of the spectrum.
struct TubeModel {
  Family family;
  unsigned n;  // complex dimension of the ambient space
  unsigned m;  // core dimension; meaningful for family A only
  std::vector<CurvatureBranch> spectrum;
  PolyFraction hopf_curvature;

  /// Validates the family constraints (A: n >= 2, 0 <= m <= n-2; B: n >= 2;
  /// C: odd n >= 5; D: n == 9; E: n == 15) and the dimension count.
  static TubeModel make(Family f, unsigned n, std::optional<unsigned> m = std::nullopt);

  /// Unchecked assembly. Exists so tests can corrupt spectra on purpose and
  /// watch the verification fail.
  static TubeModel raw(Family f, unsigned n, unsigned m,
                       std::vector<CurvatureBranch> spectrum);

  unsigned dimension() const { return 2 * n - 1; }
  unsigned spectrum_dimension() const;  // sum of multiplicities + 1

  /// Admissible range of X = t^2 = cot^2 r: (0, inf) for family A, (1, inf)
  /// for the tubes that require 0 < r < pi/4.
  RationalInterval x_domain() const;
};

/// The squared norm of the shape operator as an exact rational function of
/// X = t^2. The sum over the spectrum is even in t; the rewrite is validated
/// and the result reduced to lowest terms.
PolyFraction norm_a_squared(const TubeModel& model);

/// The biharmonic trace condition ||A||^2 - 2(n+1) = 0 with the positive
/// denominator cleared: scale * numerator / denominator, numerator primitive
/// with positive leading coefficient. The denominator's positivity on the
/// admissible domain is certified, so roots of the condition are exactly the
/// admissible roots of the numerator.
struct BiharmonicCondition {
  unsigned n;
  MultiPoly numerator;  // in Var::X
  Rational scale;
  MultiPoly denominator;
  PositivityCertificate denominator_positive;
  RationalInterval domain;
};

BiharmonicCondition biharmonic_condition(const TubeModel& model);

RootIsolation admissible_roots(const BiharmonicCondition& condition);

/// Comparison of a family-A condition against the closed-form quadratic
/// (2n-2m-1) X^2 - 2(n+2) X + (2m+1), plus the discriminant bookkeeping
/// (n+2)^2 - (2n-2m-1)(2m+1) == (2m-n+1)^2 + 4(n+1).
struct RadiusFormulaCheck {
  bool ok;
  MultiPoly condition;
  MultiPoly expected;
  Rational discriminant_quarter;
  Rational radicand;
  std::string detail;  // both sides printed on mismatch
};

RadiusFormulaCheck check_radius_formula(unsigned n, unsigned m);

/// The discriminant identity expanded symbolically as polynomials.
/// The alphabet has no dimension symbols, so two spare variables stand in.
bool radius_discriminant_identity();

/// Exact rational enclosures of the two closed-form roots
/// (n+2 -+ sqrt(radicand)) / (2n-2m-1), each of width <= width.
std::pair<RationalInterval, RationalInterval> closed_form_root_enclosures(
    unsigned n, unsigned m, const Rational& width);

/// Rational bounds of width <= eps around arccot(sqrt(T)) for rational T > 0.
/// Bisection against rigorous Taylor enclosures of cot^2; no floating point
/// anywhere. Termination relies on cot of a nonzero rational angle never
/// being the square root of a rational.
RationalInterval arccot_sqrt_bounds(const Rational& T, const Rational& eps);

/// Enclosure of the radius r = arccot(sqrt(X)) over a whole X-enclosure.
/// Throws std::invalid_argument when the input is too wide to support eps.
RationalInterval radius_enclosure(const RationalInterval& x_enclosure, const Rational& eps);

/// Decimal rendering of the radius with |printed - r| <= precision.
std::string render_radius(const RationalInterval& x_enclosure, const Rational& precision);

}  // namespace bihar
