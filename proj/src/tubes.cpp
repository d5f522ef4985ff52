#include "bihar/tubes.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bihar {
namespace {

MultiPoly P(std::string_view s) { return MultiPoly::parse(s); }

bool even_in(const MultiPoly& p, Var v) {
  for (const auto& [mono, coeff] : p.terms()) {
    (void)coeff;
    if (mono.exponent(v) % 2 != 0) return false;
  }
  return true;
}

// t^(2k) -> X^k. The input must be univariate in t with even exponents only;
// callers establish that before dropping to the X picture.
MultiPoly even_t_to_x(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    for (Var v : kAllVars)
      if (v != Var::t && mono.exponent(v) != 0)
        throw std::logic_error("spectrum data involves a variable other than t");
    unsigned e = mono.exponent(Var::t);
    if (e % 2 != 0)
      throw std::logic_error("odd power of t survived the parity check");
    out = out + MultiPoly::term(coeff, Monomial::var(Var::X, static_cast<std::uint16_t>(e / 2)));
  }
  return out;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
  }
  throw std::logic_error("unknown family");
}

std::optional<Family> family_from_name(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  return std::nullopt;
}

unsigned TubeModel::spectrum_dimension() const {
  unsigned total = 1;  // the branch along the structure vector
  for (const auto& b : spectrum) total += b.multiplicity;
  return total;
}

RationalInterval TubeModel::x_domain() const {
  // Family A allows 0 < r < pi/2, the others require 0 < r < pi/4, i.e. t > 1.
  return family == Family::A ? RationalInterval::greater_than(Rational(0))
                             : RationalInterval::greater_than(Rational(1));
}

TubeModel TubeModel::raw(Family f, unsigned n, unsigned m,
                         std::vector<CurvatureBranch> spectrum) {
  TubeModel model;
  model.family = f;
  model.n = n;
  model.m = m;
  model.spectrum = std::move(spectrum);
  model.hopf_curvature = PolyFraction(P("t^2-1"), P("t"));  // 2*cot(2r)
  return model;
}

TubeModel TubeModel::make(Family f, unsigned n, std::optional<unsigned> m_opt) {
  auto reject = [&](const char* why) {
    throw std::invalid_argument("tube model " + std::string(family_name(f)) + ": " + why);
  };
  unsigned m = 0;
  if (f == Family::A) {
    if (!m_opt) reject("the core dimension m is required");
    m = *m_opt;
    if (n < 2 || m + 2 > n) reject("requires n >= 2 and 0 <= m <= n-2");
  } else {
    if (m_opt) reject("only family A takes a core dimension");
    switch (f) {
      case Family::B:
        if (n < 2) reject("requires n >= 2");
        break;
      case Family::C:
        if (n < 5 || n % 2 == 0) reject("requires odd n >= 5");
        break;
      case Family::D:
        if (n != 9) reject("requires n == 9");
        break;
      case Family::E:
        if (n != 15) reject("requires n == 15");
        break;
      default:
        break;
    }
  }

  const PolyFraction cot(P("t"));
  const PolyFraction neg_tan(P("-1"), P("t"));
  const PolyFraction cot_minus(P("t+1"), P("1-t"));  // cot(r - pi/4)
  const PolyFraction cot_plus(P("t-1"), P("t+1"));   // cot(r + pi/4)

  std::vector<CurvatureBranch> sp;
  auto add = [&sp](const char* label, const PolyFraction& v, unsigned mult) {
    if (mult > 0) sp.push_back({label, v, mult});
  };
  switch (f) {
    case Family::A:
      add("cot(r)", cot, 2 * (n - m - 1));
      add("-tan(r)", neg_tan, 2 * m);
      break;
    case Family::B:
      add("cot(r-pi/4)", cot_minus, n - 1);
      add("cot(r+pi/4)", cot_plus, n - 1);
      break;
    case Family::C:
      add("cot(r-pi/4)", cot_minus, 2);
      add("cot(r+pi/4)", cot_plus, 2);
      add("cot(r)", cot, n - 3);
      add("-tan(r)", neg_tan, n - 3);
      break;
    case Family::D:
      add("cot(r-pi/4)", cot_minus, 4);
      add("cot(r+pi/4)", cot_plus, 4);
      add("cot(r)", cot, 4);
      add("-tan(r)", neg_tan, 4);
      break;
    case Family::E:
      add("cot(r-pi/4)", cot_minus, 6);
      add("cot(r+pi/4)", cot_plus, 6);
      add("cot(r)", cot, 8);
      add("-tan(r)", neg_tan, 8);
      break;
  }

  TubeModel model = raw(f, n, m, std::move(sp));
  if (model.spectrum_dimension() != model.dimension())
    throw std::logic_error("spectrum multiplicities do not fill the hypersurface dimension");
  return model;
}

PolyFraction norm_a_squared(const TubeModel& model) {
  PolyFraction sum = model.hopf_curvature * model.hopf_curvature;
  for (const auto& b : model.spectrum)
    sum = sum + b.value * b.value * Rational(static_cast<long>(b.multiplicity));

  // The sum must be invariant under t -> -t before X = t^2 makes sense.
  PolyFraction mirrored(sum.num().negate_var(Var::t), sum.den().negate_var(Var::t));
  if (!(mirrored == sum))
    throw std::logic_error("squared shape norm is not even in t");
  if (!even_in(sum.num(), Var::t) || !even_in(sum.den(), Var::t)) {
    // Even value with an odd representation: symmetrize by den(-t).
    MultiPoly mirror = sum.den().negate_var(Var::t);
    sum = PolyFraction(sum.num() * mirror, sum.den() * mirror);
  }
  return PolyFraction(even_t_to_x(sum.num()), even_t_to_x(sum.den())).reduced();
}

BiharmonicCondition biharmonic_condition(const TubeModel& model) {
  Rational target(2 * static_cast<long>(model.n) + 2);
  PolyFraction diff = (norm_a_squared(model) - PolyFraction(target)).reduced();
  if (diff.num().is_zero())
    throw std::invalid_argument("trace condition vanishes identically");
  RationalInterval domain = model.x_domain();
  auto [scale, numerator] = content_primitive(diff.num());
  MultiPoly denominator = diff.den();
  auto cert = certify_positive(denominator, Var::X, domain);
  if (!cert)
    throw std::logic_error("cleared denominator is not positive on the admissible domain");
  return BiharmonicCondition{model.n,       std::move(numerator),
                             std::move(scale), std::move(denominator),
                             std::move(*cert), domain};
}

RootIsolation admissible_roots(const BiharmonicCondition& condition) {
  return isolate_roots(condition.numerator, Var::X, condition.domain);
}

RadiusFormulaCheck check_radius_formula(unsigned n, unsigned m) {
  BiharmonicCondition cond = biharmonic_condition(TubeModel::make(Family::A, n, m));
  long ln = static_cast<long>(n), lm = static_cast<long>(m);
  MultiPoly x = MultiPoly::variable(Var::X);
  MultiPoly expected = x * x * Rational(2 * ln - 2 * lm - 1) - x * Rational(2 * ln + 4) +
                       MultiPoly::constant(Rational(2 * lm + 1));
  expected = content_primitive(expected).primitive;

  Rational disc_quarter =
      Rational(ln + 2).pow(2) - Rational(2 * ln - 2 * lm - 1) * Rational(2 * lm + 1);
  Rational radicand = Rational(2 * lm - ln + 1).pow(2) + Rational(4 * ln + 4);

  RadiusFormulaCheck out{true, cond.numerator, expected, disc_quarter, radicand, ""};
  if (!(cond.numerator == expected)) {
    out.ok = false;
    out.detail = "condition " + cond.numerator.str() + " != expected " + expected.str();
  } else if (!(disc_quarter == radicand)) {
    out.ok = false;
    out.detail =
        "discriminant " + disc_quarter.str() + " != radicand " + radicand.str();
  }
  return out;
}

bool radius_discriminant_identity() {
  // The alphabet carries no dimension symbols, so here lambda stands for the
  // ambient dimension and mu for the core dimension; the claim is a pure
  // polynomial identity, so any two spare variables do.
  MultiPoly lhs = P("(lambda+2)^2 - (2*lambda-2*mu-1)*(2*mu+1)");
  MultiPoly rhs = P("(2*mu-lambda+1)^2 + 4*(lambda+1)");
  return lhs == rhs;
}

std::pair<RationalInterval, RationalInterval> closed_form_root_enclosures(
    unsigned n, unsigned m, const Rational& width) {
  if (width.sign() <= 0) throw std::invalid_argument("width must be positive");
  if (n < 2 || m + 2 > n) throw std::invalid_argument("requires n >= 2 and 0 <= m <= n-2");
  long ln = static_cast<long>(n), lm = static_cast<long>(m);
  Rational radicand = Rational(2 * lm - ln + 1).pow(2) + Rational(4 * ln + 4);
  Rational lead(2 * ln - 2 * lm - 1);

  // Enclose sqrt(radicand) tightly enough that the affine maps below keep
  // each root enclosure within `width`.
  MultiPoly q = P("X^2") - MultiPoly::constant(radicand);
  RootIsolation iso = isolate_roots(q, Var::X, RationalInterval::greater_than(Rational(0)));
  if (iso.roots.size() != 1) throw std::logic_error("expected one positive square root");
  RationalInterval s =
      refine_root(q, Var::X, iso.roots[0].interval, width * lead / Rational(2));

  Rational a(ln + 2);
  return {RationalInterval::closed((a - s.hi()) / lead, (a - s.lo()) / lead),
          RationalInterval::closed((a + s.lo()) / lead, (a + s.hi()) / lead)};
}

namespace {

// sin x bracketed between the partial Taylor sums with `terms` and `terms+1`
// terms. Alternating with strictly decreasing magnitudes for |x| <= 8/5, so
// consecutive partial sums straddle the value.
std::pair<Rational, Rational> sin_bracket(const Rational& x, unsigned terms) {
  Rational x2 = x * x, term = x, sum = x, shorter;
  for (unsigned j = 1; j <= terms; ++j) {
    term = -(term * x2) / Rational(static_cast<long>(2 * j) * (2 * j + 1));
    if (j == terms) shorter = sum;
    sum += term;
  }
  auto [lo, hi] = std::minmax(shorter, sum);
  return {lo, hi};
}

std::pair<Rational, Rational> cos_bracket(const Rational& x, unsigned terms) {
  Rational x2 = x * x, term = 1, sum = 1, shorter;
  for (unsigned j = 1; j <= terms; ++j) {
    term = -(term * x2) / Rational(static_cast<long>(2 * j - 1) * (2 * j));
    if (j == terms) shorter = sum;
    sum += term;
  }
  auto [lo, hi] = std::minmax(shorter, sum);
  return {lo, hi};
}

// cot^2 x within rational bounds, or nullopt when the sin bracket does not
// clear zero yet.
std::optional<std::pair<Rational, Rational>> cot2_bounds(const Rational& x, unsigned terms) {
  auto [slo, shi] = sin_bracket(x, terms);
  if (slo.sign() <= 0) return std::nullopt;
  auto [clo, chi] = cos_bracket(x, terms);
  Rational c2lo, c2hi;
  if (clo.sign() >= 0) {
    c2lo = clo * clo;
    c2hi = chi * chi;
  } else if (chi.sign() <= 0) {
    c2lo = chi * chi;
    c2hi = clo * clo;
  } else {
    c2lo = Rational(0);
    c2hi = std::max(clo * clo, chi * chi);
  }
  return std::make_pair(c2lo / (shi * shi), c2hi / (slo * slo));
}

// +1 when cot^2 x > T, -1 when cot^2 x < T, for x in (0, pi/2). Deepens the
// Taylor bracket until it separates from T; cot of a nonzero rational angle
// is never the square root of a rational, so equality cannot occur and the
// loop terminates.
int compare_cot2(const Rational& x, const Rational& T) {
  for (unsigned terms = 8; terms <= 400; terms += terms / 2 + 1) {
    auto b = cot2_bounds(x, terms);
    if (!b) continue;
    if (b->first > T) return 1;
    if (b->second < T) return -1;
  }
  throw std::logic_error("cot^2 enclosure failed to separate from the target");
}

// Decimal truncations of pi/2, used as upper bisection starts.
constexpr char kHalfPiDigits[] = "15707963267948966192313216916397514420";

}  // namespace

RationalInterval arccot_sqrt_bounds(const Rational& T, const Rational& eps) {
  if (T.sign() <= 0) throw std::invalid_argument("argument must be positive");
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");

  // Lower start: halve until cot^2 clears T from above (cot^2 x ~ 1/x^2 at 0).
  Rational lo(1, 2);
  for (int i = 0; compare_cot2(lo, T) != 1; ++i) {
    if (i > 300) throw std::logic_error("no lower bisection start found");
    lo = lo / Rational(2);
  }

  // Upper start: truncations of pi/2 approach the pole where cot^2 -> 0.
  Rational hi;
  bool found = false;
  constexpr unsigned kMaxDigits = sizeof(kHalfPiDigits) - 1;
  for (unsigned digits = 8; digits <= kMaxDigits && !found; digits += 6) {
    Rational cand(Integer::parse(std::string(kHalfPiDigits, digits)),
                  Integer(10).pow(digits - 1));
    if (compare_cot2(cand, T) == -1) {
      hi = cand;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("argument too small for the supported precision");

  while (hi - lo > eps) {
    Rational mid = (lo + hi) / Rational(2);
    if (compare_cot2(mid, T) == 1)
      lo = mid;
    else
      hi = mid;
  }
  return RationalInterval::closed(lo, hi);
}

RationalInterval radius_enclosure(const RationalInterval& x_enclosure, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  if (!x_enclosure.bounded())
    throw std::invalid_argument("X enclosure must be bounded");
  if (x_enclosure.lo().sign() <= 0)
    throw std::invalid_argument("X enclosure must be positive");
  Rational quarter = eps / Rational(4);
  // arccot(sqrt(.)) is decreasing, so the endpoints swap roles.
  Rational r_hi = arccot_sqrt_bounds(x_enclosure.lo(), quarter).hi();
  Rational r_lo = arccot_sqrt_bounds(x_enclosure.hi(), quarter).lo();
  if (r_hi - r_lo > eps)
    throw std::invalid_argument("X enclosure too wide for the requested radius precision");
  return RationalInterval::closed(r_lo, r_hi);
}

std::string render_radius(const RationalInterval& x_enclosure, const Rational& precision) {
  RationalInterval r = radius_enclosure(x_enclosure, precision);
  unsigned digits = 1;
  while (Rational(Integer(1), Integer(10).pow(digits)) > precision) {
    if (++digits > 80) throw std::invalid_argument("precision beyond supported range");
  }
  // |printed - r| <= rounding + half the width <= precision/2 + precision/2.
  return decimal_string(r.midpoint(), digits);
}

}  // namespace bihar
