#include "bihar/chains.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace bihar {
namespace {

MultiPoly P(std::string_view s) { return MultiPoly::parse(s); }

const char* kEq1 = "mu^2-(alpha+gamma)*mu+alpha*gamma-beta^2";

ChainStep make_step(std::string name, std::string anchor) {
  ChainStep s;
  s.name = std::move(name);
  s.anchor = std::move(anchor);
  return s;
}

MultiPoly normalized(const MultiPoly& p) {
  return p.is_zero() ? p : content_primitive(p).primitive;
}

std::string scale_note(const BetaElimination& elim) {
  std::string note = "resultant scale " + elim.resultant_scale.str();
  if (elim.substitution_scale)
    note += ", substitution scale " + elim.substitution_scale->str();
  else
    note += ", substitution route unavailable";
  return note;
}

void finish(ChainCertificate& cert) {
  cert.ok = !cert.steps.empty();
  for (const auto& s : cert.steps) cert.ok = cert.ok && s.ok;
}

Rational small_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 21) - 10;
  long den = 1 + static_cast<long>(rng() % 6);
  return Rational(num, den);
}

/// Element a + b*beta of Q[beta]/(beta^2 - B0).
struct QuadExt {
  Rational a, b;
};

QuadExt qmul(const QuadExt& x, const QuadExt& y, const Rational& b0) {
  return {x.a * y.a + x.b * y.b * b0, x.a * y.b + x.b * y.a};
}

QuadExt qadd(const QuadExt& x, const QuadExt& y) { return {x.a + y.a, x.b + y.b}; }

// Evaluate a polynomial at a point where beta is the square root of b0:
// split by beta degree and fold even powers into b0.
QuadExt eval_quad(const MultiPoly& p, const std::map<Var, Rational>& pt, const Rational& b0) {
  QuadExt out{Rational(0), Rational(0)};
  std::vector<MultiPoly> by_beta = p.coefficients_in(Var::beta);
  Rational even(1);
  for (std::size_t k = 0; k < by_beta.size(); ++k) {
    if (k >= 2 && k % 2 == 0) even = even * b0;
    if (by_beta[k].is_zero()) continue;
    Rational c = by_beta[k].evaluate(pt) * even;
    if (k % 2 == 0)
      out.a = out.a + c;
    else
      out.b = out.b + c;
  }
  return out;
}

}  // namespace

PolyFraction hopf_relation(const PolyFraction& l1, const PolyFraction& l2,
                           const PolyFraction& delta) {
  PolyFraction two(Rational(2));
  return two * l1 * l2 - (l1 + l2) * delta - two;
}

MultiPoly gradient_eigenvalue(unsigned n) {
  return MultiPoly::variable(Var::H) * Rational(-(2 * static_cast<long>(n) - 1), 2);
}

const ChainStep* ChainCertificate::find(std::string_view name) const {
  for (const auto& s : steps)
    if (s.name == name) return &s;
  return nullptr;
}

ChainCertificate chain_case1() {
  ChainCertificate cert;
  cert.id = "case1";
  cert.data.emplace_back("mu_image", "-1/3*(alpha+gamma)");
  DerivationContext ctx = DerivationContext::make(MuCase::one);
  const MultiPoly eq1 = P(kEq1);

  // Closing the curvature relation under the mu image.
  ChainStep s = make_step("poly1", "poly1");
  {
    MultiPoly raw = eq1.substitute(Var::mu, ctx.mu_image());
    s.expected = P("4*alpha^2-9*beta^2+17*alpha*gamma+4*gamma^2");
    s.scalar = proportional(raw, *s.expected);
    s.produced = normalized(raw);
    s.ok = s.scalar.has_value() && s.produced == *s.expected;
    if (!s.ok) s.detail = "closure is not proportional to the expected quadric";
  }
  cert.steps.push_back(s);
  const MultiPoly poly1 = cert.steps.back().produced;

  // First derivative pass.
  s = make_step("eq6", "eq6");
  {
    MultiPoly raw = ctx.phi_derive(poly1);
    s.expected = P("54*beta^4-(49*alpha^2+209*alpha*gamma+52*gamma^2-54)*beta^2"
                   "-32*gamma^4-44*alpha*gamma^3+(59*alpha^2+32)*gamma^2"
                   "+(17*alpha^3+76*alpha)*gamma+17*alpha^2");
    s.scalar = proportional(raw, *s.expected);
    s.produced = normalized(raw);
    s.ok = s.scalar.has_value();
    if (!s.ok) s.detail = "derivative is not proportional to the expected quartic";
  }
  cert.steps.push_back(s);
  const MultiPoly eq6 = cert.steps.back().produced;

  // Eliminating beta between the two constraints.
  s = make_step("elim-beta-1", "elim1");
  {
    BetaElimination elim = eliminate_beta(poly1, eq6);
    s.expected = normalized(P("(alpha+4*gamma)*(100*gamma^3+300*alpha*gamma^2"
                              "+(300*alpha^2-126)*gamma+100*alpha^3-369*alpha)"));
    s.scalar = proportional(elim.eliminant, *s.expected);
    s.produced = elim.eliminant;
    s.detail = scale_note(elim);
    s.ok = s.scalar.has_value() && elim.substitution_scale.has_value();
  }
  cert.steps.push_back(s);
  const MultiPoly elim1 = cert.steps.back().produced;

  // Splitting off the linear factor.
  s = make_step("f", "f");
  {
    s.cofactor = P("alpha+4*gamma");
    s.expected = P("100*gamma^3+300*alpha*gamma^2+(300*alpha^2-126)*gamma"
                   "+100*alpha^3-369*alpha");
    auto quotient = exact_divide(elim1, *s.cofactor);
    if (!quotient) {
      s.detail = "linear factor does not divide the eliminant";
    } else {
      s.scalar = proportional(*quotient, *s.expected);
      s.produced = normalized(*quotient);
      s.ok = s.scalar.has_value() && s.produced == *s.expected;
    }
  }
  cert.steps.push_back(s);
  const MultiPoly f = cert.steps.back().produced;

  // Second derivative pass, closed under the quadric. The same linear factor
  // splits off again; the comparand below is the historically recorded
  // quartic, which the derived one is checked against rather than assumed.
  const MultiPoly recorded_quartic =
      P("1000*gamma^4+2600*alpha*gamma^3+(5000*alpha^2+700*alpha-1113)*gamma^2"
        "+(4400*alpha^3+500*alpha^2-2055*alpha)*gamma"
        "+1000*alpha^4-200*alpha^3-1842*alpha^2-450*alpha+189");
  s = make_step("quartic", "quartic");
  {
    BetaElimination elim = eliminate_beta(poly1, ctx.phi_derive(f));
    s.cofactor = P("alpha+4*gamma");
    s.expected = recorded_quartic;
    auto quotient = exact_divide(elim.eliminant, *s.cofactor);
    if (!quotient) {
      s.detail = "linear factor does not divide the eliminant; " + scale_note(elim);
    } else {
      s.produced = normalized(*quotient);
      s.scalar = proportional(s.produced, *s.expected);
      s.ok = s.scalar.has_value() && elim.substitution_scale.has_value();
      if (!s.scalar) {
        MultiPoly diff = s.produced - *s.expected;
        bool in_ideal = exact_divide(diff, f).has_value();
        s.detail = "derived quartic is not proportional to the recorded comparand, and "
                   "their difference is " +
                   std::string(in_ideal ? "" : "not ") +
                   "a multiple of f; the derivative images validated on the first pass, "
                   "so the comparand itself is inconsistent with the system; " +
                   scale_note(elim);
        cert.data.emplace_back("quartic_derived", s.produced.str());
        cert.data.emplace_back("quartic_comparand", s.expected->str());
        cert.data.emplace_back("quartic_difference_divisible_by_f",
                               in_ideal ? "true" : "false");
      } else {
        s.detail = scale_note(elim);
      }
    }
  }
  cert.steps.push_back(s);
  const MultiPoly quartic = cert.steps.back().produced;

  // The final eliminant in alpha alone, two independent routes. The recorded
  // comparand is eliminated as well: the constancy conclusion must follow on
  // either reading.
  s = make_step("res-final", "res1");
  if (f.is_zero() || quartic.is_zero()) {
    s.detail = "missing upstream artifact";
  } else {
    ScaledPoly res = resultant(f, quartic, Var::gamma);
    MultiPoly check = sylvester_resultant_value(f, quartic, Var::gamma);
    bool routes_agree = check == res.poly * res.scale;
    s.produced = res.poly;
    s.scalar = res.scale;
    unsigned deg = res.poly.degree_in(Var::alpha);
    MultiPoly comparand_res = sylvester_resultant_value(f, recorded_quartic, Var::gamma);
    s.detail = "degree in alpha: " + std::to_string(deg);
    s.ok = routes_agree && !res.poly.is_zero() && !res.poly.depends_on(Var::gamma) &&
           deg >= 1 && !comparand_res.is_zero();
    cert.data.emplace_back("alpha_equation_degree", std::to_string(deg));
    cert.data.emplace_back("comparand_resultant_nonzero",
                           comparand_res.is_zero() ? "false" : "true");
  }
  cert.steps.push_back(s);

  // The rejected factor forces the two off-branch curvatures to merge.
  s = make_step("branch-reject", "reject1");
  {
    bool merge = ctx.mu_image() - MultiPoly::variable(Var::gamma) ==
                 P("-1/3*(alpha+4*gamma)");
    MultiPoly collapsed = eq1.substitute(Var::mu, MultiPoly::variable(Var::gamma));
    s.produced = collapsed;
    s.expected = P("-beta^2");
    s.ok = merge && collapsed == *s.expected;
    s.detail = "merged curvature annihilates the off-diagonal norm";
  }
  cert.steps.push_back(s);

  // Constant alpha closes the branch: the two linear constraints force
  // mu = 0 and gamma = -alpha, and the relation then reads -(alpha^2+beta^2).
  s = make_step("constancy", "final1");
  {
    MultiPoly plus = P("alpha+gamma+3*mu"), minus = P("alpha+gamma-3*mu");
    bool split = plus + minus == P("2*(alpha+gamma)") && plus - minus == P("6*mu");
    MultiPoly collapsed = eq1.substitute(Var::mu, MultiPoly::zero())
                              .substitute(Var::gamma, P("-alpha"));
    s.produced = collapsed;
    s.expected = P("-alpha^2-beta^2");
    auto psd = quadratic_form_psd(P("alpha^2+beta^2"), Var::alpha, Var::beta);
    s.ok = split && collapsed == *s.expected && psd.has_value() &&
           validate_psd(*psd, P("alpha^2+beta^2"));
    s.detail = "sum of squares must vanish, so beta = 0";
  }
  cert.steps.push_back(s);

  finish(cert);
  return cert;
}

ChainCertificate chain_case2(unsigned d_samples, std::uint64_t seed) {
  ChainCertificate cert;
  cert.id = "case2";
  cert.data.emplace_back("mu_image", "d-alpha-gamma");
  cert.data.emplace_back("d_samples", std::to_string(d_samples));
  cert.data.emplace_back("seed", std::to_string(seed));
  DerivationContext ctx = DerivationContext::make(MuCase::two);
  const MultiPoly eq1 = P(kEq1);

  ChainStep s = make_step("eq8", "eq8");
  {
    MultiPoly raw = eq1.substitute(Var::mu, ctx.mu_image());
    s.expected = P("2*alpha^2-beta^2-3*alpha*d+d^2+5*alpha*gamma-3*d*gamma+2*gamma^2");
    s.scalar = proportional(raw, *s.expected);
    s.produced = normalized(raw);
    s.ok = raw == *s.expected;  // the closure is exact here, scale included
    if (!s.ok) s.detail = "closure does not reproduce the expected constraint";
  }
  cert.steps.push_back(s);
  const MultiPoly eq8 = cert.steps.back().produced;

  s = make_step("eq9", "eq9");
  {
    MultiPoly raw = ctx.phi_derive(eq8);
    s.expected = P("2*beta^4-(18*gamma^2+(35*alpha-22*d)*gamma+13*alpha^2-18*alpha*d"
                   "+6*d^2-2)*beta^2-8*gamma^4-(6*alpha-10*d)*gamma^3"
                   "+(9*alpha^2-2*alpha*d-3*d^2+8)*gamma^2"
                   "+(5*alpha^3-8*alpha^2*d+(3*d^2+14)*alpha-10*d)*gamma"
                   "+5*alpha^2-8*alpha*d+3*d^2");
    s.scalar = proportional(raw, *s.expected);
    s.produced = normalized(raw);
    s.ok = s.scalar.has_value();
    if (!s.ok) s.detail = "derivative is not proportional to the expected quartic";
  }
  cert.steps.push_back(s);
  const MultiPoly eq9 = cert.steps.back().produced;

  s = make_step("elim-beta-2", "elim2");
  {
    BetaElimination elim = eliminate_beta(eq8, eq9);
    s.expected = normalized(
        P("(alpha-d+2*gamma)*(18*gamma^3+(54*alpha-33*d)*gamma^2"
          "+(54*alpha^2-66*alpha*d+20*d^2-6)*gamma"
          "+18*alpha^3-33*alpha^2*d+(20*d^2-9)*alpha-4*d^3+5*d)"));
    s.scalar = proportional(elim.eliminant, *s.expected);
    s.produced = elim.eliminant;
    s.detail = scale_note(elim);
    s.ok = s.scalar.has_value() && elim.substitution_scale.has_value();
  }
  cert.steps.push_back(s);
  const MultiPoly elim2 = cert.steps.back().produced;

  s = make_step("g", "g");
  {
    s.cofactor = P("alpha-d+2*gamma");
    s.expected = P("18*gamma^3+(54*alpha-33*d)*gamma^2+(54*alpha^2-66*alpha*d+20*d^2-6)*gamma"
                   "+18*alpha^3-33*alpha^2*d+(20*d^2-9)*alpha-4*d^3+5*d");
    auto quotient = exact_divide(elim2, *s.cofactor);
    if (!quotient) {
      s.detail = "linear factor does not divide the eliminant";
    } else {
      s.scalar = proportional(*quotient, *s.expected);
      s.produced = normalized(*quotient);
      s.ok = s.scalar.has_value() && s.produced == *s.expected;
    }
  }
  cert.steps.push_back(s);
  const MultiPoly g = cert.steps.back().produced;

  // Third derivative pass. No closed comparand exists for this tail; the
  // engine records its own artifact, split by powers of the beta square.
  s = make_step("poly2", "poly2");
  MultiPoly poly2_b;
  {
    MultiPoly raw = ctx.phi_derive(g);
    poly2_b = rewrite_even_beta(raw);
    s.produced = normalized(poly2_b);
    std::vector<MultiPoly> by_b = s.produced.coefficients_in(Var::B);
    bool shape = by_b.size() == 2 && by_b[1].degree_in(Var::gamma) == 3 &&
                 by_b[0].degree_in(Var::gamma) == 5;
    if (shape) {
      std::vector<MultiPoly> p_part = by_b[1].coefficients_in(Var::gamma);
      std::vector<MultiPoly> q_part = by_b[0].coefficients_in(Var::gamma);
      for (std::size_t i = 0; i < p_part.size(); ++i)
        cert.data.emplace_back("P" + std::to_string(i), p_part[i].str());
      for (std::size_t i = 0; i < q_part.size(); ++i)
        cert.data.emplace_back("Q" + std::to_string(i), q_part[i].str());
    }
    s.detail = "normalized coefficients recorded as P0..P3, Q0..Q5";
    s.ok = shape;
  }
  cert.steps.push_back(s);

  s = make_step("R", "R");
  {
    BetaElimination elim = eliminate_beta(eq8, poly2_b);
    s.cofactor = P("alpha-d+2*gamma");
    auto quotient = exact_divide(elim.eliminant, *s.cofactor);
    if (!quotient) {
      s.detail = "linear factor does not divide the eliminant; " + scale_note(elim);
    } else {
      s.produced = normalized(*quotient);
      std::vector<MultiPoly> r_part = s.produced.coefficients_in(Var::gamma);
      if (s.produced.degree_in(Var::gamma) == 4)
        for (std::size_t i = 0; i < r_part.size(); ++i)
          cert.data.emplace_back("R" + std::to_string(i), r_part[i].str());
      s.detail = scale_note(elim);
      s.ok = elim.substitution_scale.has_value() && s.produced.degree_in(Var::gamma) == 4;
    }
  }
  cert.steps.push_back(s);
  const MultiPoly r_poly = cert.steps.back().produced;

  s = make_step("res-final-d", "res2");
  if (g.is_zero() || r_poly.is_zero()) {
    s.detail = "missing upstream artifact";
  } else {
    ScaledPoly res = resultant(g, r_poly, Var::gamma);
    MultiPoly check = sylvester_resultant_value(g, r_poly, Var::gamma);
    bool routes_agree = check == res.poly * res.scale;
    s.produced = res.poly;
    s.scalar = res.scale;
    unsigned deg_alpha = res.poly.degree_in(Var::alpha);
    unsigned deg_d = res.poly.degree_in(Var::d);
    s.detail = "degree in alpha: " + std::to_string(deg_alpha) +
               ", degree in d: " + std::to_string(deg_d);
    s.ok = routes_agree && !res.poly.is_zero() && !res.poly.depends_on(Var::gamma) &&
           deg_alpha >= 1;
    cert.data.emplace_back("alpha_equation_degree", std::to_string(deg_alpha));
    cert.data.emplace_back("alpha_equation_degree_d", std::to_string(deg_d));
  }
  cert.steps.push_back(s);
  const MultiPoly final_eliminant = cert.steps.back().produced;

  // The trace constant is an unknown nonzero rational; sample it.
  s = make_step("d-specializations", "dspec");
  {
    std::mt19937_64 rng(seed);
    bool all = true;
    std::string detail;
    for (unsigned k = 0; k < d_samples; ++k) {
      Rational d0 = small_rational(rng);
      while (d0.is_zero()) d0 = small_rational(rng);
      MultiPoly at_d = final_eliminant.substitute(Var::d, MultiPoly::constant(d0));
      bool nonzero = !at_d.is_zero();
      all = all && nonzero;
      if (!detail.empty()) detail += ", ";
      detail += "d=" + d0.str() + (nonzero ? ": nonzero" : ": VANISHED");
    }
    s.produced = final_eliminant;
    s.detail = detail;
    s.ok = all && d_samples > 0;
  }
  cert.steps.push_back(s);

  // Pointwise revalidation of the derivative images in Q[beta]/(beta^2-B0):
  // the quadratic-extension arithmetic below reimplements the images
  // numerically, independently of the symbolic engine.
  s = make_step("pointwise-oracle", "oracle");
  {
    std::mt19937_64 rng(seed ^ 0x9E3779B97F4A7C15ull);
    MultiPoly raw9 = ctx.phi_derive(eq8);
    MultiPoly raw9_b = rewrite_even_beta(raw9);
    unsigned checked = 0, agreed = 0;
    while (checked < 20) {
      Rational a0 = small_rational(rng), g0 = small_rational(rng), d0 = small_rational(rng);
      std::map<Var, Rational> pt{{Var::alpha, a0}, {Var::gamma, g0}, {Var::d, d0}};
      Rational b0 = eq8.substitute(Var::beta, MultiPoly::zero()).evaluate(pt);
      if (b0.is_zero()) continue;  // beta^2 = B0 must define a nonzero square
      ++checked;

      Rational mu0 = d0 - a0 - g0;
      QuadExt d_alpha{Rational(0), a0 + g0 - Rational(3) * mu0};
      QuadExt d_beta{b0 + g0 * g0 + mu0 * (a0 - Rational(2) * g0) + Rational(1), Rational(0)};
      QuadExt d_gamma{Rational(0),
                      (g0 - mu0) * (g0 * g0 - a0 * g0 - Rational(1)) / b0 + Rational(2) * g0 + mu0};
      QuadExt beta_elt{Rational(0), Rational(1)};

      std::map<Var, Rational> pt_b = pt;
      pt_b[Var::B] = b0;

      // First pass: g is beta-free, so only the alpha and gamma images act.
      QuadExt dg = qadd(qmul(eval_quad(g.derivative(Var::alpha), pt, b0), d_alpha, b0),
                        qmul(eval_quad(g.derivative(Var::gamma), pt, b0), d_gamma, b0));
      QuadExt lhs = qmul(beta_elt, dg, b0);
      Rational rhs = poly2_b.evaluate(pt_b);
      bool pass1 = lhs.b.is_zero() && lhs.a == rhs;

      // Second pass on the quadric itself, which does carry a beta term and
      // therefore exercises the beta image as well.
      QuadExt d8 = qadd(qadd(qmul(eval_quad(eq8.derivative(Var::alpha), pt, b0), d_alpha, b0),
                             qmul(eval_quad(eq8.derivative(Var::beta), pt, b0), d_beta, b0)),
                        qmul(eval_quad(eq8.derivative(Var::gamma), pt, b0), d_gamma, b0));
      QuadExt lhs9 = qmul(beta_elt, d8, b0);
      Rational rhs9 = raw9_b.evaluate(pt_b);
      bool pass2 = lhs9.b.is_zero() && lhs9.a == rhs9;

      if (pass1 && pass2) ++agreed;
    }
    s.produced = poly2_b;
    s.detail = std::to_string(agreed) + "/" + std::to_string(checked) + " sample points agree";
    s.ok = checked == 20 && agreed == checked;
  }
  cert.steps.push_back(s);

  s = make_step("gamma-mu-reject", "reject2");
  {
    MultiPoly merged = (ctx.mu_image() - MultiPoly::variable(Var::gamma))
                           .substitute(Var::d, P("alpha+2*gamma"));
    MultiPoly collapsed = eq1.substitute(Var::mu, MultiPoly::variable(Var::gamma));
    s.produced = collapsed;
    s.expected = P("-beta^2");
    s.ok = merged.is_zero() && collapsed == *s.expected;
    s.detail = "rejected factor merges the curvatures and kills beta";
  }
  cert.steps.push_back(s);

  // With everything constant the derivative of beta must vanish, yet its
  // image is bounded below by 1.
  s = make_step("eq3-positive", "posit2");
  {
    MultiPoly rhs = P("beta^2+gamma^2+mu*(alpha-2*gamma)+1")
                        .substitute(Var::mu, P("1/3*(alpha+gamma)"));
    s.produced = rhs;
    s.expected = P("beta^2+1/3*(alpha^2-alpha*gamma+gamma^2)+1");
    MultiPoly form = P("alpha^2-alpha*gamma+gamma^2");
    auto psd = quadratic_form_psd(form, Var::alpha, Var::gamma);
    s.ok = rhs == *s.expected && psd.has_value() && validate_psd(*psd, form);
    s.detail = "derivative of beta is at least 1";
  }
  cert.steps.push_back(s);

  finish(cert);
  return cert;
}

ChainCertificate thm1_elimination() {
  ChainCertificate cert;
  cert.id = "thm1";

  ChainStep s = make_step("shape", "shape");
  {
    s.produced = gradient_eigenvalue(2);
    s.expected = P("-3/2*H");
    s.ok = s.produced == *s.expected;
  }
  cert.steps.push_back(s);

  s = make_step("trace", "trace");
  {
    MultiPoly e1 = gradient_eigenvalue(2) + P("lambda") + P("delta") - P("3*H");
    s.produced = e1;
    s.expected = P("lambda+delta-9/2*H");
    s.ok = e1 == *s.expected;
  }
  cert.steps.push_back(s);

  s = make_step("pair", "pair");
  {
    PolyFraction rel = hopf_relation(PolyFraction(P("-3/2*H")), PolyFraction(P("lambda")),
                                     PolyFraction(P("delta")));
    MultiPoly e2 = (rel * PolyFraction(Rational(-2))).to_polynomial();
    s.produced = e2;
    s.expected = P("6*H*lambda+2*lambda*delta-3*H*delta+4");
    s.ok = e2 == *s.expected;
  }
  cert.steps.push_back(s);

  s = make_step("elim", "elim");
  {
    const MultiPoly e1 = P("lambda+delta-9/2*H");
    const MultiPoly e2 = P("6*H*lambda+2*lambda*delta-3*H*delta+4");
    MultiPoly res = resultant_value(e2, e1, Var::lambda);
    PolyFraction substituted = e2.substitute(Var::lambda, PolyFraction(P("9/2*H-delta")));
    s.produced = res;
    s.expected = P("27*H^2-2*delta^2+4");
    s.scalar = Rational(1);
    s.ok = res == *s.expected && substituted == PolyFraction(*s.expected) &&
           res.degree_in(Var::H) == 2;
    s.detail = "resultant and direct substitution agree";
    cert.data.emplace_back("mean_curvature_degree", std::to_string(res.degree_in(Var::H)));
  }
  cert.steps.push_back(s);

  finish(cert);
  return cert;
}

}  // namespace bihar
