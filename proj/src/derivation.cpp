#include "bihar/derivation.hpp"

#include <stdexcept>

namespace bihar {
namespace {

MultiPoly P(std::string_view s) { return MultiPoly::parse(s); }

}  // namespace

DerivationContext DerivationContext::make(MuCase mu_case) {
  DerivationContext ctx;
  ctx.case_ = mu_case;
  ctx.mu_ = mu_case == MuCase::one ? P("-1/3*(alpha+gamma)") : P("d-alpha-gamma");

  const MultiPoly d_alpha_raw = P("beta*(alpha+gamma-3*mu)");
  const MultiPoly d_beta_raw = P("beta^2+gamma^2+mu*(alpha-2*gamma)+1");
  const MultiPoly beta_d_gamma_raw =
      P("(gamma-mu)*(gamma^2-alpha*gamma-1)+beta^2*(2*gamma+mu)");

  ctx.d_alpha_ = d_alpha_raw.substitute(Var::mu, ctx.mu_);
  ctx.d_beta_ = d_beta_raw.substitute(Var::mu, ctx.mu_);
  ctx.beta_d_gamma_ = beta_d_gamma_raw.substitute(Var::mu, ctx.mu_);
  return ctx;
}

MultiPoly DerivationContext::phi_derive(const MultiPoly& p) const {
  if (!even_in_beta(p))
    throw std::invalid_argument("phi_derive requires even beta-parity");
  if (p.depends_on(Var::B))
    throw std::invalid_argument("phi_derive input contains the beta-square stand-in");
  MultiPoly beta = MultiPoly::variable(Var::beta);
  // beta*D(p) = beta*p_alpha*D(alpha) + beta*p_beta*D(beta)
  //           + p_gamma*(beta*D(gamma)); the trace constant d is killed by D.
  return beta * (p.derivative(Var::alpha) * d_alpha_ + p.derivative(Var::beta) * d_beta_) +
         p.derivative(Var::gamma) * beta_d_gamma_;
}

bool even_in_beta(const MultiPoly& p) {
  for (const auto& [mono, coeff] : p.terms()) {
    (void)coeff;
    if (mono.exponent(Var::beta) % 2 != 0) return false;
  }
  return true;
}

MultiPoly rewrite_even_beta(const MultiPoly& p) {
  MultiPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    unsigned e = mono.exponent(Var::beta);
    if (e % 2 != 0)
      throw std::invalid_argument("rewrite_even_beta requires even beta-parity");
    Monomial m = mono.with(Var::beta, 0)
                     .with(Var::B, static_cast<std::uint16_t>(mono.exponent(Var::B) + e / 2));
    out = out + MultiPoly::term(coeff, m);
  }
  return out;
}

namespace {

// The root of a polynomial that is linear in B with a constant leading
// coefficient, as a polynomial (the division by the constant is exact over Q).
std::optional<MultiPoly> linear_b_root(const MultiPoly& p) {
  if (p.degree_in(Var::B) != 1) return std::nullopt;
  std::vector<MultiPoly> coeffs = p.coefficients_in(Var::B);
  if (!coeffs[1].is_constant()) return std::nullopt;
  Rational lead = coeffs[1].constant_term();
  return coeffs[0] * (-lead.reciprocal());
}

}  // namespace

std::optional<MultiPoly> eliminate_beta_substitution(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly pb = rewrite_even_beta(p), qb = rewrite_even_beta(q);
  auto try_pair = [](const MultiPoly& linear, const MultiPoly& other) -> std::optional<MultiPoly> {
    auto root = linear_b_root(linear);
    if (!root) return std::nullopt;
    PolyFraction image = other.substitute(Var::B, PolyFraction(*root));
    return image.num();  // denominator is the constant 1 after normalization
  };
  if (auto r = try_pair(pb, qb)) return r;
  return try_pair(qb, pb);
}

MultiPoly eliminate_beta_resultant(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly pb = rewrite_even_beta(p), qb = rewrite_even_beta(q);
  if (!pb.depends_on(Var::B) && !qb.depends_on(Var::B))
    throw std::invalid_argument("neither input involves beta");
  return resultant_value(pb, qb, Var::B);
}

BetaElimination eliminate_beta(const MultiPoly& p, const MultiPoly& q) {
  MultiPoly res = eliminate_beta_resultant(p, q);
  std::optional<MultiPoly> sub = eliminate_beta_substitution(p, q);

  BetaElimination out;
  if (res.is_zero()) {
    out.eliminant = MultiPoly::zero();
    out.resultant_scale = Rational(0);
    if (sub) {
      if (!sub->is_zero())
        throw std::logic_error("beta elimination routes disagree on vanishing");
      out.substitution_scale = Rational(0);
    }
    return out;
  }

  auto [content, primitive] = content_primitive(res);
  out.eliminant = primitive;
  out.resultant_scale = content;
  if (sub) {
    auto scale = proportional(*sub, out.eliminant);
    if (!scale)
      throw std::logic_error("beta elimination routes disagree");
    out.substitution_scale = *scale;
  }
  return out;
}

}  // namespace bihar
