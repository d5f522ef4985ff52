#pragma once

#include <optional>

#include "bihar/multipoly.hpp"

namespace bihar {

/// The two closures of the auxiliary curvature mu in the two-curvature
/// analysis: on the set where the gradient factor vanishes mu is forced to
/// -(alpha+gamma)/3, and in the constant-trace regime mu = d - alpha - gamma
/// with d the (nonzero) trace constant.
enum class MuCase { one = 1, two = 2 };

/// Derivative along the distinguished tangent direction, specialized to one
/// mu closure. The raw images are
///   D(alpha) = beta*(alpha+gamma-3*mu)
///   D(beta)  = beta^2+gamma^2+mu*(alpha-2*gamma)+1
///   D(gamma) = (gamma-mu)*(gamma^2-alpha*gamma-1)/beta + beta*(2*gamma+mu)
///   D(d)     = 0
/// with mu replaced by its closure; the only denominator is a bare beta.
class DerivationContext {
 public:
  static DerivationContext make(MuCase mu_case);

  MuCase mu_case() const { return case_; }
  const MultiPoly& mu_image() const { return mu_; }
  const MultiPoly& d_alpha() const { return d_alpha_; }
  const MultiPoly& d_beta() const { return d_beta_; }
  /// beta * D(gamma), which is polynomial.
  const MultiPoly& beta_d_gamma() const { return beta_d_gamma_; }

  /// beta * D(p) for a polynomial p in alpha, beta, gamma, d. Requires p to
  /// be even in beta (only even powers) and free of the stand-in B; the
  /// result is again polynomial and even in beta.
  MultiPoly phi_derive(const MultiPoly& p) const;

 private:
  MuCase case_;
  MultiPoly mu_, d_alpha_, d_beta_, beta_d_gamma_;
};

/// True when every monomial carries an even power of beta.
bool even_in_beta(const MultiPoly& p);

/// beta^(2k) -> B^k. Requires even parity in beta; any B exponents already
/// present are added to.
MultiPoly rewrite_even_beta(const MultiPoly& p);

/// Eliminant of B between the B-rewrites of two beta-even polynomials,
/// computed twice: by the subresultant route, and (whenever one input is
/// linear in B with a constant leading coefficient) by substituting the
/// linear root and clearing denominators. Throws std::logic_error when the
/// two routes disagree up to a nonzero rational factor.
struct BetaElimination {
  MultiPoly eliminant;  // content-normalized; zero when the inputs share a root
  Rational resultant_scale;                    // Res_B == scale * eliminant
  std::optional<Rational> substitution_scale;  // cleared root image == scale * eliminant
};

BetaElimination eliminate_beta(const MultiPoly& p, const MultiPoly& q);

/// The individual routes, exposed so tests can cross-check them directly.
/// Substitution returns nullopt when neither input is linear in B with a
/// constant leading coefficient. Both take beta-even inputs.
std::optional<MultiPoly> eliminate_beta_substitution(const MultiPoly& p, const MultiPoly& q);
MultiPoly eliminate_beta_resultant(const MultiPoly& p, const MultiPoly& q);

}  // namespace bihar
