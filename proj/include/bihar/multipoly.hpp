#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bihar/exact.hpp"

namespace bihar {

/// The fixed variable alphabet. Every polynomial in the kernel lives in
/// Q[alpha..c]; there is no dynamic variable registry.
enum class Var : unsigned char {
  alpha, beta, gamma, delta, lambda, mu, H, d, X, B, t, c
};

inline constexpr std::size_t kVarCount = 12;
inline constexpr std::array<Var, kVarCount> kAllVars = {
    Var::alpha, Var::beta, Var::gamma, Var::delta, Var::lambda, Var::mu,
    Var::H, Var::d, Var::X, Var::B, Var::t, Var::c};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Exponent vector over the fixed alphabet.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(Var v, std::uint16_t e = 1);

  std::uint16_t exponent(Var v) const { return e_[static_cast<std::size_t>(v)]; }
  unsigned total_degree() const;
  bool is_constant() const { return total_degree() == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;     // componentwise <=
  Monomial divide(const Monomial& o) const;  // requires o.divides(*this)
  Monomial with(Var v, std::uint16_t e) const;

  bool operator==(const Monomial& o) const = default;

 private:
  std::array<std::uint16_t, kVarCount> e_{};
};

/// Graded lexicographic order: higher total degree first; ties broken by the
/// precedence gamma > beta > alpha > d, then the remaining variables in
/// alphabet order. Returns <0, 0, >0 like a three-way comparison.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) > 0;
  }
};

class PolyFraction;

/// Sparse multivariate polynomial over Q with grlex-ordered terms.
///
/// Terms map monomials to nonzero coefficients; begin() is the leading term.
/// The zero polynomial has no terms.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  MultiPoly() = default;
  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(Rational c);
  static MultiPoly variable(Var v);
  static MultiPoly term(Rational c, const Monomial& m);

  /// Parses the expression grammar: alphabet variable names, integer or p/q
  /// coefficients, + - * ^, parentheses; whitespace-insensitive. Throws
  /// ParseError with the offending position.
  static MultiPoly parse(std::string_view text);
  /// Canonical rendering: terms in descending grlex order, variables within a
  /// monomial in alphabet order. parse(str(p)) == p bit-exactly.
  std::string str() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  unsigned total_degree() const;      // 0 for the zero polynomial
  unsigned degree_in(Var v) const;    // 0 for the zero polynomial
  const Monomial& leading_monomial() const;     // requires nonzero
  const Rational& leading_coefficient() const;  // requires nonzero
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial()); }
  std::set<Var> variables() const;
  bool depends_on(Var v) const { return degree_in(v) > 0; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& s) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly derivative(Var v) const;

  /// Coefficients of *this viewed as a univariate polynomial in v; index i is
  /// the coefficient of v^i (a polynomial in the remaining variables). The
  /// zero polynomial yields {}.
  std::vector<MultiPoly> coefficients_in(Var v) const;
  static MultiPoly from_coefficients_in(Var v, const std::vector<MultiPoly>& coeffs);

  /// Substitute a rational function for v; exact, returns numerator/denominator.
  PolyFraction substitute(Var v, const PolyFraction& value) const;
  /// Substitute a polynomial for v.
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  /// Flip the sign of v (v -> -v); cheap, used for parity checks.
  MultiPoly negate_var(Var v) const;

  /// Full evaluation. Every variable occurring in the polynomial must be
  /// assigned; anything else throws std::invalid_argument.
  Rational evaluate(const std::map<Var, Rational>& point) const;

 private:
  void add_term(const Monomial& m, const Rational& c);  // drops zero results
  TermMap terms_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

/// content * primitive == the input; primitive has coprime integer
/// coefficients and positive leading coefficient under the grlex order.
struct ContentPrimitive {
  Rational content;
  MultiPoly primitive;
};
ContentPrimitive content_primitive(const MultiPoly& p);  // rejects the zero polynomial

/// Quotient when q divides p exactly over Q[vars]; nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q);

/// The scalar s with p == s*q when p and q agree up to a nonzero rational
/// factor; nullopt when they do not (or when exactly one is zero).
/// Two zero polynomials are proportional with scalar 1.
std::optional<Rational> proportional(const MultiPoly& p, const MultiPoly& q);

/// Pseudo-remainder of p by q with respect to v: the R with
/// lc_v(q)^(deg p - deg q + 1) * p = Q*q + R and deg_v R < deg_v q.
/// Requires q nonzero with deg_v q <= deg_v p.
MultiPoly pseudo_remainder(const MultiPoly& p, const MultiPoly& q, Var v);

/// Resultant of p and q with respect to v; both must be nonzero. The
/// convention is fixed by Res_v(x-a, x-b) = b-a. Computed by the
/// subresultant pseudo-remainder sequence.
MultiPoly resultant_value(const MultiPoly& p, const MultiPoly& q, Var v);

/// The same value computed independently as a fraction-free (Bareiss)
/// determinant of the Sylvester matrix. Slower; kept as an oracle.
MultiPoly sylvester_resultant_value(const MultiPoly& p, const MultiPoly& q, Var v);

/// value == scale * poly with poly content-normalized (zero is {0, 0}).
struct ScaledPoly {
  Rational scale;
  MultiPoly poly;
};
ScaledPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v);
ScaledPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, Var v);

/// Quotient of two polynomials, den nonzero. Normalized so the denominator is
/// primitive with positive leading coefficient; a zero numerator forces
/// denominator 1. Equality cross-multiplies, so equal values compare equal
/// even when represented with different common factors.
class PolyFraction {
 public:
  PolyFraction() : num_(), den_(MultiPoly::constant(1)) {}
  PolyFraction(MultiPoly num, MultiPoly den);
  PolyFraction(const MultiPoly& p) : PolyFraction(p, MultiPoly::constant(1)) {}
  PolyFraction(const Rational& c) : PolyFraction(MultiPoly::constant(c)) {}

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  PolyFraction operator-() const;
  PolyFraction operator+(const PolyFraction& o) const;
  PolyFraction operator-(const PolyFraction& o) const;
  PolyFraction operator*(const PolyFraction& o) const;
  PolyFraction operator/(const PolyFraction& o) const;  // o nonzero
  bool operator==(const PolyFraction& o) const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  MultiPoly to_polynomial() const;  // requires is_polynomial()

  /// Reduce by the univariate polynomial gcd when both parts depend on a
  /// single common variable only; otherwise just content-normalize.
  PolyFraction reduced() const;

  std::string str() const;

 private:
  MultiPoly num_, den_;
};

}  // namespace bihar
