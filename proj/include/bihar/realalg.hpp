#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bihar/multipoly.hpp"

namespace bihar {

/// Dense univariate polynomial over Q; the working representation behind the
/// Sturm machinery. Coefficients run from degree 0 upward, trailing zeros
/// trimmed, so the zero polynomial is an empty vector.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  /// Requires p to involve no variable other than v.
  static UniPoly from_multipoly(const MultiPoly& p, Var v);
  MultiPoly to_multipoly(Var v) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return evaluate(x).sign(); }
  UniPoly derivative() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  /// Euclidean division; o must be nonzero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& o) const;
  /// Quotient of an exact division; throws std::invalid_argument on a
  /// nonzero remainder.
  UniPoly divide_exact(const UniPoly& o) const;

  /// Scaled to coprime integer coefficients with positive leading coefficient.
  UniPoly primitive() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b);  // primitive, positive leading
UniPoly squarefree_part(const UniPoly& p);            // p / gcd(p, p'), primitive

/// Yun decomposition: element i (0-based) is the primitive factor whose roots
/// have multiplicity i+1 in p; constant placeholders fill unused slots.
/// The product of factor^(i+1) recovers p up to a rational scale.
std::vector<UniPoly> yun_decomposition(const UniPoly& p);

/// Sturm chain of the squarefree part of a univariate polynomial.
struct SturmChain {
  Var var;
  MultiPoly squarefree;           // primitive squarefree part of the input
  std::vector<MultiPoly> chain;   // chain[0] is `squarefree`

  /// p must be nonzero and univariate in v (constants allowed).
  static SturmChain build(const MultiPoly& p, Var v);

  int variations_at(const Rational& x) const;
  int variations_at_neg_infinity() const;
  int variations_at_pos_infinity() const;
};

/// Number of distinct real roots of p in I, honoring endpoint openness.
/// p must be nonzero and univariate in v.
int count_real_roots(const MultiPoly& p, Var v, const RationalInterval& I);

struct IsolatedRoot {
  /// Open finite interval; the squarefree part changes sign across it and
  /// has exactly this one root inside.
  RationalInterval interval;
  unsigned multiplicity;
};

struct RootIsolation {
  Var var;
  MultiPoly squarefree;
  std::vector<IsolatedRoot> roots;  // ascending, pairwise disjoint
};

/// Isolating intervals with multiplicities for every root of p in I.
RootIsolation isolate_roots(const MultiPoly& p, Var v, const RationalInterval& I);

/// Shrinks an isolating interval below max_width by bisection, preserving the
/// sign change. iso must be bounded with a strict sign change of the
/// squarefree part of p across it and exactly one root inside.
RationalInterval refine_root(const MultiPoly& p, Var v, const RationalInterval& iso,
                             const Rational& max_width);

enum class CertificateKind {
  no_roots_sample,        // zero roots in the region plus one positive sample
  negative_discriminant,  // quadratic, positive leading, negative discriminant
  square_decomposition,   // explicit weighted sum of squares
};

/// A checkable witness. Everything needed to re-verify the claim is stored;
/// validate_* recomputes from scratch.
struct PositivityCertificate {
  CertificateKind kind;
  Var var;
  RationalInterval region = RationalInterval::whole();
  std::optional<Rational> sample, sample_value;        // no_roots_sample
  std::optional<Rational> leading, discriminant;       // negative_discriminant
  std::vector<std::pair<Rational, MultiPoly>> squares; // square_decomposition
  std::string describe() const;
};

/// Certificate that p > 0 everywhere on I, or nullopt when p is not.
/// p must be nonzero and univariate in v; I must be nonempty.
std::optional<PositivityCertificate> certify_positive(const MultiPoly& p, Var v,
                                                      const RationalInterval& I);
bool validate_positive(const PositivityCertificate& cert, const MultiPoly& p, Var v,
                       const RationalInterval& I);

/// Positive-semidefiniteness of a binary quadratic form a*x^2 + b*x*y + c*y^2
/// as an explicit square decomposition; nullopt when the form is not PSD.
/// q must be exactly such a form over constants.
std::optional<PositivityCertificate> quadratic_form_psd(const MultiPoly& q, Var x, Var y);
bool validate_psd(const PositivityCertificate& cert, const MultiPoly& q);

}  // namespace bihar
