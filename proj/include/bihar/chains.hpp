#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihar/derivation.hpp"
#include "bihar/realalg.hpp"

namespace bihar {

/// 2*l1*l2 - (l1+l2)*delta - 2: vanishes exactly on the curvature pairs a
/// Hopf hypersurface admits on the orthogonal complement of the structure
/// direction (whose own curvature is delta).
PolyFraction hopf_relation(const PolyFraction& l1, const PolyFraction& l2,
                           const PolyFraction& delta);

/// Eigenvalue forced on the gradient direction by the tangential biharmonic
/// equation: -(2n-1)/2 * H.
MultiPoly gradient_eigenvalue(unsigned n);

/// One replayed derivation step. `produced` is the content-normalized
/// artifact; `scalar` relates the raw computation to `expected` (raw ==
/// scalar * expected) whenever a closed comparand exists; `cofactor` holds a
/// split-off factor where a factorization happened.
struct ChainStep {
  std::string name;
  std::string anchor;
  MultiPoly produced;
  std::optional<MultiPoly> expected;
  std::optional<Rational> scalar;
  std::optional<MultiPoly> cofactor;
  bool ok = false;
  std::string detail;
};

struct ChainCertificate {
  std::string id;
  std::vector<ChainStep> steps;
  bool ok = false;  // conjunction over the steps
  std::vector<std::pair<std::string, std::string>> data;

  const ChainStep* find(std::string_view name) const;
};

/// Replays the branch where the gradient factor vanishes: the mu closure
/// turns the curvature relation into a polynomial constraint, two derivative
/// passes and two eliminations force a constant-coefficient equation for
/// alpha, and the closure then collapses to beta = 0.
ChainCertificate chain_case1();

/// Replays the constant-trace branch: same engine with mu = d - alpha -
/// gamma, the derived tail recorded (its explicit coefficients are engine
/// artifacts), a pointwise oracle in Q[beta]/(beta^2 - B0) revalidating the
/// derivative images, and the positivity step that closes the argument.
ChainCertificate chain_case2(unsigned d_samples = 5, std::uint64_t seed = 0xB1A4);

/// The elimination behind the constancy of H on a Hopf surface whose
/// gradient direction carries eigenvalue -(3/2)H: trace and curvature-pair
/// relations in lambda reduce to 27H^2 - 2 delta^2 + 4 = 0.
ChainCertificate thm1_elimination();

}  // namespace bihar
