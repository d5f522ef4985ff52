#include "bihar/framecalc.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "bihar/derivation.hpp"

namespace bihar {

namespace {

MultiPoly P(std::string_view text) { return MultiPoly::parse(text); }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

MultiPoly dot(const std::vector<MultiPoly>& a, const std::vector<Rational>& b) {
  MultiPoly s;
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

std::vector<Rational> apply_phi(const Frame& f, const std::vector<Rational>& v) {
  std::vector<Rational> out(f.size(), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) out[i] = out[i] + f.phi(i, j) * v[j];
  return out;
}

std::vector<MultiPoly> apply_shape(const ShapeTemplate& a, const std::vector<Rational>& v) {
  std::vector<MultiPoly> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i] = out[i] + a.at(i, j) * v[j];
  return out;
}

std::vector<Rational> basis_vector(const Frame& f, std::string_view label) {
  std::vector<Rational> v(f.size(), Rational(0));
  v[f.index_of(label)] = Rational(1);
  return v;
}

}  // namespace

Frame Frame::make(std::vector<std::string> labels, std::size_t xi_index,
                  std::vector<std::vector<Rational>> phi) {
  const std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("frame needs at least one label");
  if (xi_index >= n) throw std::invalid_argument("structure index out of range");
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty() || !seen.insert(l).second)
      throw std::invalid_argument("frame labels must be distinct and nonempty");
  }
  if (phi.size() != n) throw std::invalid_argument("phi must be square of frame size");
  for (const auto& row : phi)
    if (row.size() != n) throw std::invalid_argument("phi must be square of frame size");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (phi[i][j] != -phi[j][i]) throw std::invalid_argument("phi is not skew-symmetric");
  for (std::size_t i = 0; i < n; ++i)
    if (phi[i][xi_index] != Rational(0))
      throw std::invalid_argument("phi must annihilate the structure direction");
  // phi^2 = -Id + xi xi^T, entrywise.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc(0);
      for (std::size_t k = 0; k < n; ++k) acc = acc + phi[i][k] * phi[k][j];
      Rational want = (i == j) ? Rational(-1) : Rational(0);
      if (i == xi_index && j == xi_index) want = Rational(0);
      if (acc != want) throw std::invalid_argument("phi^2 != -Id + xi xi^T");
    }
  }

  Frame f;
  f.labels_ = std::move(labels);
  f.xi_ = xi_index;
  f.phi_ = std::move(phi);
  return f;
}

Frame Frame::hopf_gradient() {
  const Rational z(0), one(1);
  // phi(e1) = e2, phi(e2) = -e1, phi(xi) = 0.
  return make({"e1", "e2", "xi"}, 2,
              {{z, -one, z},
               {one, z, z},
               {z, z, z}});
}

Frame Frame::ruled(unsigned n) {
  if (n < 2) throw std::invalid_argument("ruled frame needs n >= 2");
  std::vector<std::string> labels = {"xi", "U", "phiU"};
  for (unsigned k = 1; k + 1 < n; ++k) {
    labels.push_back("X" + std::to_string(k));
    labels.push_back("phiX" + std::to_string(k));
  }
  const std::size_t dim = labels.size();
  std::vector<std::vector<Rational>> phi(dim, std::vector<Rational>(dim, Rational(0)));
  // Each pair (v, phiv) sits at indices (p, p+1): phi(v) = phiv, phi(phiv) = -v.
  for (std::size_t p = 1; p + 1 < dim; p += 2) {
    phi[p + 1][p] = Rational(1);
    phi[p][p + 1] = Rational(-1);
  }
  return make(std::move(labels), 0, std::move(phi));
}

std::size_t Frame::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("unknown frame label: " + std::string(label));
}

ShapeTemplate ShapeTemplate::make(std::vector<std::vector<MultiPoly>> entries) {
  const std::size_t n = entries.size();
  for (const auto& row : entries)
    if (row.size() != n) throw std::invalid_argument("shape template must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(entries[i][j] == entries[j][i]))
        throw std::invalid_argument("shape template must be symmetric");
  ShapeTemplate s;
  s.entries_ = std::move(entries);
  return s;
}

ShapeTemplate ShapeTemplate::zero(std::size_t size) {
  return make(std::vector<std::vector<MultiPoly>>(size, std::vector<MultiPoly>(size)));
}

ShapeTemplate ShapeTemplate::diagonal(std::vector<MultiPoly> diag) {
  auto s = zero(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) s.entries_[i][i] = std::move(diag[i]);
  return s;
}

ShapeTemplate ShapeTemplate::hopf_gradient() {
  return diagonal({P("-3/2*H"), P("lambda"), P("delta")});
}

ShapeTemplate ShapeTemplate::ruled(std::size_t size) {
  if (size < 2) throw std::invalid_argument("ruled template needs size >= 2");
  auto s = zero(size);
  s.entries_[0][0] = P("alpha");
  s.entries_[0][1] = P("beta");
  s.entries_[1][0] = P("beta");
  return s;
}

MultiPoly ShapeTemplate::trace() const {
  MultiPoly t;
  for (std::size_t i = 0; i < size(); ++i) t = t + at(i, i);
  return t;
}

MultiPoly gauss_component(const Frame& frame, const ShapeTemplate& shape, std::string_view x,
                          std::string_view y, std::string_view z, std::string_view w) {
  if (shape.size() != frame.size())
    throw std::invalid_argument("shape template does not match frame size");
  const auto vx = basis_vector(frame, x);
  const auto vy = basis_vector(frame, y);
  const auto vz = basis_vector(frame, z);
  const auto vw = basis_vector(frame, w);
  const auto px = apply_phi(frame, vx);
  const auto py = apply_phi(frame, vy);
  const auto pz = apply_phi(frame, vz);
  const auto ax = apply_shape(shape, vx);
  const auto ay = apply_shape(shape, vy);

  MultiPoly value = MultiPoly::constant(dot(vy, vz) * dot(vx, vw) - dot(vx, vz) * dot(vy, vw) +
                                        dot(py, vz) * dot(px, vw) - dot(px, vz) * dot(py, vw) -
                                        Rational(2) * dot(px, vy) * dot(pz, vw));
  value = value + dot(ay, vz) * dot(ax, vw) - dot(ax, vz) * dot(ay, vw);
  return value;
}

bool hopf_test(const ShapeTemplate& shape, const Frame& frame,
               std::vector<std::string>* obstructions) {
  if (shape.size() != frame.size())
    throw std::invalid_argument("shape template does not match frame size");
  bool hopf = true;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (i == frame.xi_index()) continue;
    const MultiPoly& entry = shape.at(i, frame.xi_index());
    if (!entry.is_zero()) {
      hopf = false;
      if (obstructions) obstructions->push_back(frame.labels()[i] + ": " + entry.str());
    }
  }
  return hopf;
}

MeanCurvature trace_and_H(const ShapeTemplate& shape, unsigned n) {
  if (n < 2) throw std::invalid_argument("ambient dimension needs n >= 2");
  MeanCurvature mc;
  mc.trace = shape.trace();
  mc.mean = mc.trace * Rational(1, 2 * static_cast<long>(n) - 1);
  return mc;
}

RuledScenario ruled_scenario(unsigned n) {
  RuledScenario rs;
  rs.n = n;
  const Frame frame = Frame::ruled(n);
  const ShapeTemplate shape = ShapeTemplate::ruled(frame.size());

  rs.gauss_value = gauss_component(frame, shape, "phiU", "xi", "U", "phiU");
  const Frame sub = Frame::ruled(2);
  rs.subframe_value = gauss_component(sub, ShapeTemplate::ruled(sub.size()),
                                      "phiU", "xi", "U", "phiU");

  // Connection side alpha(2beta - 1/beta), cleared by the nonvanishing beta:
  // with N/D the reduced fraction, the branch equation is N - gauss * D.
  const PolyFraction connection =
      PolyFraction(P("alpha")) *
      (PolyFraction(P("2*beta")) - PolyFraction(MultiPoly::constant(1), P("beta")));
  if (!(connection.den() == P("beta"))) {
    rs.detail = "branch equation failed to clear the beta denominator";
    return rs;
  }
  rs.equation = connection.num() - rs.gauss_value * connection.den();

  rs.accepted_branch = P("alpha");
  rs.rejected_branch = P("2*beta^2-1");
  const bool splits = rs.equation == rs.accepted_branch * rs.rejected_branch;

  // On the rejected branch beta^2 is the constant 1/2, so every derivative of
  // beta vanishes; but the phiU-derivative image beta^2+1 evaluates there to a
  // nonzero constant, which is the contradiction witness.
  const MultiPoly image = rewrite_even_beta(P("beta^2+1"));
  rs.rejection_witness = image.substitute(Var::B, MultiPoly::constant(Rational(1, 2))).constant_term();

  rs.mean_curvature = trace_and_H(shape, n).mean;
  const bool minimal = rs.mean_curvature.substitute(Var::alpha, MultiPoly::zero()).is_zero();

  rs.ok = rs.gauss_value.is_zero() && rs.subframe_value == rs.gauss_value && splits &&
          rs.rejection_witness != Rational(0) && minimal;
  if (rs.ok) {
    rs.verdict = "minimal";
    rs.detail = "curvature component vanishes termwise; alpha = 0 is the only surviving branch";
  } else if (!rs.gauss_value.is_zero()) {
    rs.detail = "curvature component expected to vanish; discrepancy " + rs.gauss_value.str();
  } else {
    rs.detail = "branch bookkeeping failed";
  }
  return rs;
}

}  // namespace bihar
