#include "bihar/realalg.hpp"

#include <algorithm>
#include <cassert>

namespace bihar {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, Var v) {
  std::vector<Rational> out(p.is_zero() ? 0 : p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m.with(v, 0);
    if (!rest.is_constant())
      throw std::invalid_argument("polynomial is not univariate in the requested variable");
    out[m.exponent(v)] = c;
  }
  return UniPoly(std::move(out));
}

MultiPoly UniPoly::to_multipoly(Var v) const {
  MultiPoly p;
  for (std::size_t i = 0; i < c_.size(); ++i)
    p = p + MultiPoly::term(c_[i], Monomial::var(v, static_cast<std::uint16_t>(i)));
  return p;
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(long(i));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c_.size()) out[i] += c_[i];
    if (i < o.c_.size()) out[i] += o.c_[i];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& o) const {
  if (o.is_zero()) throw DivisionByZeroError();
  std::vector<Rational> q(c_.size() > o.c_.size() ? c_.size() - o.c_.size() + 1 : 1);
  UniPoly r = *this;
  while (!r.is_zero() && r.degree() >= o.degree()) {
    std::size_t k = std::size_t(r.degree() - o.degree());
    Rational f = r.leading() / o.leading();
    q[k] = f;
    std::vector<Rational> sub(r.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) sub[k + i] = f * o.c_[i];
    r = r - UniPoly(std::move(sub));
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::divide_exact(const UniPoly& o) const {
  auto [q, r] = divmod(o);
  if (!r.is_zero()) throw std::invalid_argument("division is not exact");
  return q;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  auto cp = content_primitive(to_multipoly(Var::X));
  return from_multipoly(cp.primitive, Var::X);
}

UniPoly uni_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second.primitive();  // positive scaling keeps the gcd
    x = y;
    y = r;
  }
  return x.primitive();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  if (p.is_constant()) return p.primitive();
  UniPoly g = uni_gcd(p, p.derivative());
  return p.divide_exact(g).primitive();
}

std::vector<UniPoly> yun_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("decomposition of the zero polynomial");
  std::vector<UniPoly> out;
  if (p.is_constant()) return out;
  UniPoly f = p.primitive();
  UniPoly g = uni_gcd(f, f.derivative());
  if (g.is_constant()) {
    out.push_back(f);
    return out;
  }
  UniPoly w = f.divide_exact(g);
  UniPoly y = f.derivative().divide_exact(g);
  UniPoly z = y - w.derivative();
  while (true) {
    UniPoly a = uni_gcd(w, z).primitive();
    out.push_back(a);
    w = w.divide_exact(a).primitive();
    if (w.is_constant()) break;
    y = z.divide_exact(a);
    z = y - w.derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sturm chains

namespace {

int sign_at_pos_inf(const UniPoly& p) {
  return p.is_zero() ? 0 : p.leading().sign();
}

int sign_at_neg_inf(const UniPoly& p) {
  if (p.is_zero()) return 0;
  return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
}

int count_variations(const std::vector<int>& signs) {
  int count = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Strips the magnitude of the content but keeps the sign: Sturm chain
// elements may only be rescaled by positive constants.
UniPoly positive_rescale(const UniPoly& p) {
  if (p.is_zero()) return p;
  UniPoly pr = p.primitive();
  return p.leading().sign() < 0 ? -pr : pr;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& s) {
  std::vector<UniPoly> chain = {s};
  if (s.is_constant()) return chain;
  chain.push_back(positive_rescale(s.derivative()));
  while (!chain.back().is_zero() && !chain.back().is_constant()) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    UniPoly r = positive_rescale(-(a.divmod(b).second));
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

struct Chain {
  UniPoly squarefree;
  std::vector<UniPoly> seq;

  static Chain of(const UniPoly& p) {
    Chain c;
    c.squarefree = squarefree_part(p);
    c.seq = sturm_sequence(c.squarefree);
    return c;
  }

  int variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& q : seq) signs.push_back(q.sign_at(x));
    return count_variations(signs);
  }
  int variations_neg_inf() const {
    std::vector<int> signs;
    for (const auto& q : seq) signs.push_back(sign_at_neg_inf(q));
    return count_variations(signs);
  }
  int variations_pos_inf() const {
    std::vector<int> signs;
    for (const auto& q : seq) signs.push_back(sign_at_pos_inf(q));
    return count_variations(signs);
  }
};

UniPoly deflate(const UniPoly& p, const Rational& root) {
  UniPoly lin({-root, Rational(1)});
  return p.divide_exact(lin);
}

// Distinct roots of the squarefree s in the open interval cut out by the
// optional endpoints. Endpoints must not be roots.
int open_interval_count(const UniPoly& s, const std::optional<Rational>& lo,
                        const std::optional<Rational>& hi) {
  if (s.is_constant()) return 0;
  Chain c;
  c.squarefree = s;
  c.seq = sturm_sequence(s);
  int va = lo ? c.variations_at(*lo) : c.variations_neg_inf();
  int vb = hi ? c.variations_at(*hi) : c.variations_pos_inf();
  return va - vb;
}

}  // namespace

SturmChain SturmChain::build(const MultiPoly& p, Var v) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  Chain c = Chain::of(UniPoly::from_multipoly(p, v));
  SturmChain out;
  out.var = v;
  out.squarefree = c.squarefree.to_multipoly(v);
  for (const auto& q : c.seq) out.chain.push_back(q.to_multipoly(v));
  return out;
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  for (const auto& q : chain)
    signs.push_back(UniPoly::from_multipoly(q, var).sign_at(x));
  return count_variations(signs);
}

int SturmChain::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain)
    signs.push_back(sign_at_neg_inf(UniPoly::from_multipoly(q, var)));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain)
    signs.push_back(sign_at_pos_inf(UniPoly::from_multipoly(q, var)));
  return count_variations(signs);
}

int count_real_roots(const MultiPoly& p, Var v, const RationalInterval& I) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (I.empty()) return 0;
  UniPoly u = UniPoly::from_multipoly(p, v);
  UniPoly s = squarefree_part(u);
  if (s.is_constant()) return 0;

  if (I.bounded() && I.lo() == I.hi())  // the point interval [r, r]
    return s.sign_at(I.lo()) == 0 ? 1 : 0;

  UniPoly interior = s;
  int at_endpoints = 0;
  std::optional<Rational> lo, hi;
  if (!I.lo_infinite()) {
    lo = I.lo();
    if (s.sign_at(*lo) == 0) {
      interior = deflate(interior, *lo);
      if (!I.lo_open()) ++at_endpoints;
    }
  }
  if (!I.hi_infinite()) {
    hi = I.hi();
    if (s.sign_at(*hi) == 0) {
      interior = deflate(interior, *hi);
      if (!I.hi_open()) ++at_endpoints;
    }
  }
  return open_interval_count(interior, lo, hi) + at_endpoints;
}

// ---------------------------------------------------------------------------
// isolation

namespace {

Rational cauchy_bound(const UniPoly& s) {
  Rational m(0);
  for (int i = 0; i < s.degree(); ++i) {
    Rational q = (s[std::size_t(i)] / s.leading()).abs();
    if (q > m) m = q;
  }
  return m + Rational(1);
}

// A point strictly between a and b that is not a root of s. The midpoint
// works except when it happens to be a root, in which case nearby offsets
// are probed; only finitely many points in (a, b) can be roots.
Rational non_root_between(const UniPoly& s, const Rational& a, const Rational& b) {
  Rational mid = (a + b) * Rational(1, 2);
  if (s.sign_at(mid) != 0) return mid;
  Rational step = (b - a) * Rational(1, 8);
  for (;;) {
    Rational cand = mid + step;
    if (cand < b && s.sign_at(cand) != 0) return cand;
    step = step * Rational(1, 2);
  }
}

void bisect_collect(const UniPoly& s, const Rational& a, const Rational& b,
                    std::vector<RationalInterval>& out) {
  int k = open_interval_count(s, a, b);
  if (k == 0) return;
  if (k == 1) {
    out.push_back(RationalInterval::open(a, b));
    return;
  }
  Rational m = non_root_between(s, a, b);
  bisect_collect(s, a, m, out);
  bisect_collect(s, m, b, out);
}

// Shrinks a symmetric interval around a known root r of s until it isolates
// and s is nonzero at both ends; the result lies inside (r - w0, r + w0).
RationalInterval isolate_around(const UniPoly& s, const Rational& r, Rational w0) {
  Rational w = w0 * Rational(1, 2);
  for (;;) {
    Rational a = r - w, b = r + w;
    if (s.sign_at(a) != 0 && s.sign_at(b) != 0 && open_interval_count(s, a, b) == 1)
      return RationalInterval::open(a, b);
    w = w * Rational(1, 2);
  }
}

RationalInterval shrink_step(const UniPoly& s, const RationalInterval& J) {
  const Rational& a = J.lo();
  const Rational& b = J.hi();
  Rational m = (a + b) * Rational(1, 2);
  int sm = s.sign_at(m);
  if (sm == 0) return isolate_around(s, m, (b - a) * Rational(1, 4));
  if (s.sign_at(a) * sm < 0) return RationalInterval::open(a, m);
  return RationalInterval::open(m, b);
}

}  // namespace

RootIsolation isolate_roots(const MultiPoly& p, Var v, const RationalInterval& I) {
  if (p.is_zero()) throw std::invalid_argument("isolation of the zero polynomial");
  UniPoly u = UniPoly::from_multipoly(p, v);
  UniPoly s = squarefree_part(u);

  RootIsolation out;
  out.var = v;
  out.squarefree = s.to_multipoly(v);
  if (s.is_constant() || I.empty()) return out;

  Rational bound = cauchy_bound(s);
  Rational lo = (!I.lo_infinite() && I.lo() > -bound) ? I.lo() : -bound;
  Rational hi = (!I.hi_infinite() && I.hi() < bound) ? I.hi() : bound;
  if (lo > hi) return out;

  std::vector<RationalInterval> intervals;

  // Roots sitting exactly on included finite endpoints are isolated first.
  Rational w0 = (hi > lo) ? (hi - lo) * Rational(1, 4) : Rational(1);
  if (!I.lo_infinite() && !I.lo_open() && s.sign_at(I.lo()) == 0)
    intervals.push_back(isolate_around(s, I.lo(), w0));
  if (!I.hi_infinite() && !I.hi_open() && s.sign_at(I.hi()) == 0 && !(I.bounded() && I.lo() == I.hi()))
    intervals.push_back(isolate_around(s, I.hi(), w0));

  // Interior pass over (lo, hi) with non-root endpoints.
  if (lo < hi) {
    Rational a = lo, b = hi;
    if (s.sign_at(a) == 0) {
      UniPoly reduced = deflate(s, a);
      Rational step = (b - a) * Rational(1, 4);
      for (;;) {
        Rational cand = a + step;
        if (s.sign_at(cand) != 0 && open_interval_count(reduced, a, cand) == 0) { a = cand; break; }
        step = step * Rational(1, 2);
      }
    }
    if (s.sign_at(b) == 0) {
      UniPoly reduced = deflate(s, b);
      Rational step = (b - a) * Rational(1, 4);
      for (;;) {
        Rational cand = b - step;
        if (cand > a && s.sign_at(cand) != 0 && open_interval_count(reduced, cand, b) == 0) { b = cand; break; }
        step = step * Rational(1, 2);
      }
    }
    if (a < b) bisect_collect(s, a, b, intervals);
  }

  // Make enclosures pairwise disjoint, then order them.
  std::sort(intervals.begin(), intervals.end(),
            [](const RationalInterval& x, const RationalInterval& y) { return x.lo() < y.lo(); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
      if (intervals[i].hi() > intervals[i + 1].lo()) {
        intervals[i] = shrink_step(s, intervals[i]);
        intervals[i + 1] = shrink_step(s, intervals[i + 1]);
        changed = true;
      }
    }
    if (changed)
      std::sort(intervals.begin(), intervals.end(),
                [](const RationalInterval& x, const RationalInterval& y) { return x.lo() < y.lo(); });
  }

  // Multiplicities via the Yun factors.
  auto factors = yun_decomposition(u);
  for (const auto& J : intervals) {
    unsigned mult = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].is_constant()) continue;
      if (open_interval_count(squarefree_part(factors[i]), J.lo(), J.hi()) == 1) {
        mult = static_cast<unsigned>(i + 1);
        break;
      }
    }
    if (mult == 0) throw std::logic_error("no multiplicity factor matched an isolated root");
    out.roots.push_back({J, mult});
  }
  return out;
}

RationalInterval refine_root(const MultiPoly& p, Var v, const RationalInterval& iso,
                             const Rational& max_width) {
  if (max_width.sign() <= 0) throw std::invalid_argument("width target must be positive");
  if (!iso.bounded()) throw std::invalid_argument("isolating interval must be bounded");
  UniPoly s = squarefree_part(UniPoly::from_multipoly(p, v));
  if (s.sign_at(iso.lo()) * s.sign_at(iso.hi()) >= 0)
    throw std::invalid_argument("interval does not show a sign change of the squarefree part");
  if (open_interval_count(s, iso.lo(), iso.hi()) != 1)
    throw std::invalid_argument("interval does not isolate a single root");

  RationalInterval J = RationalInterval::open(iso.lo(), iso.hi());
  while (J.width() > max_width) J = shrink_step(s, J);
  return J;
}

// ---------------------------------------------------------------------------
// positivity certificates

std::string PositivityCertificate::describe() const {
  switch (kind) {
    case CertificateKind::no_roots_sample:
      return "no roots in " + region.str() + ", sample " + sample->str() + " gives " +
             sample_value->str();
    case CertificateKind::negative_discriminant:
      return "leading coefficient " + leading->str() + " > 0, discriminant " +
             discriminant->str() + " < 0";
    case CertificateKind::square_decomposition: {
      std::string s = "sum of squares:";
      for (const auto& [w, f] : squares)
        s += " + " + w.str() + "*(" + f.str() + ")^2";
      return s;
    }
  }
  return "";
}

namespace {

Rational sample_point(const RationalInterval& I) {
  if (I.bounded()) return I.midpoint();
  if (!I.lo_infinite()) return I.lo() + Rational(1);
  if (!I.hi_infinite()) return I.hi() - Rational(1);
  return Rational(0);
}

// a, b, c of a quadratic with constant coefficients; nullopt when not one.
std::optional<std::array<Rational, 3>> quadratic_coefficients(const MultiPoly& p, Var v) {
  if (p.is_zero() || p.degree_in(v) != 2) return std::nullopt;
  auto cs = p.coefficients_in(v);
  for (const auto& c : cs)
    if (!c.is_constant()) return std::nullopt;
  return std::array<Rational, 3>{cs[2].constant_term(), cs[1].constant_term(),
                                 cs[0].constant_term()};
}

}  // namespace

std::optional<PositivityCertificate> certify_positive(const MultiPoly& p, Var v,
                                                      const RationalInterval& I) {
  if (p.is_zero()) return std::nullopt;
  if (I.empty()) throw std::invalid_argument("empty region");

  if (auto q = quadratic_coefficients(p, v)) {
    const auto& [a, b, c] = *q;
    Rational disc = b * b - Rational(4) * a * c;
    if (a.sign() > 0 && disc.sign() < 0) {
      PositivityCertificate cert;
      cert.kind = CertificateKind::negative_discriminant;
      cert.var = v;
      cert.region = I;
      cert.leading = a;
      cert.discriminant = disc;
      return cert;
    }
  }

  if (count_real_roots(p, v, I) != 0) return std::nullopt;
  Rational x0 = sample_point(I);
  Rational y0 = UniPoly::from_multipoly(p, v).evaluate(x0);
  if (y0.sign() <= 0) return std::nullopt;
  PositivityCertificate cert;
  cert.kind = CertificateKind::no_roots_sample;
  cert.var = v;
  cert.region = I;
  cert.sample = x0;
  cert.sample_value = y0;
  return cert;
}

bool validate_positive(const PositivityCertificate& cert, const MultiPoly& p, Var v,
                       const RationalInterval& I) {
  switch (cert.kind) {
    case CertificateKind::negative_discriminant: {
      auto q = quadratic_coefficients(p, v);
      if (!q) return false;
      const auto& [a, b, c] = *q;
      Rational disc = b * b - Rational(4) * a * c;
      return a.sign() > 0 && disc.sign() < 0 && cert.leading && *cert.leading == a &&
             cert.discriminant && *cert.discriminant == disc;
    }
    case CertificateKind::no_roots_sample: {
      if (!cert.sample || !cert.sample_value) return false;
      if (!I.contains(*cert.sample)) return false;
      if (UniPoly::from_multipoly(p, v).evaluate(*cert.sample) != *cert.sample_value)
        return false;
      if (cert.sample_value->sign() <= 0) return false;
      return count_real_roots(p, v, I) == 0;
    }
    case CertificateKind::square_decomposition: {
      MultiPoly sum;
      for (const auto& [w, f] : cert.squares) {
        if (w.sign() <= 0) return false;
        sum = sum + f * f * w;
      }
      return sum == p;
    }
  }
  return false;
}

std::optional<PositivityCertificate> quadratic_form_psd(const MultiPoly& q, Var x, Var y) {
  Rational a, b, c;
  for (const auto& [m, coeff] : q.terms()) {
    unsigned ex = m.exponent(x), ey = m.exponent(y);
    if (!m.with(x, 0).with(y, 0).is_constant() || ex + ey != 2)
      throw std::invalid_argument("not a binary quadratic form");
    if (ex == 2) a = coeff;
    else if (ey == 2) c = coeff;
    else b = coeff;
  }
  Rational det = Rational(4) * a * c - b * b;

  PositivityCertificate cert;
  cert.kind = CertificateKind::square_decomposition;
  cert.var = x;
  if (a.sign() > 0 && det.sign() >= 0) {
    // a*(x + b/(2a) y)^2 + (4ac - b^2)/(4a) * y^2
    MultiPoly form = MultiPoly::variable(x) + MultiPoly::variable(y) * (b / (Rational(2) * a));
    cert.squares.emplace_back(a, form);
    Rational second = det / (Rational(4) * a);
    if (!second.is_zero()) cert.squares.emplace_back(second, MultiPoly::variable(y));
    return cert;
  }
  if (a.is_zero() && b.is_zero() && c.sign() >= 0) {
    if (!c.is_zero()) cert.squares.emplace_back(c, MultiPoly::variable(y));
    return cert;
  }
  return std::nullopt;
}

bool validate_psd(const PositivityCertificate& cert, const MultiPoly& q) {
  if (cert.kind != CertificateKind::square_decomposition) return false;
  MultiPoly sum;
  for (const auto& [w, f] : cert.squares) {
    if (w.sign() <= 0) return false;
    sum = sum + f * f * w;
  }
  return sum == q;
}

}  // namespace bihar
