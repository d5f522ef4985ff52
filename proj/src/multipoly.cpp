#include "bihar/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace bihar {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "alpha", "beta", "gamma", "delta", "lambda", "mu", "H", "d", "X", "B", "t", "c"};

// Tie-break priority for the graded order. Position 0 wins first.
constexpr std::array<Var, kVarCount> kPrecedence = {
    Var::gamma, Var::beta, Var::alpha, Var::d,
    Var::delta, Var::lambda, Var::mu, Var::H, Var::X, Var::B, Var::t, Var::c};

}  // namespace

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

Monomial Monomial::var(Var v, std::uint16_t e) {
  Monomial m;
  m.e_[static_cast<std::size_t>(v)] = e;
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned s = 0;
  for (auto e : e_) s += e;
  return s;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    unsigned s = unsigned(e_[i]) + unsigned(o.e_[i]);
    if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (o.e_[i] > e_[i]) throw std::invalid_argument("monomial does not divide");
    r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  }
  return r;
}

Monomial Monomial::with(Var v, std::uint16_t e) const {
  Monomial r = *this;
  r.e_[static_cast<std::size_t>(v)] = e;
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (Var v : kPrecedence) {
    auto ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

MultiPoly MultiPoly::constant(Rational c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Monomial(), std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(Var v) {
  MultiPoly p;
  p.terms_.emplace(Monomial::var(v), Rational(1));
  return p;
}

MultiPoly MultiPoly::term(Rational c, const Monomial& m) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

unsigned MultiPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, unsigned(m.exponent(v)));
  return d;
}

const Monomial& MultiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Var> MultiPoly::variables() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms_)
    for (Var v : kAllVars)
      if (m.exponent(v) > 0) out.insert(v);
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(ma.times(mb), ca * cb);
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  if (s.is_zero()) return MultiPoly();
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    auto e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(m.with(v, static_cast<std::uint16_t>(e - 1)), c * Rational(long(e)));
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  if (terms_.empty()) return {};
  std::vector<MultiPoly> out(degree_in(v) + 1);
  for (const auto& [m, c] : terms_)
    out[m.exponent(v)].add_term(m.with(v, 0), c);
  return out;
}

MultiPoly MultiPoly::from_coefficients_in(Var v, const std::vector<MultiPoly>& coeffs) {
  MultiPoly r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].depends_on(v))
      throw std::invalid_argument("coefficient depends on the assembly variable");
    for (const auto& [m, c] : coeffs[i].terms())
      r.add_term(m.with(v, static_cast<std::uint16_t>(i)), c);
  }
  return r;
}

PolyFraction MultiPoly::substitute(Var v, const PolyFraction& value) const {
  auto coeffs = coefficients_in(v);
  if (coeffs.empty()) return PolyFraction(MultiPoly());
  std::size_t m = coeffs.size() - 1;
  // sum coeffs[i] * N^i * D^(m-i) over the common denominator D^m
  std::vector<MultiPoly> npow(m + 1), dpow(m + 1);
  npow[0] = constant(1);
  dpow[0] = constant(1);
  for (std::size_t i = 1; i <= m; ++i) {
    npow[i] = npow[i - 1] * value.num();
    dpow[i] = dpow[i - 1] * value.den();
  }
  MultiPoly num;
  for (std::size_t i = 0; i <= m; ++i)
    num = num + coeffs[i] * npow[i] * dpow[m - i];
  return PolyFraction(num, dpow[m]);
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  PolyFraction f = substitute(v, PolyFraction(value));
  return f.to_polynomial();
}

MultiPoly MultiPoly::negate_var(Var v) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_)
    r.terms_.emplace(m, (m.exponent(v) % 2 == 1) ? -c : c);
  return r;
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& point) const {
  Rational sum(0);
  for (const auto& [m, coeff] : terms_) {
    Rational term = coeff;
    for (Var v : kAllVars) {
      auto e = m.exponent(v);
      if (e == 0) continue;
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument(std::string("evaluate: no assignment for ") +
                                    std::string(var_name(v)));
      term *= it->second.pow(e);
    }
    sum += term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// text form

namespace {

struct Token {
  enum Kind { Num, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') { ++i; continue; }
    if (ch >= '0' && ch <= '9') {
      std::size_t j = i;
      while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
      out.push_back({Token::Num, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if ((ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z')) {
      std::size_t j = i;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') || (s[j] >= 'A' && s[j] <= 'Z')))
        ++j;
      out.push_back({Token::Name, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (ch) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '^': k = Token::Caret; break;
      case '/': k = Token::Slash; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default: throw ParseError("unexpected character", i);
    }
    out.push_back({k, std::string(1, ch), i});
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  MultiPoly run() {
    MultiPoly p = expr();
    if (peek().kind != Token::End) throw ParseError("trailing input", peek().pos);
    return p;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  MultiPoly expr() {
    bool neg = false;
    if (peek().kind == Token::Plus) take();
    else if (peek().kind == Token::Minus) { take(); neg = true; }
    MultiPoly p = term();
    if (neg) p = -p;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = take().kind == Token::Minus;
      MultiPoly q = term();
      p = minus ? p - q : p + q;
    }
    return p;
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (peek().kind == Token::Star) {
      take();
      p = p * factor();
    }
    return p;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (peek().kind == Token::Caret) {
      take();
      if (peek().kind != Token::Num) throw ParseError("expected an exponent", peek().pos);
      const Token& e = take();
      unsigned long v = 0;
      for (char c : e.text) {
        v = v * 10 + unsigned(c - '0');
        if (v > 0xffff) throw ParseError("exponent too large", e.pos);
      }
      base = base.pow(static_cast<unsigned>(v));
    }
    return base;
  }

  MultiPoly atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Num: {
        take();
        Integer num = Integer::parse(t.text);
        if (peek().kind == Token::Slash) {
          take();
          if (peek().kind != Token::Num) throw ParseError("expected a denominator", peek().pos);
          const Token& d = take();
          Integer den = Integer::parse(d.text);
          if (den.is_zero()) throw ParseError("zero denominator", d.pos);
          return MultiPoly::constant(Rational(num, den));
        }
        return MultiPoly::constant(Rational(num));
      }
      case Token::Name: {
        take();
        auto v = var_from_name(t.text);
        if (!v) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        return MultiPoly::variable(*v);
      }
      case Token::LParen: {
        take();
        MultiPoly p = expr();
        if (peek().kind != Token::RParen) throw ParseError("expected ')'", peek().pos);
        take();
        return p;
      }
      case Token::Minus: {
        take();
        return -factor();
      }
      default:
        throw ParseError("expected a term", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).run(); }

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, coeff] : terms_) {
    bool neg = coeff.sign() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    Rational mag = coeff.abs();
    std::string mon;
    for (Var v : kAllVars) {
      auto e = m.exponent(v);
      if (e == 0) continue;
      if (!mon.empty()) mon += "*";
      mon += std::string(var_name(v));
      if (e > 1) mon += "^" + std::to_string(e);
    }
    if (mon.empty()) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      out += mon;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// normalization and division

ContentPrimitive content_primitive(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("content of the zero polynomial");
  Integer den_lcm(1);
  for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, c.denominator());
  Integer num_gcd(0);
  for (const auto& [m, c] : p.terms())
    num_gcd = gcd(num_gcd, c.numerator() * den_lcm.divide_exact(c.denominator()));
  Rational content(num_gcd, den_lcm);
  if (p.leading_coefficient().sign() < 0) content = -content;
  return {content, p * content.reciprocal()};
}

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw DivisionByZeroError();
  MultiPoly quot;
  MultiPoly rem = p;
  const Monomial& qm = q.leading_monomial();
  const Rational& qc = q.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!qm.divides(rm)) return std::nullopt;
    MultiPoly t = MultiPoly::term(rem.leading_coefficient() / qc, rm.divide(qm));
    quot = quot + t;
    rem = rem - t * q;
  }
  return quot;
}

std::optional<Rational> proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() && q.is_zero()) return Rational(1);
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  if (p.term_count() != q.term_count()) return std::nullopt;
  Rational scale(0);
  auto it = p.terms().begin();
  auto jt = q.terms().begin();
  for (; it != p.terms().end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return std::nullopt;
    Rational r = it->second / jt->second;
    if (scale.is_zero()) scale = r;
    else if (!(scale == r)) return std::nullopt;
  }
  return scale;
}

namespace {

// Coefficient of v^(deg_v p) with v removed.
MultiPoly leading_coefficient_in(const MultiPoly& p, Var v) {
  unsigned d = p.degree_in(v);
  MultiPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(v) == d) out = out + MultiPoly::term(c, m.with(v, 0));
  return out;
}

}  // namespace

MultiPoly pseudo_remainder(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (q.is_zero()) throw DivisionByZeroError();
  unsigned dq = q.degree_in(v);
  if (p.degree_in(v) < dq)
    throw std::invalid_argument("pseudo_remainder: deg p < deg q");
  MultiPoly lcq = leading_coefficient_in(q, v);
  MultiPoly r = p;
  unsigned e = p.degree_in(v) - dq + 1;
  while (!r.is_zero() && r.degree_in(v) >= dq) {
    unsigned dr = r.degree_in(v);
    MultiPoly lcr = leading_coefficient_in(r, v);
    MultiPoly shift = MultiPoly::term(Rational(1), Monomial::var(v, static_cast<std::uint16_t>(dr - dq)));
    r = lcq * r - lcr * shift * q;
    --e;
  }
  return lcq.pow(e) * r;
}

namespace {

// Classical resultant lc(A)^(deg B) * prod B(roots of A), by the subresultant
// pseudo-remainder sequence. Exact divisions are guaranteed by the
// subresultant theory; the Bareiss determinant below is the cross-check.
MultiPoly classical_resultant(MultiPoly A, MultiPoly B, Var v) {
  unsigned a = A.degree_in(v), b = B.degree_in(v);
  if (a == 0 && b == 0) return MultiPoly::constant(1);
  if (a == 0) return A.pow(b);
  if (b == 0) return B.pow(a);
  int s = 1;
  if (a < b) {
    std::swap(A, B);
    if ((a & 1u) && (b & 1u)) s = -s;
  }
  MultiPoly g = MultiPoly::constant(1);
  MultiPoly h = MultiPoly::constant(1);
  while (true) {
    unsigned da = A.degree_in(v), db = B.degree_in(v);
    unsigned delta = da - db;
    if ((da & 1u) && (db & 1u)) s = -s;
    MultiPoly R = pseudo_remainder(A, B, v);
    if (R.is_zero()) return MultiPoly();  // common factor of positive degree
    MultiPoly divisor = g * h.pow(delta);
    A = B;
    auto Bn = exact_divide(R, divisor);
    assert(Bn.has_value());
    B = *Bn;
    g = leading_coefficient_in(A, v);
    if (delta >= 1) {
      auto hn = exact_divide(g.pow(delta), h.pow(delta - 1));
      assert(hn.has_value());
      h = *hn;
    }
    if (B.degree_in(v) == 0) break;
  }
  unsigned dA = A.degree_in(v);
  auto res = exact_divide(B.pow(dA), h.pow(dA - 1));
  assert(res.has_value());
  return s < 0 ? -*res : *res;
}

}  // namespace

MultiPoly resultant_value(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("resultant of the zero polynomial");
  return classical_resultant(q, p, v);  // fixes Res_v(x-a, x-b) = b-a
}

MultiPoly sylvester_resultant_value(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("resultant of the zero polynomial");
  // Same orientation as resultant_value: the matrix is Syl(q, p).
  auto qc = q.coefficients_in(v);
  auto pc = p.coefficients_in(v);
  std::size_t a = qc.size() - 1, b = pc.size() - 1;
  if (a == 0 && b == 0) return MultiPoly::constant(1);
  if (a == 0) return qc[0].pow(static_cast<unsigned>(b));
  if (b == 0) return pc[0].pow(static_cast<unsigned>(a));
  std::size_t n = a + b;
  std::vector<std::vector<MultiPoly>> M(n, std::vector<MultiPoly>(n));
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t j = 0; j <= a; ++j) M[r][r + j] = qc[a - j];
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t j = 0; j <= b; ++j) M[b + r][r + j] = pc[b - j];

  // Bareiss fraction-free elimination; every division is exact.
  int sign = 1;
  MultiPoly prev = MultiPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && M[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly();
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        auto div = exact_divide(t, prev);
        assert(div.has_value());
        M[i][j] = *div;
      }
      M[i][k] = MultiPoly();
    }
    prev = M[k][k];
  }
  MultiPoly det = M[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

namespace {

ScaledPoly normalize_scaled(const MultiPoly& value) {
  if (value.is_zero()) return {Rational(0), MultiPoly()};
  auto cp = content_primitive(value);
  return {cp.content, cp.primitive};
}

}  // namespace

ScaledPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  return normalize_scaled(resultant_value(p, q, v));
}

ScaledPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  return normalize_scaled(sylvester_resultant_value(p, q, v));
}

// ---------------------------------------------------------------------------
// PolyFraction

PolyFraction::PolyFraction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError();
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1);
    return;
  }
  auto cp = content_primitive(den_);
  den_ = cp.primitive;
  num_ = num_ * cp.content.reciprocal();
}

PolyFraction PolyFraction::operator-() const {
  PolyFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

PolyFraction PolyFraction::operator+(const PolyFraction& o) const {
  return PolyFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

PolyFraction PolyFraction::operator-(const PolyFraction& o) const {
  return PolyFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

PolyFraction PolyFraction::operator*(const PolyFraction& o) const {
  return PolyFraction(num_ * o.num_, den_ * o.den_);
}

PolyFraction PolyFraction::operator/(const PolyFraction& o) const {
  if (o.is_zero()) throw DivisionByZeroError();
  return PolyFraction(num_ * o.den_, den_ * o.num_);
}

bool PolyFraction::operator==(const PolyFraction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

MultiPoly PolyFraction::to_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("fraction has a nonconstant denominator");
  // the normalized constant denominator is exactly 1
  return num_;
}

namespace {

// Dense univariate gcd over Q, primitive with positive leading coefficient.
// Only used to reduce fractions whose parts share a single variable.
std::vector<Rational> to_dense(const MultiPoly& p, Var v) {
  auto coeffs = p.coefficients_in(v);
  std::vector<Rational> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_constant())
      throw std::logic_error("polynomial is not univariate");
    out[i] = coeffs[i].constant_term();
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

std::vector<Rational> dense_rem(std::vector<Rational> r, const std::vector<Rational>& b) {
  while (r.size() >= b.size() && !r.empty()) {
    Rational f = r.back() / b.back();
    std::size_t off = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= f * b[i];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return r;
}

MultiPoly dense_to_poly(const std::vector<Rational>& cs, Var v) {
  MultiPoly p;
  for (std::size_t i = 0; i < cs.size(); ++i)
    p = p + MultiPoly::term(cs[i], Monomial::var(v, static_cast<std::uint16_t>(i)));
  return p;
}

MultiPoly univariate_gcd(const MultiPoly& p, const MultiPoly& q, Var v) {
  std::vector<Rational> a = to_dense(p, v), b = to_dense(q, v);
  while (!b.empty()) {
    auto r = dense_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return MultiPoly();
  return content_primitive(dense_to_poly(a, v)).primitive;
}

}  // namespace

PolyFraction PolyFraction::reduced() const {
  if (num_.is_zero()) return *this;
  std::set<Var> vars = num_.variables();
  for (Var v : den_.variables()) vars.insert(v);
  if (vars.size() != 1) return *this;  // constructor already normalized
  Var v = *vars.begin();
  MultiPoly g = univariate_gcd(num_, den_, v);
  if (g.is_constant()) return *this;
  auto n = exact_divide(num_, g);
  auto d = exact_divide(den_, g);
  assert(n && d);
  return PolyFraction(*n, *d);
}

std::string PolyFraction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace bihar
