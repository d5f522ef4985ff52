#include "bihar/exact.hpp"

#include <cctype>

namespace bihar {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Validates an optionally signed decimal integer and returns it via GMP.
// GMP's own set_str is laxer than the contract (accepts whitespace), so the
// character check happens here.
mpz_class parse_mpz(std::string_view text, std::size_t offset_for_errors) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body))
    throw ParseError("expected an integer", offset_for_errors);
  mpz_class v(std::string(body), 10);
  return neg ? mpz_class(-v) : v;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  return Integer(parse_mpz(text, 0));
}

Integer Integer::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return Integer(r);
}

Integer Integer::divide_exact(const Integer& o) const {
  if (o.is_zero()) throw DivisionByZeroError();
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v_.get_mpz_t(), o.v_.get_mpz_t());
  if (r != 0) throw std::invalid_argument("divide_exact: not divisible");
  return Integer(q);
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(r);
}

Integer lcm(const Integer& a, const Integer& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(r);
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DivisionByZeroError();
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(Integer(parse_mpz(text, 0)));
  mpz_class num = parse_mpz(text.substr(0, slash), 0);
  mpz_class den = parse_mpz(text.substr(slash + 1), slash + 1);
  if (den == 0) throw DivisionByZeroError();
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DivisionByZeroError();
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZeroError();
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? reciprocal() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
  return Rational(mpq_class(num, den));  // powers of a canonical value stay canonical
}

std::string decimal_string(const Rational& v, unsigned digits) {
  mpz_class num = v.numerator().raw();
  mpz_class den = v.denominator().raw();
  bool neg = num < 0;
  if (neg) num = -num;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  num *= scale;
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;  // round half away from zero (operands are nonnegative here)
  std::string s = q.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return (neg && q != 0) ? "-" + s : s;
}

RationalInterval RationalInterval::closed(Rational lo, Rational hi) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  RationalInterval r;
  r.lo_ = std::move(lo); r.hi_ = std::move(hi);
  r.lo_open_ = false; r.hi_open_ = false;
  return r;
}

RationalInterval RationalInterval::open(Rational lo, Rational hi) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  RationalInterval r;
  r.lo_ = std::move(lo); r.hi_ = std::move(hi);
  return r;
}

RationalInterval RationalInterval::open_closed(Rational lo, Rational hi) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  RationalInterval r;
  r.lo_ = std::move(lo); r.hi_ = std::move(hi);
  r.hi_open_ = false;
  return r;
}

RationalInterval RationalInterval::closed_open(Rational lo, Rational hi) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  RationalInterval r;
  r.lo_ = std::move(lo); r.hi_ = std::move(hi);
  r.lo_open_ = false;
  return r;
}

RationalInterval RationalInterval::greater_than(Rational lo) {
  RationalInterval r;
  r.lo_ = std::move(lo);
  return r;
}

RationalInterval RationalInterval::at_least(Rational lo) {
  RationalInterval r;
  r.lo_ = std::move(lo);
  r.lo_open_ = false;
  return r;
}

RationalInterval RationalInterval::less_than(Rational hi) {
  RationalInterval r;
  r.hi_ = std::move(hi);
  return r;
}

RationalInterval RationalInterval::at_most(Rational hi) {
  RationalInterval r;
  r.hi_ = std::move(hi);
  r.hi_open_ = false;
  return r;
}

RationalInterval RationalInterval::whole() { return RationalInterval(); }

RationalInterval RationalInterval::point(Rational v) {
  return closed(v, v);
}

const Rational& RationalInterval::lo() const {
  if (!lo_) throw std::logic_error("interval has no finite lower endpoint");
  return *lo_;
}

const Rational& RationalInterval::hi() const {
  if (!hi_) throw std::logic_error("interval has no finite upper endpoint");
  return *hi_;
}

bool RationalInterval::contains(const Rational& x) const {
  if (lo_) {
    if (x < *lo_) return false;
    if (lo_open_ && x == *lo_) return false;
  }
  if (hi_) {
    if (x > *hi_) return false;
    if (hi_open_ && x == *hi_) return false;
  }
  return true;
}

bool RationalInterval::empty() const {
  if (!bounded()) return false;
  if (*lo_ < *hi_) return false;
  return lo_open_ || hi_open_;  // [a,a] holds a; (a,a), [a,a), (a,a] hold nothing
}

Rational RationalInterval::midpoint() const {
  return (lo() + hi()) * Rational(1, 2);
}

Rational RationalInterval::width() const {
  return hi() - lo();
}

RationalInterval RationalInterval::intersect(const RationalInterval& o) const {
  RationalInterval r;
  if (lo_ && o.lo_) {
    if (*lo_ > *o.lo_ || (*lo_ == *o.lo_ && lo_open_)) { r.lo_ = lo_; r.lo_open_ = lo_open_; }
    else { r.lo_ = o.lo_; r.lo_open_ = o.lo_open_; }
  } else if (lo_) { r.lo_ = lo_; r.lo_open_ = lo_open_; }
  else if (o.lo_) { r.lo_ = o.lo_; r.lo_open_ = o.lo_open_; }
  if (hi_ && o.hi_) {
    if (*hi_ < *o.hi_ || (*hi_ == *o.hi_ && hi_open_)) { r.hi_ = hi_; r.hi_open_ = hi_open_; }
    else { r.hi_ = o.hi_; r.hi_open_ = o.hi_open_; }
  } else if (hi_) { r.hi_ = hi_; r.hi_open_ = hi_open_; }
  else if (o.hi_) { r.hi_ = o.hi_; r.hi_open_ = o.hi_open_; }
  if (r.lo_ && r.hi_ && *r.lo_ > *r.hi_)
    return open(*r.lo_, *r.lo_);  // disjoint inputs collapse to an empty interval
  return r;
}

std::string RationalInterval::str() const {
  std::string s;
  s += lo_infinite() ? "(" : (lo_open_ ? "(" : "[");
  s += lo_infinite() ? "-inf" : lo_->str();
  s += ",";
  s += hi_infinite() ? "inf" : hi_->str();
  s += hi_infinite() ? ")" : (hi_open_ ? ")" : "]");
  return s;
}

RationalInterval RationalInterval::parse(std::string_view text) {
  text = trim_ws(text);
  if (text.size() < 3) throw ParseError("interval too short", 0);
  char open_c = text.front(), close_c = text.back();
  if (open_c != '(' && open_c != '[') throw ParseError("expected '(' or '['", 0);
  if (close_c != ')' && close_c != ']') throw ParseError("expected ')' or ']'", text.size() - 1);
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected ','", 1);
  std::string_view lo_s = trim_ws(body.substr(0, comma));
  std::string_view hi_s = trim_ws(body.substr(comma + 1));
  bool lo_inf = lo_s == "-inf";
  bool hi_inf = hi_s == "inf" || hi_s == "+inf";
  if (lo_inf && open_c != '(') throw ParseError("infinite endpoint must be open", 0);
  if (hi_inf && close_c != ')') throw ParseError("infinite endpoint must be open", text.size() - 1);

  RationalInterval r;
  if (!lo_inf) {
    r.lo_ = Rational::parse(lo_s);
    r.lo_open_ = open_c == '(';
  }
  if (!hi_inf) {
    r.hi_ = Rational::parse(hi_s);
    r.hi_open_ = close_c == ')';
  }
  if (r.lo_ && r.hi_ && *r.lo_ > *r.hi_)
    throw ParseError("interval endpoints out of order", 1);
  return r;
}

}  // namespace bihar
