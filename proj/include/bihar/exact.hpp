#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bihar {

/// Thrown when a denominator is zero, at construction or division time.
struct DivisionByZeroError : std::domain_error {
  DivisionByZeroError() : std::domain_error("division by zero") {}
};

/// Thrown by the text parsers. `position` is a 0-based offset into the input.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

/// Arbitrary-precision signed integer.
///
/// A value type: every operation returns a new Integer, nothing mutates in
/// place. Backed by GMP, which never appears in any signature.
class Integer {
 public:
  Integer() : v_(0) {}
  Integer(long v) : v_(v) {}
  explicit Integer(const mpz_class& v) : v_(v) {}

  /// Accepts an optional sign followed by decimal digits; rejects anything else.
  static Integer parse(std::string_view text);
  std::string str() const { return v_.get_str(); }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer operator+(const Integer& o) const { return Integer(mpz_class(v_ + o.v_)); }
  Integer operator-(const Integer& o) const { return Integer(mpz_class(v_ - o.v_)); }
  Integer operator*(const Integer& o) const { return Integer(mpz_class(v_ * o.v_)); }

  bool operator==(const Integer& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Integer& o) const {
    int c = cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  Integer abs() const { return Integer(mpz_class(::abs(v_))); }
  Integer pow(unsigned long e) const;

  /// Quotient of an exact division; throws std::invalid_argument if o does not divide *this.
  Integer divide_exact(const Integer& o) const;

  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

Integer gcd(const Integer& a, const Integer& b);  // nonnegative; gcd(0,0) = 0
Integer lcm(const Integer& a, const Integer& b);  // nonnegative

/// Arbitrary-precision rational, always canonical: reduced to lowest terms
/// with a positive denominator. Denominator zero is rejected at construction
/// with DivisionByZeroError; no operation can produce a non-canonical value.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long v) : v_(v) {}
  Rational(const Integer& v) : v_(v.raw()) {}
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p" or "p/q" with integer p, q; q must be nonzero. Whitespace is rejected.
  static Rational parse(std::string_view text);
  /// "p" when the denominator is 1, otherwise "p/q"; parse(str(x)) == x bit-exactly.
  std::string str() const;

  Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(v_.get_den())); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational reciprocal() const;
  Rational pow(long e) const;  // e < 0 requires a nonzero base

 private:
  explicit Rational(const mpq_class& v) : v_(v) { /* inputs already canonical */ }
  mpq_class v_;
};

/// Correctly rounded (half away from zero) decimal rendering with `digits`
/// places after the point, e.g. decimal_string(1/3, 4) == "0.3333".
std::string decimal_string(const Rational& v, unsigned digits);

/// An interval over the rationals. Each endpoint is either a finite Rational
/// with an open/closed flag or infinite (infinite endpoints are always open).
/// Finite endpoints satisfy lo <= hi.
///
/// Text form: "[1/2,3]", "(0,inf)", "(-inf,7/2]"; parse and str round-trip.
/// parse also accepts whitespace around the brackets and endpoints.
class RationalInterval {
 public:
  static RationalInterval closed(Rational lo, Rational hi);
  static RationalInterval open(Rational lo, Rational hi);
  static RationalInterval open_closed(Rational lo, Rational hi);
  static RationalInterval closed_open(Rational lo, Rational hi);
  static RationalInterval greater_than(Rational lo);   // (lo, +inf)
  static RationalInterval at_least(Rational lo);       // [lo, +inf)
  static RationalInterval less_than(Rational hi);      // (-inf, hi)
  static RationalInterval at_most(Rational hi);        // (-inf, hi]
  static RationalInterval whole();                     // (-inf, +inf)
  static RationalInterval point(Rational v);           // [v, v]

  static RationalInterval parse(std::string_view text);
  std::string str() const;

  bool lo_infinite() const { return !lo_.has_value(); }
  bool hi_infinite() const { return !hi_.has_value(); }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }
  const Rational& lo() const;  // requires a finite lower endpoint
  const Rational& hi() const;  // requires a finite upper endpoint

  bool bounded() const { return !lo_infinite() && !hi_infinite(); }
  bool contains(const Rational& x) const;
  /// True when no rational lies in the interval, e.g. (a,a).
  bool empty() const;

  Rational midpoint() const;  // requires bounded()
  Rational width() const;     // requires bounded()

  /// Largest interval contained in both; endpoint openness is inherited from
  /// whichever input supplies the tighter endpoint.
  RationalInterval intersect(const RationalInterval& o) const;

  bool operator==(const RationalInterval& o) const = default;

 private:
  RationalInterval() = default;
  std::optional<Rational> lo_, hi_;
  bool lo_open_ = true, hi_open_ = true;
};

}  // namespace bihar
