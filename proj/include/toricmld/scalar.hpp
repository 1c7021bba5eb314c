#pragma once

// Exact arbitrary-precision scalars for the lattice machinery.
//
// Integer and Rational are thin value wrappers over GMP's mpz_class /
// mpq_class. The wrappers exist so that every arithmetic operator returns a
// plain value: gmpxx's expression templates would otherwise leak into Eigen,
// which expects Scalar op Scalar -> Scalar. Rational is always kept in lowest
// terms with a positive denominator, so structural equality is value equality
// and printing is canonical ("p/q", or "n" when the denominator is 1).

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "toricmld/errors.hpp"

namespace toricmld {

class Integer {
 public:
  Integer() : v_(0) {}
  Integer(int x) : v_(x) {}
  Integer(long x) : v_(static_cast<signed long>(x)) {}
  explicit Integer(const mpz_class& z) : v_(z) {}

  static Integer from_string(const std::string& s);

  const mpz_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const {
    if (!v_.fits_slong_p()) fail(Errc::ResourceLimit, "integer exceeds machine range: " + str());
    return v_.get_si();
  }
  std::string str() const { return v_.get_str(); }

  friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
  friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
  friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.v_)); }
  friend Integer operator%(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ % b.v_)); }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Integer& a, const Integer& b) { return a.v_ != b.v_; }
  friend bool operator<(const Integer& a, const Integer& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Integer& a, const Integer& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Integer& a, const Integer& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Integer& a, const Integer& b) { return a.v_ >= b.v_; }

 private:
  mpz_class v_;
};

inline Integer abs(const Integer& a) { return Integer(mpz_class(abs(a.raw()))); }
inline Integer gcd(const Integer& a, const Integer& b) { return Integer(gcd(a.raw(), b.raw())); }
inline Integer lcm(const Integer& a, const Integer& b) { return Integer(lcm(a.raw(), b.raw())); }

// Exact quotient; b must divide a.
inline Integer divexact(const Integer& a, const Integer& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(q);
}

// Floor and ceiling quotients (b != 0). Used by the normal-form reductions.
inline Integer fdiv(const Integer& a, const Integer& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(q);
}
inline Integer cdiv(const Integer& a, const Integer& b) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(q);
}

inline std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int x) : v_(x) {}
  Rational(long x) : v_(static_cast<signed long>(x)) {}
  Rational(const Integer& z) : v_(z.raw()) {}
  Rational(const Integer& num, const Integer& den) : v_(num.raw(), den.raw()) {
    if (den.is_zero()) fail(Errc::InvalidInput, "zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }
  Integer num() const { return Integer(v_.get_num()); }
  Integer den() const { return Integer(v_.get_den()); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // Round toward -inf / +inf to an Integer.
  Integer floor() const { return fdiv(num(), den()); }
  Integer ceil() const { return cdiv(num(), den()); }

  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(Errc::InvalidInput, "division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.raw()))); }

inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

namespace detail {
// Strict decimal integer with optional leading '-'. No '+', no blanks, no dot.
inline bool valid_digits(const std::string& s, size_t from) {
  if (from >= s.size()) return false;
  for (size_t i = from; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}
}  // namespace detail

inline Integer Integer::from_string(const std::string& s) {
  size_t from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (!detail::valid_digits(s, from)) fail(Errc::InvalidInput, "not an integer: '" + s + "'");
  return Integer(mpz_class(s, 10));
}

// Accepts "p/q" or "n"; q must be a positive decimal literal. The result is
// reduced, so non-canonical input like "2/4" is accepted and normalized.
inline Rational Rational::from_string(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer::from_string(s));
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!detail::valid_digits(den, 0)) fail(Errc::InvalidInput, "not a rational: '" + s + "'");
  Integer d = Integer::from_string(den);
  if (d.is_zero()) fail(Errc::InvalidInput, "zero denominator: '" + s + "'");
  return Rational(Integer::from_string(num), d);
}

}  // namespace toricmld

namespace Eigen {

template <>
struct NumTraits<toricmld::Integer> : GenericNumTraits<toricmld::Integer> {
  typedef toricmld::Integer Real;
  typedef toricmld::Integer NonInteger;
  typedef toricmld::Integer Nested;
  typedef toricmld::Integer Literal;
  static inline Real epsilon() { return toricmld::Integer(0); }
  static inline Real dummy_precision() { return toricmld::Integer(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100,
  };
};

template <>
struct NumTraits<toricmld::Rational> : GenericNumTraits<toricmld::Rational> {
  typedef toricmld::Rational Real;
  typedef toricmld::Rational NonInteger;
  typedef toricmld::Rational Nested;
  typedef toricmld::Rational Literal;
  static inline Real epsilon() { return toricmld::Rational(0); }
  static inline Real dummy_precision() { return toricmld::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 150,
  };
};

}  // namespace Eigen
