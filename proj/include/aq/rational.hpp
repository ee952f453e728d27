#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace aq {

/// Exact rational scalar over ℚ. Wraps GMP's mpq_class behind plain
/// value-returning operators so it can serve as an Eigen scalar type.
/// Invariant: always canonical (positive denominator, gcd(|num|,den)=1).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  /// "p" when integral, else "p/q".
  std::string str() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rational operator-() const { return wrap(-v_); }

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

  friend Rational abs(const Rational& a) { return wrap(abs(a.v_)); }

  const mpq_class& raw() const { return v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  static Rational wrap(const mpq_class& v) {
    Rational r;
    r.v_ = v;  // gmp arithmetic on canonical operands stays canonical
    return r;
  }
  mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, long b) { return a * Rational(b); }

}  // namespace aq

namespace Eigen {

template <>
struct NumTraits<aq::Rational> : GenericNumTraits<aq::Rational> {
  typedef aq::Rational Real;
  typedef aq::Rational NonInteger;
  typedef aq::Rational Nested;
  typedef aq::Rational Literal;

  static inline Real epsilon() { return aq::Rational(0); }
  static inline Real dummy_precision() { return aq::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 150,
    MulCost = 150,
  };
};

}  // namespace Eigen
