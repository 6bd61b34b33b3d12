#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "g2forms/errors.hpp"

namespace g2f {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator).  mpq_class keeps results canonical as long as operands are,
// so construct through these helpers rather than raw mpq_class(num, den).
using Rational = mpq_class;

Rational rat(long num, long den = 1);
Rational rat(const mpz_class& num, const mpz_class& den);

// Accepts "p" or "p/q"; emits "p/q" with explicit denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

int sign_of(const Rational& r);

// True iff r is a square in Q; on success root is the nonnegative square root.
bool rational_sqrt(const Rational& r, Rational& root);

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).  The
// representation is unique since sqrt(2) is irrational.
class RealScalar {
 public:
  RealScalar() : a_(0), b_(0) {}
  RealScalar(long v) : a_(v, 1), b_(0) {}  // NOLINT(google-explicit-constructor)
  RealScalar(Rational a) : a_(std::move(a)), b_(0) {}  // NOLINT
  RealScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static RealScalar sqrt2() { return RealScalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  RealScalar operator-() const { return RealScalar(-a_, -b_); }
  RealScalar operator+(const RealScalar& o) const {
    return RealScalar(a_ + o.a_, b_ + o.b_);
  }
  RealScalar operator-(const RealScalar& o) const {
    return RealScalar(a_ - o.a_, b_ - o.b_);
  }
  RealScalar operator*(const RealScalar& o) const {
    return RealScalar(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
  }
  RealScalar operator/(const RealScalar& o) const { return *this * o.inverse(); }

  RealScalar& operator+=(const RealScalar& o) { return *this = *this + o; }
  RealScalar& operator-=(const RealScalar& o) { return *this = *this - o; }
  RealScalar& operator*=(const RealScalar& o) { return *this = *this * o; }

  bool operator==(const RealScalar& o) const {
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const RealScalar& o) const { return !(*this == o); }

  // (a + b sqrt2)^-1 = (a - b sqrt2) / (a^2 - 2 b^2)
  RealScalar inverse() const;

  // Exact sign of the real number a + b sqrt(2).
  int sign() const;

  std::string str() const;
  static RealScalar parse(std::string_view text);

 private:
  Rational a_, b_;
};

// Element x + i y with x, y in Q(sqrt 2); the full scalar field Q(sqrt2, i).
class ComplexScalar {
 public:
  ComplexScalar() = default;
  ComplexScalar(RealScalar re) : re_(std::move(re)) {}  // NOLINT
  ComplexScalar(long v) : re_(v) {}                     // NOLINT
  ComplexScalar(RealScalar re, RealScalar im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexScalar i() { return ComplexScalar(RealScalar(0), RealScalar(1)); }

  const RealScalar& re() const { return re_; }
  const RealScalar& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ComplexScalar conj() const { return ComplexScalar(re_, -im_); }
  RealScalar norm_sq() const { return re_ * re_ + im_ * im_; }

  ComplexScalar operator-() const { return ComplexScalar(-re_, -im_); }
  ComplexScalar operator+(const ComplexScalar& o) const {
    return ComplexScalar(re_ + o.re_, im_ + o.im_);
  }
  ComplexScalar operator-(const ComplexScalar& o) const {
    return ComplexScalar(re_ - o.re_, im_ - o.im_);
  }
  ComplexScalar operator*(const ComplexScalar& o) const {
    return ComplexScalar(re_ * o.re_ - im_ * o.im_,
                         re_ * o.im_ + im_ * o.re_);
  }
  ComplexScalar operator/(const ComplexScalar& o) const {
    return *this * o.inverse();
  }
  ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
  ComplexScalar& operator-=(const ComplexScalar& o) { return *this = *this - o; }

  bool operator==(const ComplexScalar& o) const {
    return re_ == o.re_ && im_ == o.im_;
  }
  bool operator!=(const ComplexScalar& o) const { return !(*this == o); }

  ComplexScalar inverse() const;

  std::string str() const;
  static ComplexScalar parse(std::string_view text);

 private:
  RealScalar re_, im_;
};

}  // namespace g2f
