#include "g2forms/scalar.hpp"

#include <cassert>
#include <cctype>
#include <vector>

namespace g2f {

Rational rat(long num, long den) {
  if (den == 0) throw DivisionByZeroError();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZeroError();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    throw InputError("bad rational: '" + std::string(text) + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
    throw InputError("zero denominator: '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign_of(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

bool rational_sqrt(const Rational& r, Rational& root) {
  if (sign_of(r) < 0) return false;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  root = rat(sn, sd);
  return true;
}

RealScalar RealScalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  Rational d = a_ * a_ - 2 * b_ * b_;
  // d = 0 would mean sqrt(2) = |a/b|, impossible for a rational ratio.
  assert(d != 0);
  return RealScalar(a_ / d, -b_ / d);
}

int RealScalar::sign() const {
  int sa = sign_of(a_);
  int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against 2 b^2.
  int c = cmp(a_ * a_, Rational(2) * b_ * b_);
  assert(c != 0);
  return c > 0 ? sa : sb;
}

namespace {

// Shared term-sum grammar for the scalar tower:
//   scalar := term (('+'|'-') term)*
//   term   := rational ['*sqrt2'] ['*i']     (each factor at most once)
// The RealScalar subset is exactly "p/q" / "p/q+r/s*sqrt2".
struct ScalarTerms {
  Rational plain, sqrt2, imag, imag_sqrt2;
};

ScalarTerms parse_terms(std::string_view text) {
  if (text.empty()) throw InputError("empty scalar");
  ScalarTerms out{Rational(0), Rational(0), Rational(0), Rational(0)};
  size_t pos = 0;
  while (pos < text.size()) {
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
    }
    size_t start = pos;
    while (pos < text.size() && (std::isdigit((unsigned char)text[pos]) ||
                                 text[pos] == '/'))
      ++pos;
    if (pos == start)
      throw InputError("bad scalar: '" + std::string(text) + "'");
    Rational coeff = parse_rational(text.substr(start, pos - start));
    if (negative) coeff = -coeff;
    bool has_sqrt2 = false, has_i = false;
    while (pos < text.size() && text[pos] == '*') {
      if (text.compare(pos, 6, "*sqrt2") == 0 && !has_sqrt2) {
        has_sqrt2 = true;
        pos += 6;
      } else if (text.compare(pos, 2, "*i") == 0 && !has_i) {
        has_i = true;
        pos += 2;
      } else {
        throw InputError("bad scalar: '" + std::string(text) + "'");
      }
    }
    Rational& slot = has_i ? (has_sqrt2 ? out.imag_sqrt2 : out.imag)
                           : (has_sqrt2 ? out.sqrt2 : out.plain);
    slot += coeff;
  }
  return out;
}

void append_term(std::string& out, const Rational& coeff, const char* suffix) {
  if (coeff == 0) return;
  if (!out.empty() && sign_of(coeff) > 0) out += '+';
  out += to_string(coeff);
  out += suffix;
}

}  // namespace

std::string RealScalar::str() const {
  if (is_zero()) return "0/1";
  std::string out;
  if (b_ != 0 || a_ != 0) {
    if (a_ != 0 || b_ == 0) out = to_string(a_);
    append_term(out, b_, "*sqrt2");
  }
  return out;
}

RealScalar RealScalar::parse(std::string_view text) {
  ScalarTerms t = parse_terms(text);
  if (t.imag != 0 || t.imag_sqrt2 != 0)
    throw InputError("imaginary part in real scalar: '" + std::string(text) +
                     "'");
  return RealScalar(t.plain, t.sqrt2);
}

ComplexScalar ComplexScalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  RealScalar n = norm_sq();
  RealScalar inv = n.inverse();
  return ComplexScalar(re_ * inv, -im_ * inv);
}

std::string ComplexScalar::str() const {
  if (is_zero()) return "0/1";
  std::string out;
  append_term(out, re_.rational_part(), "");
  append_term(out, re_.sqrt2_part(), "*sqrt2");
  append_term(out, im_.rational_part(), "*i");
  append_term(out, im_.sqrt2_part(), "*sqrt2*i");
  return out;
}

ComplexScalar ComplexScalar::parse(std::string_view text) {
  ScalarTerms t = parse_terms(text);
  return ComplexScalar(RealScalar(t.plain, t.sqrt2),
                       RealScalar(t.imag, t.imag_sqrt2));
}

}  // namespace g2f
