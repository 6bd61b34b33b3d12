#pragma once

#include <cstdint>
#include <vector>

#include "g2forms/classify.hpp"
#include "g2forms/cmatrix.hpp"
#include "g2forms/liealg.hpp"

namespace g2f {

// Unit quaternion with rational coordinates; parameterizes the SU(2)
// subgroup fixing e_1.
struct RationalQuaternion {
  Rational a, b, c, d;

  static RationalQuaternion one() {
    return {Rational(1), Rational(0), Rational(0), Rational(0)};
  }
  // Cayley transform of a pure-imaginary rational quaternion; always unit.
  static RationalQuaternion cayley(const Rational& x, const Rational& y,
                                   const Rational& z);

  bool is_unit() const;
  RationalQuaternion operator*(const RationalQuaternion& o) const;
  bool operator==(const RationalQuaternion& o) const = default;
};

// Rational point (c, s) with c^2 + s^2 = 1; parameterizes SO(2)^1.
struct CirclePoint {
  Rational c, s;

  static CirclePoint one() { return {Rational(1), Rational(0)}; }
  // (c, s) = ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)); always unit.
  static CirclePoint tangent_half(const Rational& t);

  bool is_unit() const;
  bool operator==(const CirclePoint& o) const = default;
};

// A point of SU(3): 3x3 matrix over Q(sqrt2, i) with g^H g = I and
// det g = 1, both checked at construction.
class SU3Element {
 public:
  explicit SU3Element(CMatrix3 m);

  static SU3Element identity() { return SU3Element(CMatrix3::identity()); }

  const CMatrix3& matrix() const { return m_; }
  SU3Element operator*(const SU3Element& o) const {
    return SU3Element(m_ * o.m_);
  }
  bool operator==(const SU3Element& o) const = default;

 private:
  CMatrix3 m_;
};

// diag(1, U(q)) with U(q) = [[a+bi, c+di], [-c+di, a-bi]]; fixes e_1.
SU3Element embed_su2(const RationalQuaternion& q);

// Rotation of the real plane spanned by e_1, e_2.
SU3Element so2_1(const CirclePoint& p);

// Membership in the level set: Im(g_11) = 0, exactly.
bool in_x7(const SU3Element& g);

// g_1 . alpha . g_2 of (q1, p, q2); always a member of the level set.
SU3Element sample_point(const RationalQuaternion& q1, const CirclePoint& p,
                        const RationalQuaternion& q2);

// An exact point of the 4-sphere {(c, z2, z3) : c real}.
struct S4Point {
  Rational c;
  ComplexScalar z2, z3;  // rational real and imaginary parts required
};

// Factor v as the first column of embed_su2(q) . so2_1(p).  Requires
// s = sqrt(1 - c^2) rational (ExactnessError otherwise).
struct PointFactorization {
  RationalQuaternion q;
  CirclePoint p;
};
PointFactorization factor_point(const S4Point& v);

// Seven su(3)-coordinate vectors spanning {v : Im((g v)_11) = 0}, the
// tangent space of the level set left-translated to the identity.
struct TangentFrame {
  SU3Element base;
  std::vector<RVector> vectors;  // 7 vectors of length 8
};
TangentFrame tangent_frame(const SU3Element& g);

// The ambient bi-invariant 3-form restricted to the tangent frame at g,
// expressed as a 3-form on V^7 in the frame basis.  At the identity, with
// the frame (delta_1..3, f_1..4), the coefficients are reproduced exactly.
KForm restrict_cartan(const SU3Element& g);

TypeReport verify_at(const SU3Element& g);

// Exact subspace equality of the tangent frames at so2_1(p) and at the
// identity inside su(3).
bool translate_check(const CirclePoint& p);

bool invariance_check(const SU3Element& g, const RationalQuaternion& q1,
                      const RationalQuaternion& q2);

// The frozen monomial expansion of the restriction at the identity.
KForm expected_identity_restriction();

// Deterministic sampling -------------------------------------------------

struct SampleParams {
  RationalQuaternion q1;
  CirclePoint p;
  RationalQuaternion q2;
};

// Deterministic stream of exact sample parameters.  Seed 0 places the
// identity and three fixed SO(2)^1 points at the head of the stream so the
// explicitly computed cases are always exercised.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed);
  SampleParams next();

 private:
  Rational next_rational();
  std::uint64_t raw();

  std::uint64_t state_;
  bool special_head_;
  int emitted_ = 0;
};

struct SampleResult {
  int index = 0;
  SampleParams params;
  bool in_x7 = false;
  int tangent_rank = 0;
  TypeReport report;
};

struct VerifyOptions {
  int samples = 100;
  std::uint64_t seed = 0;
  int translate_points = 25;
};

struct VerifyRun {
  std::vector<SampleResult> results;
  bool all_split_stable = false;
  bool identity_restriction_matches = false;
  int translate_points = 0;
  bool translate_checks_pass = false;
  std::uint64_t seed = 0;
};

// The full pointwise verification pipeline.
VerifyRun run_verification(const VerifyOptions& opts);

}  // namespace g2f
