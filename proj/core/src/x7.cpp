#include "g2forms/x7.hpp"

#include <cassert>
#include <utility>

namespace g2f {

namespace {

const LieAlgebra& su3() {
  static const LieAlgebra g = build_su3();
  return g;
}

const KForm& ambient_cartan_form() {
  static const KForm w = cartan_3form(su3(), negative_trace_form(su3()));
  return w;
}

RealScalar inv_sqrt2() { return RealScalar(Rational(0), rat(1, 2)); }

}  // namespace

RationalQuaternion RationalQuaternion::cayley(const Rational& x,
                                              const Rational& y,
                                              const Rational& z) {
  Rational n = x * x + y * y + z * z;
  Rational d = n + 1;
  return {(1 - n) / d, 2 * x / d, 2 * y / d, 2 * z / d};
}

bool RationalQuaternion::is_unit() const {
  return a * a + b * b + c * c + d * d == 1;
}

RationalQuaternion RationalQuaternion::operator*(
    const RationalQuaternion& o) const {
  return {a * o.a - b * o.b - c * o.c - d * o.d,
          a * o.b + b * o.a + c * o.d - d * o.c,
          a * o.c - b * o.d + c * o.a + d * o.b,
          a * o.d + b * o.c - c * o.b + d * o.a};
}

CirclePoint CirclePoint::tangent_half(const Rational& t) {
  Rational d = t * t + 1;
  return {(1 - t * t) / d, 2 * t / d};
}

bool CirclePoint::is_unit() const { return c * c + s * s == 1; }

SU3Element::SU3Element(CMatrix3 m) : m_(std::move(m)) {
  if (!(m_.dagger() * m_ == CMatrix3::identity()))
    throw InputError("SU3Element: matrix is not unitary");
  if (!(m_.det() == ComplexScalar(1)))
    throw InputError("SU3Element: determinant is not 1");
}

SU3Element embed_su2(const RationalQuaternion& q) {
  if (!q.is_unit()) throw InputError("embed_su2: quaternion is not unit");
  CMatrix3 m;
  m(0, 0) = ComplexScalar(1);
  m(1, 1) = ComplexScalar(RealScalar(q.a), RealScalar(q.b));
  m(1, 2) = ComplexScalar(RealScalar(q.c), RealScalar(q.d));
  m(2, 1) = ComplexScalar(RealScalar(-q.c), RealScalar(q.d));
  m(2, 2) = ComplexScalar(RealScalar(q.a), RealScalar(-q.b));
  return SU3Element(m);
}

SU3Element so2_1(const CirclePoint& p) {
  if (!p.is_unit()) throw InputError("so2_1: point is not on the unit circle");
  CMatrix3 m;
  m(0, 0) = ComplexScalar(RealScalar(p.c));
  m(0, 1) = ComplexScalar(RealScalar(-p.s));
  m(1, 0) = ComplexScalar(RealScalar(p.s));
  m(1, 1) = ComplexScalar(RealScalar(p.c));
  m(2, 2) = ComplexScalar(1);
  return SU3Element(m);
}

bool in_x7(const SU3Element& g) { return g.matrix()(0, 0).im().is_zero(); }

SU3Element sample_point(const RationalQuaternion& q1, const CirclePoint& p,
                        const RationalQuaternion& q2) {
  return embed_su2(q1) * so2_1(p) * embed_su2(q2);
}

PointFactorization factor_point(const S4Point& v) {
  auto rational_of = [](const RealScalar& x) {
    if (!x.is_rational())
      throw InputError("factor_point: coordinates must have rational parts");
    return x.rational_part();
  };
  Rational z2r = rational_of(v.z2.re()), z2i = rational_of(v.z2.im());
  Rational z3r = rational_of(v.z3.re()), z3i = rational_of(v.z3.im());
  Rational norm = v.c * v.c + z2r * z2r + z2i * z2i + z3r * z3r + z3i * z3i;
  if (norm != 1) throw InputError("factor_point: point is not on S^4");
  Rational s2 = 1 - v.c * v.c;
  Rational s;
  if (!rational_sqrt(s2, s))
    throw ExactnessError("factor_point: sqrt(1 - c^2) is not rational");
  if (s == 0) {
    if (z2r != 0 || z2i != 0 || z3r != 0 || z3i != 0)
      throw InputError("factor_point: degenerate s = 0 with (z2, z3) != 0");
    return {RationalQuaternion::one(), CirclePoint{v.c, Rational(0)}};
  }
  // U(q) must map (s, 0) to (z2, z3): its first column is (z2/s, z3/s).
  RationalQuaternion q{z2r / s, z2i / s, -z3r / s, z3i / s};
  assert(q.is_unit());
  PointFactorization out{q, CirclePoint{v.c, s}};
  // Postcondition: the first column of embed(q) * so2_1(p) equals v.
  SU3Element g = embed_su2(out.q) * so2_1(out.p);
  if (!(g.matrix()(0, 0) == ComplexScalar(RealScalar(v.c))) ||
      !(g.matrix()(1, 0) == v.z2) || !(g.matrix()(2, 0) == v.z3))
    throw InternalCheckError("factor_point: postcondition failed");
  return out;
}

TangentFrame tangent_frame(const SU3Element& g) {
  if (!in_x7(g)) throw InputError("tangent_frame: point is not in the level set");
  const auto& basis = su3().realization();
  Matrix functional(1, 8);
  bool nonzero = false;
  for (int l = 0; l < 8; ++l) {
    ComplexScalar top = (g.matrix() * basis[l])(0, 0);
    functional(0, l) = top.im();
    nonzero |= !top.im().is_zero();
  }
  if (!nonzero)
    throw SingularPointError("tangent_frame: defining functional vanishes");
  TangentFrame frame{g, functional.null_space()};
  assert(frame.vectors.size() == 7);
  assert(Matrix::from_rows(frame.vectors).rank() == 7);
  return frame;
}

KForm restrict_cartan(const SU3Element& g) {
  TangentFrame frame = tangent_frame(g);
  const KForm& phi = ambient_cartan_form();
  KForm out(7, 3);
  for (Blade b : blade::enumerate(7, 3)) {
    std::vector<RVector> args;
    for (int i : blade::to_indices(b)) args.push_back(frame.vectors[i - 1]);
    out.set_term(b, eval(phi, args));
  }
  return out;
}

TypeReport verify_at(const SU3Element& g) { return classify(restrict_cartan(g)); }

bool translate_check(const CirclePoint& p) {
  TangentFrame at_p = tangent_frame(so2_1(p));
  TangentFrame at_e = tangent_frame(SU3Element::identity());
  std::vector<RVector> stacked = at_p.vectors;
  stacked.insert(stacked.end(), at_e.vectors.begin(), at_e.vectors.end());
  return Matrix::from_rows(stacked).rank() == 7;
}

bool invariance_check(const SU3Element& g, const RationalQuaternion& q1,
                      const RationalQuaternion& q2) {
  return in_x7(embed_su2(q1) * g * embed_su2(q2));
}

KForm expected_identity_restriction() {
  KForm w(7, 3);
  RealScalar r = inv_sqrt2();
  auto put = [&w](int i, int j, int k, const RealScalar& c) {
    w.set_term(blade::from_indices({i, j, k}, 7), c);
  };
  put(1, 2, 3, RealScalar::sqrt2());
  put(1, 4, 5, -r);
  put(1, 6, 7, r);
  put(2, 4, 6, -r);
  put(2, 5, 7, -r);
  put(3, 4, 7, -r);
  put(3, 5, 6, r);
  return w;
}

// Sampling ---------------------------------------------------------------

namespace {

// splitmix64; fixed here so reports are reproducible independent of any
// library's generator choices.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SampleStream::SampleStream(std::uint64_t seed)
    : state_(seed), special_head_(seed == 0) {}

std::uint64_t SampleStream::raw() { return splitmix64(state_); }

Rational SampleStream::next_rational() {
  // Numerator in [-50, 50], denominator in [1, 50].
  long num = (long)(raw() % 101) - 50;
  long den = (long)(raw() % 50) + 1;
  return rat(num, den);
}

SampleParams SampleStream::next() {
  if (special_head_ && emitted_ < 4) {
    static const CirclePoint head[4] = {
        CirclePoint::one(),
        CirclePoint{rat(3, 5), rat(4, 5)},
        CirclePoint{rat(5, 13), rat(12, 13)},
        CirclePoint{rat(-1, 1), rat(0, 1)},
    };
    return {RationalQuaternion::one(), head[emitted_++],
            RationalQuaternion::one()};
  }
  SampleParams p;
  p.q1 = RationalQuaternion::cayley(next_rational(), next_rational(),
                                    next_rational());
  p.p = CirclePoint::tangent_half(next_rational());
  p.q2 = RationalQuaternion::cayley(next_rational(), next_rational(),
                                    next_rational());
  return p;
}

VerifyRun run_verification(const VerifyOptions& opts) {
  if (opts.samples < 1) throw InputError("samples must be >= 1");
  VerifyRun run;
  run.seed = opts.seed;
  run.identity_restriction_matches =
      restrict_cartan(SU3Element::identity()) == expected_identity_restriction();

  SampleStream stream(opts.seed);
  bool all_split = true;
  for (int i = 0; i < opts.samples; ++i) {
    SampleResult r;
    r.index = i;
    r.params = stream.next();
    SU3Element g = sample_point(r.params.q1, r.params.p, r.params.q2);
    r.in_x7 = in_x7(g);
    TangentFrame frame = tangent_frame(g);
    r.tangent_rank = (int)Matrix::from_rows(frame.vectors).rank();
    r.report = verify_at(g);
    all_split &= r.in_x7 && r.tangent_rank == 7 &&
                 r.report.verdict == Verdict::SplitStable;
    run.results.push_back(std::move(r));
  }
  run.all_split_stable = all_split;

  // Left-translation identity on a seeded family of SO(2)^1 points.
  std::uint64_t tstate = opts.seed ^ 0x6c62272e07bb0142ULL;
  run.translate_points = opts.translate_points;
  run.translate_checks_pass = true;
  for (int i = 0; i < opts.translate_points; ++i) {
    long num = (long)(splitmix64(tstate) % 101) - 50;
    long den = (long)(splitmix64(tstate) % 50) + 1;
    CirclePoint p = CirclePoint::tangent_half(rat(num, den));
    run.translate_checks_pass &= translate_check(p);
  }
  return run;
}

}  // namespace g2f
