#include <doctest.h>

#include "g2forms/classify.hpp"
#include "test_util.hpp"

using namespace g2f;

namespace {

KForm definite_form() {
  // Reference 3-form with compact stabilizer: the pairing B is definite.
  KForm w(7, 3);
  auto put = [&w](int i, int j, int k, long c) {
    w.set_term(blade::from_indices({i, j, k}, 7), RealScalar(c));
  };
  put(1, 2, 3, 1);
  put(1, 4, 5, 1);
  put(1, 6, 7, 1);
  put(2, 4, 6, 1);
  put(2, 5, 7, -1);
  put(3, 4, 7, -1);
  put(3, 5, 6, -1);
  return w;
}

bool sig_is(const Signature& s, int a, int b) {
  return (s.pos == a && s.neg == b) || (s.pos == b && s.neg == a);
}

}  // namespace

TEST_CASE("split reference form") {
  TypeReport r = classify(canonical_split_g2());
  CHECK(r.verdict == Verdict::SplitStable);
  CHECK(sig_is(r.signature, 3, 4));
  CHECK(r.stabilizer_dim == 14);
  CHECK(r.b_rank == 7);
}

TEST_CASE("definite reference form") {
  TypeReport r = classify(definite_form());
  CHECK(r.verdict == Verdict::DefiniteStable);
  CHECK(sig_is(r.signature, 7, 0));
  CHECK(r.stabilizer_dim == 14);
  CHECK(r.b_rank == 7);
}

TEST_CASE("degenerate forms") {
  KForm e123(7, 3);
  e123.set_term(blade::from_indices({1, 2, 3}, 7), RealScalar(1));
  TypeReport r = classify(e123);
  CHECK(r.verdict == Verdict::NotStable);
  CHECK(r.b_rank == 0);
  CHECK(r.stabilizer_dim > 14);

  TypeReport z = classify(KForm(7, 3));
  CHECK(z.verdict == Verdict::NotStable);
  CHECK(z.stabilizer_dim == 49);
  CHECK(z.b_rank == 0);
}

TEST_CASE("B matrix is symmetric and covariant under scaling") {
  KForm w = canonical_split_g2();
  Matrix b = b_matrix(w);
  CHECK(b.is_symmetric());
  // B scales with the cube of the form.
  RealScalar c(rat(-3, 2));
  Matrix bc = b_matrix(w * c);
  CHECK(bc == b * (c * c * c));
}

TEST_CASE("signature via congruence diagonalization") {
  RVector d{RealScalar(2), RealScalar(-1), RealScalar(0), RealScalar::sqrt2()};
  Signature s = signature(Matrix::diagonal(d));
  CHECK(s.pos == 2);
  CHECK(s.neg == 1);
  CHECK(s.zero == 1);
  // Zero diagonal but nonzero matrix: [[0, 1], [1, 0]] has signature (1, 1).
  Matrix m(2, 2);
  m(0, 1) = m(1, 0) = RealScalar(1);
  Signature h = signature(m);
  CHECK(h.pos == 1);
  CHECK(h.neg == 1);
}

TEST_CASE("stabilizer elements annihilate the form") {
  KForm w = canonical_split_g2();
  auto basis = stabilizer(w);
  REQUIRE(basis.size() == 14);
  test::Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    // Random element a of the stabilizer: sum over basis of w evaluated on
    // (a x, y, z) + (x, a y, z) + (x, y, a z) must vanish for random x,y,z.
    Matrix a(7, 7);
    for (const auto& m : basis) a = a + m * rng.scalar(2);
    RVector x = rng.vector(7), y = rng.vector(7), z = rng.vector(7);
    std::vector<RVector> v1{a * x, y, z}, v2{x, a * y, z}, v3{x, y, a * z};
    CHECK((eval(w, v1) + eval(w, v2) + eval(w, v3)).is_zero());
  }
}

TEST_CASE("classification is invariant under pullback and scaling") {
  test::Rng rng(42);
  KForm w = canonical_split_g2();
  TypeReport base = classify(w);
  for (int i = 0; i < 5; ++i) {
    Matrix g = rng.invertible(7, 2);
    TypeReport r = classify(pullback(g, w));
    CHECK(r.verdict == base.verdict);
    CHECK(r.stabilizer_dim == 14);
    CHECK(sig_is(r.signature, 3, 4));

    RealScalar c = rng.nonzero_scalar();
    TypeReport s = classify(w * c);
    CHECK(s.verdict == base.verdict);
    CHECK(s.stabilizer_dim == 14);
  }
}
