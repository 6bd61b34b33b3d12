#include <doctest.h>

#include "g2forms/linalg.hpp"
#include "test_util.hpp"

using namespace g2f;

namespace {

Matrix mat(std::vector<std::vector<long>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = RealScalar(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("rank and determinant on known matrices") {
  CHECK(Matrix::identity(4).rank() == 4);
  CHECK(Matrix::identity(4).det() == RealScalar(1));
  CHECK(mat({{1, 2}, {2, 4}}).rank() == 1);
  CHECK(mat({{1, 2}, {2, 4}}).det() == RealScalar(0));
  CHECK(mat({{0, 1}, {1, 0}}).det() == RealScalar(-1));
  CHECK(mat({{2, 0, 1}, {0, 3, 0}, {1, 0, 1}}).det() == RealScalar(3));
  CHECK(Matrix(3, 5).rank() == 0);
}

TEST_CASE("determinant with irrational entries is exact") {
  // det [[sqrt2, 1], [1, sqrt2]] = 2 - 1 = 1.
  Matrix m(2, 2);
  m(0, 0) = m(1, 1) = RealScalar::sqrt2();
  m(0, 1) = m(1, 0) = RealScalar(1);
  CHECK(m.det() == RealScalar(1));
  CHECK(m.rank() == 2);
  // [[1, sqrt2], [sqrt2, 2]] is singular.
  m(0, 0) = RealScalar(1);
  m(1, 1) = RealScalar(2);
  m(0, 1) = m(1, 0) = RealScalar::sqrt2();
  CHECK(m.det() == RealScalar(0));
  CHECK(m.rank() == 1);
}

TEST_CASE("determinant is multiplicative") {
  test::Rng rng(21);
  for (int i = 0; i < 20; ++i) {
    Matrix a = rng.matrix(4, 4), b = rng.matrix(4, 4);
    CHECK((a * b).det() == a.det() * b.det());
    CHECK(a.transpose().det() == a.det());
  }
}

TEST_CASE("null space spans the kernel exactly") {
  test::Rng rng(22);
  for (int i = 0; i < 20; ++i) {
    Matrix m = rng.matrix(3, 6);
    auto basis = m.null_space();
    CHECK(basis.size() == 6 - m.rank());
    for (const auto& v : basis) {
      RVector mv = m * v;
      for (const auto& c : mv) CHECK(c.is_zero());
    }
    CHECK(Matrix::from_rows(basis).rank() == basis.size());
  }
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
  test::Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    Matrix m = rng.matrix(4, 4);
    RVector x = rng.vector(4);
    RVector b = m * x;
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    RVector mb = m * *sol;
    for (std::size_t j = 0; j < 4; ++j) CHECK(mb[j] == b[j]);
  }
  // x + y = 1, x + y = 2 is inconsistent.
  Matrix m = mat({{1, 1}, {1, 1}});
  CHECK_FALSE(m.solve({RealScalar(1), RealScalar(2)}).has_value());
}

TEST_CASE("rref has unit pivots and identifies pivot columns") {
  Matrix m = mat({{0, 2, 4}, {1, 1, 1}});
  std::vector<std::size_t> pivots;
  Matrix r = m.rref(&pivots);
  REQUIRE(pivots.size() == 2);
  CHECK(pivots[0] == 0);
  CHECK(pivots[1] == 1);
  CHECK(r(0, 0) == RealScalar(1));
  CHECK(r(1, 1) == RealScalar(1));
  CHECK(r(0, 1) == RealScalar(0));
}
