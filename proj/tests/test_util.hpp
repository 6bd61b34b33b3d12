#pragma once

#include <cstdint>

#include "g2forms/linalg.hpp"

namespace g2f::test {

// Small deterministic generator so property tests are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t raw() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + (long)(raw() % (std::uint64_t)(hi - lo + 1));
  }

  Rational rational(long bound = 5) {
    return rat(range(-bound, bound), range(1, bound));
  }

  RealScalar scalar(long bound = 5) {
    return RealScalar(rational(bound), rational(bound));
  }

  RealScalar nonzero_scalar(long bound = 5) {
    for (;;) {
      RealScalar s = scalar(bound);
      if (!s.is_zero()) return s;
    }
  }

  RVector vector(int n, long bound = 5) {
    RVector v(n);
    for (auto& x : v) x = scalar(bound);
    return v;
  }

  Matrix matrix(int rows, int cols, long bound = 3) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = RealScalar(range(-bound, bound));
    return m;
  }

  Matrix invertible(int n, long bound = 3) {
    for (;;) {
      Matrix m = matrix(n, n, bound);
      if (!m.det().is_zero()) return m;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace g2f::test
