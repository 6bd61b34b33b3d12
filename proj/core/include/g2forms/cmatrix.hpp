#pragma once

#include <array>

#include "g2forms/scalar.hpp"

namespace g2f {

// 3x3 matrix over Q(sqrt2, i); the ambient gl(C^3) that su(3) and the group
// elements live in.
class CMatrix3 {
 public:
  CMatrix3() = default;

  static CMatrix3 identity();
  // e_{ij} = e_i (e_j)^*, 1-based.
  static CMatrix3 unit(int i, int j);

  ComplexScalar& operator()(int i, int j) { return m_[i * 3 + j]; }
  const ComplexScalar& operator()(int i, int j) const { return m_[i * 3 + j]; }

  CMatrix3 operator+(const CMatrix3& o) const;
  CMatrix3 operator-(const CMatrix3& o) const;
  CMatrix3 operator-() const;
  CMatrix3 operator*(const CMatrix3& o) const;
  CMatrix3 operator*(const ComplexScalar& c) const;
  bool operator==(const CMatrix3& o) const = default;

  CMatrix3 commutator(const CMatrix3& o) const;
  CMatrix3 dagger() const;
  ComplexScalar trace() const;
  ComplexScalar det() const;

  bool is_antihermitian() const;

 private:
  std::array<ComplexScalar, 9> m_;
};

}  // namespace g2f
