#include "g2forms/cmatrix.hpp"

#include <cassert>

namespace g2f {

CMatrix3 CMatrix3::identity() {
  CMatrix3 m;
  for (int i = 0; i < 3; ++i) m(i, i) = ComplexScalar(1);
  return m;
}

CMatrix3 CMatrix3::unit(int i, int j) {
  assert(1 <= i && i <= 3 && 1 <= j && j <= 3);
  CMatrix3 m;
  m(i - 1, j - 1) = ComplexScalar(1);
  return m;
}

CMatrix3 CMatrix3::operator+(const CMatrix3& o) const {
  CMatrix3 out;
  for (int i = 0; i < 9; ++i) out.m_[i] = m_[i] + o.m_[i];
  return out;
}

CMatrix3 CMatrix3::operator-(const CMatrix3& o) const {
  CMatrix3 out;
  for (int i = 0; i < 9; ++i) out.m_[i] = m_[i] - o.m_[i];
  return out;
}

CMatrix3 CMatrix3::operator-() const {
  CMatrix3 out;
  for (int i = 0; i < 9; ++i) out.m_[i] = -m_[i];
  return out;
}

CMatrix3 CMatrix3::operator*(const CMatrix3& o) const {
  CMatrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ComplexScalar s;
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
      out(i, j) = s;
    }
  return out;
}

CMatrix3 CMatrix3::operator*(const ComplexScalar& c) const {
  CMatrix3 out;
  for (int i = 0; i < 9; ++i) out.m_[i] = m_[i] * c;
  return out;
}

CMatrix3 CMatrix3::commutator(const CMatrix3& o) const {
  return *this * o - o * *this;
}

CMatrix3 CMatrix3::dagger() const {
  CMatrix3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = (*this)(j, i).conj();
  return out;
}

ComplexScalar CMatrix3::trace() const {
  return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2);
}

ComplexScalar CMatrix3::det() const {
  const CMatrix3& m = *this;
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool CMatrix3::is_antihermitian() const {
  return dagger() == -*this;
}

}  // namespace g2f
