#include "g2forms/linalg.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace g2f {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RealScalar(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<RVector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == m.cols_);
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::diagonal(const RVector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RVector Matrix::row(std::size_t i) const {
  RVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RVector Matrix::col(std::size_t j) const {
  RVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const RealScalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out(i, j) += a * o(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = data_[i] - o.data_[i];
  return out;
}

Matrix Matrix::operator*(const RealScalar& c) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * c;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

std::size_t Matrix::rank() const {
  // Bareiss elimination: every division is exact, intermediate entries stay
  // minors of the original matrix.
  Matrix m = *this;
  RealScalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m(piv, j), m(r, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = c + 1; j < cols_; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = RealScalar(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

RealScalar Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  if (rows_ == 0) return RealScalar(1);
  Matrix m = *this;
  RealScalar prev(1);
  int sign = 1;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::size_t piv = r;
    while (piv < rows_ && m(piv, r).is_zero()) ++piv;
    if (piv == rows_) return RealScalar(0);
    if (piv != r) {
      sign = -sign;
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m(piv, j), m(r, j));
    }
    for (std::size_t i = r + 1; i < rows_; ++i) {
      for (std::size_t j = r + 1; j < cols_; ++j)
        m(i, j) = (m(r, r) * m(i, j) - m(i, r) * m(r, j)) / prev;
      m(i, r) = RealScalar(0);
    }
    prev = m(r, r);
  }
  RealScalar d = m(rows_ - 1, rows_ - 1);
  return sign < 0 ? -d : d;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m(piv, j), m(r, j));
    RealScalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      RealScalar f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        m(i, j) = m(i, j) - f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::vector<RVector> Matrix::null_space() const {
  std::vector<std::size_t> pivots;
  Matrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RVector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    RVector v(cols_);
    v[f] = RealScalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RVector> Matrix::solve(const RVector& rhs) const {
  assert(rhs.size() == rows_);
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = rhs[i];
  }
  std::vector<std::size_t> pivots;
  Matrix r = aug.rref(&pivots);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  RVector x(cols_);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, cols_);
  return x;
}

RVector operator*(const Matrix& m, const RVector& v) {
  assert(v.size() == m.cols());
  RVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace g2f
