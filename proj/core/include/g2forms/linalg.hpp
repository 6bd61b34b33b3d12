#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "g2forms/scalar.hpp"

namespace g2f {

using RVector = std::vector<RealScalar>;

// Dense matrix over Q(sqrt 2).  All eliminations are exact; rank and
// determinant use fraction-free (Bareiss) elimination, solving and null
// spaces use reduced row echelon form with exact division.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RVector>& rows);
  static Matrix diagonal(const RVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RealScalar& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const RealScalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RVector row(std::size_t i) const;
  RVector col(std::size_t j) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const RealScalar& c) const;
  bool operator==(const Matrix& o) const = default;

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  std::size_t rank() const;
  RealScalar det() const;

  // Reduced row echelon form; pivot column indices appended to *pivots.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  // Basis of {x : Mx = 0}; free variables are set to 1 one at a time.
  std::vector<RVector> null_space() const;

  // A particular solution of Mx = b (free variables zero), or nullopt if
  // the system is inconsistent.
  std::optional<RVector> solve(const RVector& rhs) const;

 private:
  std::size_t rows_, cols_;
  std::vector<RealScalar> data_;
};

RVector operator*(const Matrix& m, const RVector& v);

}  // namespace g2f
