#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2forms/cmatrix.hpp"
#include "g2forms/kform.hpp"
#include "g2forms/linalg.hpp"

namespace g2f {

// Finite-dimensional real Lie algebra given by structure constants over
// Q(sqrt 2).  Brackets are stored for basis pairs i < j only; antisymmetry
// is built into the storage.  A 3x3 matrix realization may be attached, in
// which case abstract brackets must equal matrix commutators (checked by
// the builders and tested).
class LieAlgebra {
 public:
  using BracketTable = std::map<std::pair<int, int>, RVector>;

  LieAlgebra(int dim, BracketTable brackets,
             std::vector<std::string> labels = {},
             std::vector<CMatrix3> realization = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_realization() const { return !realization_.empty(); }
  const std::vector<CMatrix3>& realization() const { return realization_; }
  const BracketTable& brackets() const { return brackets_; }

  // [e_i, e_j] in basis coordinates, any i, j (1-based).
  RVector bracket_basis(int i, int j) const;
  RVector bracket(const RVector& x, const RVector& y) const;

  // Realize a coordinate vector as a matrix (requires a realization).
  CMatrix3 realize(const RVector& x) const;

 private:
  int dim_;
  BracketTable brackets_;
  std::vector<std::string> labels_;
  std::vector<CMatrix3> realization_;
};

bool jacobi_check(const LieAlgebra& g);

// kappa(x, y) = trace(ad x . ad y) on basis pairs.
Matrix killing_form(const LieAlgebra& g);

// Cartan's criterion: the Killing form is nondegenerate.
bool is_semisimple(const LieAlgebra& g);

bool is_ad_invariant(const LieAlgebra& g, const Matrix& metric);

// The metric <x, y> = -trace(xy) of a matrix realization; makes the
// (delta, f) basis of su(3) orthonormal.
Matrix negative_trace_form(const LieAlgebra& g);

// phi(x, y, z) = <x, [y, z]>; requires metric symmetric and ad-invariant.
KForm cartan_3form(const LieAlgebra& g, const Matrix& metric);

// Chevalley-Eilenberg coboundary:
// (dw)(x_0..x_k) = sum_{i<j} (-1)^{i+j} w([x_i, x_j], x_0..^i..^j..x_k).
KForm ce_differential(const LieAlgebra& g, const KForm& w);

// Express an antihermitian 3x3 matrix in the basis of a realized algebra;
// nullopt if it lies outside the span.
std::optional<RVector> coordinates_of(const LieAlgebra& g, const CMatrix3& m);

LieAlgebra build_su2();
LieAlgebra build_su3();
LieAlgebra build_abelian(int dim);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace g2f
