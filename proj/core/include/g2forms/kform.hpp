#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "g2forms/linalg.hpp"
#include "g2forms/scalar.hpp"

namespace g2f {

// A basis blade e_{i1} ^ ... ^ e_{ik}, i1 < ... < ik, stored as a bitmask
// with bit (i-1) set for 1-based index i.  Space dimension is capped at 12.
using Blade = std::uint16_t;

inline constexpr int kMaxDim = 12;

namespace blade {

Blade from_indices(const std::vector<int>& indices, int dim);
std::vector<int> to_indices(Blade b);
int size(Blade b);

// Sign of merging two disjoint sorted blades a, b into sorted order:
// (-1)^{#(i,j) : i in a, j in b, i > j}.  Zero is not handled here; caller
// checks disjointness.
int merge_sign(Blade a, Blade b);

// Removing 1-based index i from blade b: (-1)^{#indices of b below i}.
int removal_sign(Blade b, int i);

// All blades of the given size on dim indices, in increasing mask order.
std::vector<Blade> enumerate(int dim, int size);

}  // namespace blade

using LinearMap = Matrix;

// Alternating k-form on an n-dimensional space, sparse over basis blades.
// Zero coefficients are never stored, so equality is map equality.
class KForm {
 public:
  KForm(int dim, int degree);

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  const std::map<Blade, RealScalar>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  RealScalar coeff(Blade b) const;
  void add_term(Blade b, const RealScalar& c);
  void set_term(Blade b, const RealScalar& c);

  KForm operator+(const KForm& o) const;
  KForm operator-(const KForm& o) const;
  KForm operator-() const;
  KForm operator*(const RealScalar& c) const;
  bool operator==(const KForm& o) const = default;

 private:
  int dim_, degree_;
  std::map<Blade, RealScalar> terms_;
};

KForm wedge(const KForm& a, const KForm& b);

// Interior product x -| w.
KForm contract(const RVector& x, const KForm& w);
KForm contract_basis(int i, const KForm& w);

// Matrix of the map v -> (v -| w) from V^n to Lambda^{k-1}, with rows
// indexed by (k-1)-blades in increasing mask order and columns by basis
// vectors; C(n, k-1) x n.
Matrix interior_matrix(const KForm& w);

// True iff the interior map is injective (exact rank n).
bool is_multisymplectic(const KForm& w);

// (g*w)(x_1,...,x_k) = w(g x_1, ..., g x_k).
KForm pullback(const LinearMap& g, const KForm& w);

RealScalar eval(const KForm& w, std::span<const RVector> args);

// The reference split-type 3-form on V^7 in the basis order
// (theta_1, theta_2, theta_3, y_1, y_2, y_3, y_4) = (e1, ..., e7).
KForm canonical_split_g2();

}  // namespace g2f
