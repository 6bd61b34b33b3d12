#pragma once

#include <string>
#include <vector>

#include "g2forms/kform.hpp"

namespace g2f {

enum class Verdict { DefiniteStable, SplitStable, NotStable };

std::string to_string(Verdict v);

struct Signature {
  int pos = 0, neg = 0, zero = 0;
};

// Classification result for a 3-form on V^7.  The signature is meaningful
// only up to swapping pos/neg (the pairing B depends on a choice of volume
// form, which flips the overall sign).
struct TypeReport {
  Verdict verdict;
  Signature signature;
  int stabilizer_dim;
  int b_rank;
};

// The Lambda^7-valued pairing B(x, y) = coefficient of e^{1...7} in
// (x -| w) ^ (y -| w) ^ w, the computable GL-orbit invariant separating the
// two stable types from the rest.
Matrix b_matrix(const KForm& w);

// Exact inertia of a symmetric matrix via congruence diagonalization
// (Sylvester's law of inertia).
Signature signature(const Matrix& m);

// Basis of the isotropy algebra {A in gl(7) : A.w = 0} for the derivation
// action (A.w)(x,y,z) = w(Ax,y,z) + w(x,Ay,z) + w(x,y,Az); dimension 14
// exactly when w is stable.
std::vector<Matrix> stabilizer(const KForm& w);

// Verdict from the signature of B, cross-checked against the stabilizer
// dimension; disagreement throws InternalCheckError.
TypeReport classify(const KForm& w);

}  // namespace g2f
