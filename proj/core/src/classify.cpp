#include "g2forms/classify.hpp"

#include <cassert>

namespace g2f {

namespace {

constexpr int kDim = 7;
constexpr Blade kVolume = (1 << kDim) - 1;

void require_3form_on_v7(const KForm& w, const char* who) {
  if (w.dim() != kDim || w.degree() != 3)
    throw InputError(std::string(who) + ": expected a 3-form on V^7");
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::DefiniteStable: return "DefiniteStable";
    case Verdict::SplitStable: return "SplitStable";
    case Verdict::NotStable: return "NotStable";
  }
  return "?";
}

Matrix b_matrix(const KForm& w) {
  require_3form_on_v7(w, "b_matrix");
  std::vector<KForm> contractions;
  for (int i = 1; i <= kDim; ++i) contractions.push_back(contract_basis(i, w));
  Matrix b(kDim, kDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      RealScalar c =
          wedge(wedge(contractions[i], contractions[j]), w).coeff(kVolume);
      b(i, j) = c;
      b(j, i) = c;
    }
  return b;
}

Signature signature(const Matrix& m) {
  if (!m.is_symmetric()) throw InputError("signature: matrix not symmetric");
  Matrix a = m;
  const std::size_t n = a.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      // Prefer a later nonzero diagonal entry; otherwise create one from a
      // nonzero off-diagonal pair (the basis change e_k += e_j doubles the
      // cross term onto the diagonal, fine in characteristic zero).
      std::size_t d = k;
      while (d < n && a(d, d).is_zero()) ++d;
      if (d < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(d, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, d));
      } else {
        std::size_t j = k + 1;
        while (j < n && a(k, j).is_zero()) ++j;
        if (j == n) {
          ++sig.zero;
          continue;
        }
        for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
        for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
      }
    }
    const RealScalar pivot = a(k, k);
    assert(!pivot.is_zero());
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      RealScalar f = a(i, k) / pivot;
      for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
      for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
    }
    if (pivot.sign() > 0)
      ++sig.pos;
    else
      ++sig.neg;
  }
  return sig;
}

std::vector<Matrix> stabilizer(const KForm& w) {
  require_3form_on_v7(w, "stabilizer");
  // Unknowns A[l][m], column-major index m*7 + l; one equation per 3-blade.
  std::vector<Blade> triples = blade::enumerate(kDim, 3);
  auto value = [&w](int a, int b, int c) -> RealScalar {
    // w(e_a, e_b, e_c) for arbitrary order, 1-based.
    if (a == b || a == c || b == c) return RealScalar(0);
    int idx[3] = {a, b, c};
    int sign = 1;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2 - i; ++j)
        if (idx[j] > idx[j + 1]) {
          std::swap(idx[j], idx[j + 1]);
          sign = -sign;
        }
    RealScalar c0 = w.coeff(blade::from_indices({idx[0], idx[1], idx[2]}, kDim));
    return sign > 0 ? c0 : -c0;
  };
  Matrix sys(triples.size(), kDim * kDim);
  for (std::size_t t = 0; t < triples.size(); ++t) {
    std::vector<int> ijk = blade::to_indices(triples[t]);
    const int i = ijk[0], j = ijk[1], k = ijk[2];
    for (int l = 1; l <= kDim; ++l) {
      sys(t, (i - 1) * kDim + (l - 1)) += value(l, j, k);
      sys(t, (j - 1) * kDim + (l - 1)) += value(i, l, k);
      sys(t, (k - 1) * kDim + (l - 1)) += value(i, j, l);
    }
  }
  std::vector<Matrix> basis;
  for (const RVector& v : sys.null_space()) {
    Matrix a(kDim, kDim);
    for (int m = 0; m < kDim; ++m)
      for (int l = 0; l < kDim; ++l) a(l, m) = v[m * kDim + l];
    basis.push_back(std::move(a));
  }
  return basis;
}

TypeReport classify(const KForm& w) {
  require_3form_on_v7(w, "classify");
  Matrix b = b_matrix(w);
  Signature sig = signature(b);
  TypeReport report;
  report.signature = sig;
  report.b_rank = sig.pos + sig.neg;
  report.stabilizer_dim = (int)stabilizer(w).size();
  if (report.b_rank < kDim) {
    report.verdict = Verdict::NotStable;
    return report;
  }
  if (sig.pos == kDim || sig.neg == kDim)
    report.verdict = Verdict::DefiniteStable;
  else if ((sig.pos == 3 && sig.neg == 4) || (sig.pos == 4 && sig.neg == 3))
    report.verdict = Verdict::SplitStable;
  else
    throw InternalCheckError(
        "classify: nondegenerate B with unexpected signature (" +
        std::to_string(sig.pos) + "," + std::to_string(sig.neg) + ")");
  // Independent cross-check: a stable form has a 14-dimensional isotropy
  // algebra.
  if (report.stabilizer_dim != 14)
    throw InternalCheckError(
        "classify: signature says stable but stabilizer dimension is " +
        std::to_string(report.stabilizer_dim));
  return report;
}

}  // namespace g2f
