#include "g2forms/kform.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace g2f {

namespace blade {

Blade from_indices(const std::vector<int>& indices, int dim) {
  Blade b = 0;
  int prev = 0;
  for (int i : indices) {
    if (i <= prev || i > dim)
      throw InputError("indices must be strictly increasing and in range");
    b |= Blade(1) << (i - 1);
    prev = i;
  }
  return b;
}

std::vector<int> to_indices(Blade b) {
  std::vector<int> out;
  for (int i = 0; i < kMaxDim; ++i)
    if (b & (Blade(1) << i)) out.push_back(i + 1);
  return out;
}

int size(Blade b) { return std::popcount(b); }

int merge_sign(Blade a, Blade b) {
  int inversions = 0;
  for (int j = 0; j < kMaxDim; ++j)
    if (b & (Blade(1) << j))
      inversions += std::popcount(Blade(a >> (j + 1)));
  return inversions % 2 == 0 ? 1 : -1;
}

int removal_sign(Blade b, int i) {
  Blade below = Blade(b & ((Blade(1) << (i - 1)) - 1));
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

std::vector<Blade> enumerate(int dim, int size) {
  std::vector<Blade> out;
  for (Blade b = 0; b < (Blade(1) << dim); ++b)
    if (std::popcount(b) == size) out.push_back(b);
  return out;
}

}  // namespace blade

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxDim) throw InputError("dimension out of range");
  if (degree < 0 || degree > dim) throw InputError("degree out of range");
}

RealScalar KForm::coeff(Blade b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? RealScalar(0) : it->second;
}

void KForm::add_term(Blade b, const RealScalar& c) {
  assert(blade::size(b) == degree_);
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void KForm::set_term(Blade b, const RealScalar& c) {
  assert(blade::size(b) == degree_);
  if (c.is_zero())
    terms_.erase(b);
  else
    terms_[b] = c;
}

KForm KForm::operator+(const KForm& o) const {
  assert(dim_ == o.dim_ && degree_ == o.degree_);
  KForm out = *this;
  for (const auto& [b, c] : o.terms_) out.add_term(b, c);
  return out;
}

KForm KForm::operator-(const KForm& o) const { return *this + (-o); }

KForm KForm::operator-() const {
  KForm out(dim_, degree_);
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

KForm KForm::operator*(const RealScalar& c) const {
  KForm out(dim_, degree_);
  if (c.is_zero()) return out;
  for (const auto& [b, v] : terms_) out.terms_.emplace(b, v * c);
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw InputError("wedge: dimension mismatch");
  if (a.degree() + b.degree() > a.dim())
    throw InputError("wedge: degree exceeds dimension");
  KForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      if (ba & bb) continue;
      int s = blade::merge_sign(ba, bb);
      RealScalar c = ca * cb;
      out.add_term(Blade(ba | bb), s > 0 ? c : -c);
    }
  return out;
}

KForm contract_basis(int i, const KForm& w) {
  if (w.degree() < 1) throw InputError("contract: degree must be >= 1");
  KForm out(w.dim(), w.degree() - 1);
  Blade bit = Blade(1) << (i - 1);
  for (const auto& [b, c] : w.terms()) {
    if (!(b & bit)) continue;
    int s = blade::removal_sign(b, i);
    out.add_term(Blade(b & ~bit), s > 0 ? c : -c);
  }
  return out;
}

KForm contract(const RVector& x, const KForm& w) {
  if ((int)x.size() != w.dim()) throw InputError("contract: dimension mismatch");
  KForm out(w.dim(), w.degree() - 1);
  for (int i = 1; i <= w.dim(); ++i) {
    if (x[i - 1].is_zero()) continue;
    KForm part = contract_basis(i, w);
    for (const auto& [b, c] : part.terms()) out.add_term(b, x[i - 1] * c);
  }
  return out;
}

Matrix interior_matrix(const KForm& w) {
  if (w.degree() < 1) throw InputError("interior_matrix: degree must be >= 1");
  std::vector<Blade> rows = blade::enumerate(w.dim(), w.degree() - 1);
  Matrix m(rows.size(), w.dim());
  for (int j = 1; j <= w.dim(); ++j) {
    KForm col = contract_basis(j, w);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      RealScalar c = col.coeff(rows[r]);
      if (!c.is_zero()) m(r, j - 1) = c;
    }
  }
  return m;
}

bool is_multisymplectic(const KForm& w) {
  return interior_matrix(w).rank() == (std::size_t)w.dim();
}

KForm pullback(const LinearMap& g, const KForm& w) {
  if ((int)g.rows() != w.dim() || (int)g.cols() != w.dim())
    throw InputError("pullback: map shape mismatch");
  std::vector<RVector> cols(w.dim());
  for (int j = 0; j < w.dim(); ++j) cols[j] = g.col(j);
  KForm out(w.dim(), w.degree());
  for (Blade b : blade::enumerate(w.dim(), w.degree())) {
    std::vector<RVector> args;
    for (int i : blade::to_indices(b)) args.push_back(cols[i - 1]);
    RealScalar c = eval(w, args);
    if (!c.is_zero()) out.set_term(b, c);
  }
  return out;
}

RealScalar eval(const KForm& w, std::span<const RVector> args) {
  if ((int)args.size() != w.degree())
    throw InputError("eval: argument count must equal degree");
  KForm cur = w;
  for (const RVector& x : args) {
    if ((int)x.size() != w.dim()) throw InputError("eval: dimension mismatch");
    cur = contract(x, cur);
  }
  return cur.coeff(0);
}

KForm canonical_split_g2() {
  KForm w(7, 3);
  auto put = [&w](int i, int j, int k, long c) {
    w.set_term(blade::from_indices({i, j, k}, 7), RealScalar(c));
  };
  // theta^123 + alpha_i ^ theta_i with alpha_1 = y12 + y34,
  // alpha_2 = y13 - y24, alpha_3 = y14 + y23; (y_a ^ y_b) ^ theta_i carries
  // sign +1 after sorting theta_i in front.
  put(1, 2, 3, 1);
  put(1, 4, 5, 1);
  put(1, 6, 7, 1);
  put(2, 4, 6, 1);
  put(2, 5, 7, -1);
  put(3, 4, 7, 1);
  put(3, 5, 6, 1);
  return w;
}

}  // namespace g2f
