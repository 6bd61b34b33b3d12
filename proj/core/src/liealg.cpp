#include "g2forms/liealg.hpp"

#include <cassert>

namespace g2f {

namespace {

RVector zero_vec(int n) { return RVector(n); }

RVector scale(const RVector& v, const RealScalar& c) {
  RVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

void add_scaled(RVector& acc, const RVector& v, const RealScalar& c) {
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i] * c;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, BracketTable brackets,
                       std::vector<std::string> labels,
                       std::vector<CMatrix3> realization)
    : dim_(dim),
      brackets_(std::move(brackets)),
      labels_(std::move(labels)),
      realization_(std::move(realization)) {
  if (dim < 0) throw InputError("negative dimension");
  for (const auto& [ij, c] : brackets_) {
    if (ij.first < 1 || ij.second <= ij.first || ij.second > dim)
      throw InputError("bracket table keys must satisfy 1 <= i < j <= dim");
    if ((int)c.size() != dim)
      throw InputError("bracket coefficient vector has wrong length");
  }
  if (!realization_.empty() && (int)realization_.size() != dim)
    throw InputError("realization size must equal dim");
}

RVector LieAlgebra::bracket_basis(int i, int j) const {
  assert(1 <= i && i <= dim_ && 1 <= j && j <= dim_);
  if (i == j) return zero_vec(dim_);
  if (i > j) return scale(bracket_basis(j, i), RealScalar(-1));
  auto it = brackets_.find({i, j});
  return it == brackets_.end() ? zero_vec(dim_) : it->second;
}

RVector LieAlgebra::bracket(const RVector& x, const RVector& y) const {
  if ((int)x.size() != dim_ || (int)y.size() != dim_)
    throw InputError("bracket: dimension mismatch");
  RVector out = zero_vec(dim_);
  for (const auto& [ij, c] : brackets_) {
    const int i = ij.first - 1, j = ij.second - 1;
    RealScalar f = x[i] * y[j] - x[j] * y[i];
    if (!f.is_zero()) add_scaled(out, c, f);
  }
  return out;
}

CMatrix3 LieAlgebra::realize(const RVector& x) const {
  assert(has_realization() && (int)x.size() == dim_);
  CMatrix3 m;
  for (int l = 0; l < dim_; ++l) {
    if (x[l].is_zero()) continue;
    m = m + realization_[l] * ComplexScalar(x[l]);
  }
  return m;
}

bool jacobi_check(const LieAlgebra& g) {
  const int n = g.dim();
  auto unit = [n](int k) {
    RVector v(n);
    v[k - 1] = RealScalar(1);
    return v;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        RVector s = g.bracket(g.bracket_basis(i, j), unit(k));
        add_scaled(s, g.bracket(g.bracket_basis(j, k), unit(i)), RealScalar(1));
        add_scaled(s, g.bracket(g.bracket_basis(k, i), unit(j)), RealScalar(1));
        for (const auto& v : s)
          if (!v.is_zero()) return false;
      }
  return true;
}

Matrix killing_form(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<Matrix> ad(n, Matrix(n, n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      RVector c = g.bracket_basis(i, j);
      for (int l = 0; l < n; ++l) ad[i - 1](l, j - 1) = c[l];
    }
  Matrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Matrix prod = ad[i] * ad[j];
      RealScalar tr;
      for (int l = 0; l < n; ++l) tr += prod(l, l);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return k;
}

bool is_semisimple(const LieAlgebra& g) {
  return killing_form(g).rank() == (std::size_t)g.dim();
}

bool is_ad_invariant(const LieAlgebra& g, const Matrix& metric) {
  const int n = g.dim();
  auto pair = [&](const RVector& x, int j) {
    RealScalar s;
    for (int l = 0; l < n; ++l) s += x[l] * metric(l, j);
    return s;
  };
  for (int z = 1; z <= n; ++z)
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        RealScalar lhs = pair(g.bracket_basis(z, i), j - 1) +
                         pair(g.bracket_basis(z, j), i - 1);
        if (!lhs.is_zero()) return false;
      }
  return true;
}

Matrix negative_trace_form(const LieAlgebra& g) {
  if (!g.has_realization())
    throw InputError("negative_trace_form requires a matrix realization");
  const int n = g.dim();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ComplexScalar tr = (g.realization()[i] * g.realization()[j]).trace();
      if (!tr.is_real())
        throw InternalCheckError("trace form of realization is not real");
      m(i, j) = -tr.re();
      m(j, i) = -tr.re();
    }
  return m;
}

KForm cartan_3form(const LieAlgebra& g, const Matrix& metric) {
  const int n = g.dim();
  if (n > kMaxDim) throw InputError("algebra dimension exceeds form support");
  if ((int)metric.rows() != n || (int)metric.cols() != n ||
      !metric.is_symmetric())
    throw InputError("cartan_3form: metric must be symmetric dim x dim");
  if (!is_ad_invariant(g, metric))
    throw InputError("cartan_3form: metric is not ad-invariant");
  auto phi = [&](int i, int j, int k) {
    RVector c = g.bracket_basis(j, k);
    RealScalar s;
    for (int l = 0; l < n; ++l) s += metric(i - 1, l) * c[l];
    return s;
  };
  // Antisymmetry in all slots follows from ad-invariance; verify anyway.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (!(phi(i, j, k) + phi(j, i, k)).is_zero() ||
            !(phi(i, j, k) + phi(i, k, j)).is_zero())
          throw InternalCheckError("cartan_3form: value is not alternating");
      }
  KForm w(n, 3);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        w.set_term(blade::from_indices({i, j, k}, n), phi(i, j, k));
  return w;
}

KForm ce_differential(const LieAlgebra& g, const KForm& w) {
  const int n = g.dim();
  if (w.dim() != n) throw InputError("ce_differential: dimension mismatch");
  if (w.degree() >= n) throw InputError("ce_differential: degree out of range");
  const int k = w.degree();
  KForm out(n, k + 1);
  for (Blade s : blade::enumerate(n, k + 1)) {
    std::vector<int> idx = blade::to_indices(s);
    RealScalar total;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        RVector c = g.bracket_basis(idx[a], idx[b]);
        Blade rest = Blade(s & ~(Blade(1) << (idx[a] - 1)) &
                           ~(Blade(1) << (idx[b] - 1)));
        RealScalar val;
        for (int l = 1; l <= n; ++l) {
          if (c[l - 1].is_zero()) continue;
          Blade lb = Blade(1) << (l - 1);
          if (rest & lb) continue;
          // Insert e_l in front, then sort it into place.
          int sign = blade::removal_sign(Blade(rest | lb), l);
          RealScalar coeff = w.coeff(Blade(rest | lb));
          if (coeff.is_zero()) continue;
          val += c[l - 1] * (sign > 0 ? coeff : -coeff);
        }
        if (((a + b) % 2) == 0)
          total += val;
        else
          total -= val;
      }
    out.set_term(s, total);
  }
  return out;
}

std::optional<RVector> coordinates_of(const LieAlgebra& g, const CMatrix3& m) {
  if (!g.has_realization())
    throw InputError("coordinates_of requires a matrix realization");
  const int n = g.dim();
  // 18 real equations (re and im of each entry), unknowns in Q(sqrt 2).
  Matrix sys(18, n);
  RVector rhs(18);
  for (int e = 0; e < 9; ++e) {
    const int i = e / 3, j = e % 3;
    for (int l = 0; l < n; ++l) {
      sys(2 * e, l) = g.realization()[l](i, j).re();
      sys(2 * e + 1, l) = g.realization()[l](i, j).im();
    }
    rhs[2 * e] = m(i, j).re();
    rhs[2 * e + 1] = m(i, j).im();
  }
  auto sol = sys.solve(rhs);
  if (!sol) return std::nullopt;
  if (!(g.realize(*sol) == m)) return std::nullopt;
  return sol;
}

namespace {

ComplexScalar half_sqrt2_i() {
  // i / sqrt(2) = (sqrt2 / 2) i
  return ComplexScalar(RealScalar(0), RealScalar(Rational(0), rat(1, 2)));
}

ComplexScalar half_sqrt2() {
  return ComplexScalar(RealScalar(Rational(0), rat(1, 2)));
}

std::vector<CMatrix3> su3_basis_matrices() {
  auto e = [](int i, int j) { return CMatrix3::unit(i, j); };
  std::vector<CMatrix3> b;
  b.push_back((e(2, 2) - e(3, 3)) * half_sqrt2_i());            // delta_1
  b.push_back((e(2, 3) - e(3, 2)) * half_sqrt2());              // delta_2
  b.push_back((e(2, 3) + e(3, 2)) * half_sqrt2_i());            // delta_3
  b.push_back((e(1, 2) - e(2, 1)) * half_sqrt2());              // f_1
  b.push_back((e(1, 2) + e(2, 1)) * half_sqrt2_i());            // f_2
  b.push_back((e(1, 3) - e(3, 1)) * half_sqrt2());              // f_3
  b.push_back((e(1, 3) + e(3, 1)) * half_sqrt2_i());            // f_4
  // Unnormalized completion of the basis; i(2 e11 - e22 - e33).
  b.push_back((e(1, 1) * ComplexScalar(2) - e(2, 2) - e(3, 3)) *
              ComplexScalar::i());
  return b;
}

LieAlgebra from_matrices(std::vector<CMatrix3> basis,
                         std::vector<std::string> labels) {
  const int n = (int)basis.size();
  // Derive structure constants by expressing each commutator in the basis.
  LieAlgebra::BracketTable table;
  LieAlgebra span(n, {}, {}, basis);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      CMatrix3 c = basis[i - 1].commutator(basis[j - 1]);
      auto coords = coordinates_of(span, c);
      if (!coords)
        throw InternalCheckError("matrix basis is not closed under bracket");
      bool zero = true;
      for (const auto& v : *coords) zero &= v.is_zero();
      if (!zero) table[{i, j}] = *coords;
    }
  return LieAlgebra(n, std::move(table), std::move(labels), std::move(basis));
}

}  // namespace

LieAlgebra build_su2() {
  auto all = su3_basis_matrices();
  return from_matrices({all[0], all[1], all[2]}, {"d1", "d2", "d3"});
}

LieAlgebra build_su3() {
  return from_matrices(su3_basis_matrices(),
                       {"d1", "d2", "d3", "f1", "f2", "f3", "f4", "xi"});
}

LieAlgebra build_abelian(int dim) { return LieAlgebra(dim, {}); }

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const int n = a.dim() + b.dim();
  LieAlgebra::BracketTable table;
  for (const auto& [ij, c] : a.brackets()) {
    RVector v(n);
    for (int l = 0; l < a.dim(); ++l) v[l] = c[l];
    table[ij] = v;
  }
  for (const auto& [ij, c] : b.brackets()) {
    RVector v(n);
    for (int l = 0; l < b.dim(); ++l) v[a.dim() + l] = c[l];
    table[{ij.first + a.dim(), ij.second + a.dim()}] = v;
  }
  return LieAlgebra(n, std::move(table));
}

}  // namespace g2f
