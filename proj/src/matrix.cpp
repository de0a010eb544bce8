#include "fflab/matrix.hpp"

#include <numeric>

namespace fflab {

MatKl MatKl::identity(const FqCtx& F, int n, long long ell) {
  MatKl m(F, n, n, ell);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentElem::one(F, ell);
  return m;
}

MatKl MatKl::with_ell(long long L) const {
  MatKl m(*F_, r_, c_, L);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].with_ell(std::lcm(a_[i].ell(), L));
  return m;
}

MatKl operator*(const MatKl& a, const MatKl& b) {
  if (a.c_ != b.r_) throw ParamError("matrix product shape mismatch");
  long long L = std::lcm(a.ell_, b.ell_);
  MatKl r(*a.F_, a.r_, b.c_, L);
  for (int i = 0; i < a.r_; ++i)
    for (int j = 0; j < b.c_; ++j) {
      LaurentElem acc = LaurentElem::zero(*a.F_, L);
      for (int k = 0; k < a.c_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

MatKl operator+(const MatKl& a, const MatKl& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw ParamError("matrix sum shape mismatch");
  MatKl r(*a.F_, a.r_, a.c_, std::lcm(a.ell_, b.ell_));
  for (int i = 0; i < a.r_; ++i)
    for (int j = 0; j < a.c_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

MatKl operator-(const MatKl& a, const MatKl& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw ParamError("matrix difference shape mismatch");
  MatKl r(*a.F_, a.r_, a.c_, std::lcm(a.ell_, b.ell_));
  for (int i = 0; i < a.r_; ++i)
    for (int j = 0; j < a.c_; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

bool operator==(const MatKl& a, const MatKl& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (int i = 0; i < a.r_; ++i)
    for (int j = 0; j < a.c_; ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

MatKl MatKl::transpose() const {
  MatKl r(*F_, c_, r_, ell_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<LaurentElem> MatKl::apply(const std::vector<LaurentElem>& v) const {
  if (static_cast<int>(v.size()) != c_) throw ParamError("matrix apply shape mismatch");
  std::vector<LaurentElem> r;
  r.reserve(r_);
  for (int i = 0; i < r_; ++i) {
    LaurentElem acc = LaurentElem::zero(*F_, ell_);
    for (int j = 0; j < c_; ++j) acc = acc + at(i, j) * v[j];
    r.push_back(acc);
  }
  return r;
}

LaurentElem MatKl::det() const {
  if (r_ != c_) throw ParamError("determinant of a non-square matrix");
  const int n = r_;
  // Laplace over column subsets, memoized: minors[mask] for the first
  // popcount(mask) rows and column set mask.  Exact; fine for n <= 6.
  std::vector<LaurentElem> memo(1u << n, LaurentElem::zero(*F_, ell_));
  memo[0] = LaurentElem::one(*F_, ell_);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int row = __builtin_popcount(mask) - 1;
    LaurentElem acc = LaurentElem::zero(*F_, ell_);
    int sign = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const LaurentElem& e = at(row, j);
      if (!e.is_zero()) {
        LaurentElem term = e * memo[mask & ~(1u << j)];
        acc = (sign % 2 == 0) ? acc + term : acc - term;
      }
      ++sign;
    }
    memo[mask] = acc;
  }
  return memo[(1u << n) - 1];
}

MatKl MatKl::inverse() const {
  if (r_ != c_) throw ParamError("inverse of a non-square matrix");
  LaurentElem D = det();
  if (D.is_zero()) throw SingularMatrix();
  // adj(g)/det(g): adjugate entries are polynomial in the entries, so the
  // inverse is finitely supported iff det is a unit (a monomial).
  LaurentElem Dinv = D.inv_monomial();
  const int n = r_;
  MatKl inv(*F_, n, n, ell_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // cofactor C_ji for adj_ij
      MatKl minor(*F_, n - 1, n - 1, ell_);
      for (int a = 0, ai = 0; a < n; ++a) {
        if (a == j) continue;
        for (int b = 0, bj = 0; b < n; ++b) {
          if (b == i) continue;
          minor.at(ai, bj) = at(a, b);
          ++bj;
        }
        ++ai;
      }
      LaurentElem c = (n == 1) ? LaurentElem::one(*F_, ell_) : minor.det();
      if ((i + j) % 2) c = -c;
      inv.at(i, j) = c * Dinv;
    }
  return inv;
}

MatKl MatKl::star() const {
  MatKl sig = build_sigma(*F_, r_);
  return sig * transpose().inverse() * sig;
}

AbsExp MatKl::norm() const {
  AbsExp n = AbsExp::zero();
  for (const auto& e : a_) n = std::max(n, e.abs());
  return n;
}

MatKl build_sigma(const FqCtx& F, int k) {
  MatKl s(F, k, k);
  for (int i = 0; i < k; ++i) s.at(i, k - 1 - i) = LaurentElem::one(F);
  return s;
}

void FlowParams::validate() const {
  if (d < 1 || m < 1) throw ParamError("flow needs d >= 1 and m >= 1");
  if (s < 0 || t < 0) throw ParamError("flow exponents s, t must be >= 0");
}

MatKl build_g_st(const FqCtx& F, const FlowParams& fp) {
  fp.validate();
  const int n = fp.n();
  const long long ell = fp.ell();
  // e = ((d+2)t + 2s)/(2(n+1)) as a numerator over ell
  const long long e_num = static_cast<long long>(fp.d + 2) * fp.t + 2LL * fp.s;
  const long long half_st = static_cast<long long>(fp.s + fp.t) * (n + 1);  // (s+t)/2 over ell
  MatKl g(F, n + 1, n + 1, ell);
  for (int i = 0; i < fp.m; ++i) g.at(i, i) = LaurentElem::monomial(F, 1, e_num, ell);
  for (int i = 0; i < fp.d; ++i)
    g.at(fp.m + i, fp.m + i) = LaurentElem::monomial(F, 1, e_num - half_st, ell);
  g.at(n, n) = LaurentElem::monomial(F, 1, e_num - 2 * half_st, ell);
  return g;
}

MatKl build_g_st_star(const FqCtx& F, const FlowParams& fp) {
  return build_g_st(F, fp).star();
}

MatKl build_z(const PolyMap& f, const std::vector<LaurentElem>& x) {
  const FqCtx& F = f.field();
  const int d = f.d(), m = f.m(), n = f.n();
  auto J = f.jacobian_flat(x);  // J[i*m+j] = d_i f_j
  MatKl z = MatKl::identity(F, n + 1);
  // top-right block: -(sigma_m J^t sigma_d), i.e. z[a][m+b] with both index
  // reversals folded in
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < d; ++b)
      z.at(a, m + b) = -J[(d - 1 - b) * m + (m - 1 - a)];
  return z;
}

MatKl build_u(const PolyMap& f, const std::vector<LaurentElem>& x) {
  const FqCtx& F = f.field();
  const int n = f.n();
  auto fx = f.full_eval(x);  // (x, f(x))
  MatKl u = MatKl::identity(F, n + 1);
  // last column: sigma_n (x, f(x))^t
  for (int i = 0; i < n; ++i) u.at(i, n) = fx[n - 1 - i];
  return u;
}

MatKl build_u1(const PolyMap& f, const std::vector<LaurentElem>& x) {
  return build_z(f, x) * build_u(f, x);
}

MatKl build_u1_star(const PolyMap& f, const std::vector<LaurentElem>& x) {
  return build_u1(f, x).star();
}

}  // namespace fflab
