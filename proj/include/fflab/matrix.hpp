#pragma once

#include <vector>

#include "fflab/calculus.hpp"
#include "fflab/laurent.hpp"

namespace fflab {

// Dense matrix over K_l.  Entries share one coefficient field; ramification
// indices coerce on demand.
class MatKl {
 public:
  MatKl(const FqCtx& F, int rows, int cols, long long ell = 1)
      : F_(&F), r_(rows), c_(cols), ell_(ell),
        a_(static_cast<size_t>(rows) * cols, LaurentElem::zero(F, ell)) {}

  static MatKl identity(const FqCtx& F, int n, long long ell = 1);

  int rows() const { return r_; }
  int cols() const { return c_; }
  long long ell() const { return ell_; }
  const FqCtx& field() const { return *F_; }

  LaurentElem& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const LaurentElem& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  friend MatKl operator*(const MatKl& a, const MatKl& b);
  friend MatKl operator+(const MatKl& a, const MatKl& b);
  friend MatKl operator-(const MatKl& a, const MatKl& b);
  friend bool operator==(const MatKl& a, const MatKl& b);
  friend bool operator!=(const MatKl& a, const MatKl& b) { return !(a == b); }

  MatKl transpose() const;
  std::vector<LaurentElem> apply(const std::vector<LaurentElem>& v) const;

  LaurentElem det() const;  // exact, Laplace over column subsets
  // Exact inverse in M(K_l).  Exists as a finite-support matrix iff det is a
  // unit of F_q[S, S^-1], i.e. a monomial; otherwise NonTerminatingQuotient.
  // Throws SingularMatrix when det = 0.
  MatKl inverse() const;

  // g* = sigma (g^t)^{-1} sigma with sigma the antidiagonal involution.
  MatKl star() const;

  AbsExp norm() const;  // max entry absolute value
  MatKl with_ell(long long L) const;

 private:
  const FqCtx* F_;
  int r_, c_;
  long long ell_;
  std::vector<LaurentElem> a_;
};

// Antidiagonal involution sigma_k (1s on the antidiagonal).
MatKl build_sigma(const FqCtx& F, int k);

// Diagonal flow parameters; n = d + m, exponents live over 2(n+1).
struct FlowParams {
  int s = 1;
  int t = 1;
  int d = 1;
  int m = 1;

  int n() const { return d + m; }
  int ell() const { return 2 * (n() + 1); }
  void validate() const;
  // threshold exponent for the special set: lambda_1 < q^{-tau}, tau =
  // ((d+2) t - 2 n s) / (2(n+1))
  Rat tau() const { return Rat((d + 2) * t - 2 * n() * s, 2 * (n() + 1)); }
};

// g_{s,t} = diag(T^e x m, T^{e-(s+t)/2} x d, T^{e-s-t}),
// e = ((d+2)t + 2s) / (2(n+1)); |det| = q^{-ds/2}.
MatKl build_g_st(const FqCtx& F, const FlowParams& fp);
// Its star conjugate diag(T^{s+t-e}, T^{(s+t)/2-e} x d, T^{-e} x m).
MatKl build_g_st_star(const FqCtx& F, const FlowParams& fp);

// The unipotent frame at x on the graph of f:
//   z(x) = [[I_m, -sigma_m J(x) sigma_d, 0], [0, I_d, 0], [0, 0, 1]]
//   u(x) = [[I_n, sigma_n (x, f(x))^t], [0, 1]]
//   u1(x) = z(x) u(x)
MatKl build_z(const PolyMap& f, const std::vector<LaurentElem>& x);
MatKl build_u(const PolyMap& f, const std::vector<LaurentElem>& x);
MatKl build_u1(const PolyMap& f, const std::vector<LaurentElem>& x);
// u1*(x) = [[1, -x, -f(x)], [0, I_d, J(x)], [0, 0, I_m]] (computed via star;
// the closed form is asserted in tests).
MatKl build_u1_star(const PolyMap& f, const std::vector<LaurentElem>& x);

}  // namespace fflab
