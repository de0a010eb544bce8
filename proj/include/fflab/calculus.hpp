#pragma once

#include <map>
#include <vector>

#include "fflab/laurent.hpp"

namespace fflab {

using MultiIndex = std::vector<int>;

int mi_order(const MultiIndex& beta);
// beta! = prod (i_j!) reduced into the prime subfield (may vanish in char p).
uint8_t mi_factorial(const FqCtx& F, const MultiIndex& beta);

// Closed ultrametric ball { x : ||x - center|| <= q^{-radius_exp} } in K^dim.
struct Ball {
  std::vector<LaurentElem> center;
  long long radius_exp = 0;

  int dim() const { return static_cast<int>(center.size()); }
  bool contains(const std::vector<LaurentElem>& x) const;
};

// Every ball of radius q^{-r} splits into exactly q^{dim (r2 - r)} disjoint
// subballs of radius q^{-r2}; these return that count and the subball centers
// (digits at exponents -r2+1 .. -r relative to the ball center).
long long ball_partition_count(int q, int dim, long long r, long long r2);
std::vector<std::vector<LaurentElem>> ball_cell_centers(const Ball& B, long long r2);

// Sparse multivariate polynomial in x_1..x_nvars over K_l coefficients.
class MPoly {
 public:
  using Key = std::vector<int>;  // exponent vector, size nvars

  MPoly(const FqCtx& F, int nvars, long long ell = 1)
      : F_(&F), ell_(ell), nvars_(nvars) {}

  static MPoly constant(const FqCtx& F, int nvars, const LaurentElem& c);
  static MPoly variable(const FqCtx& F, int nvars, int i);

  const FqCtx& field() const { return *F_; }
  int nvars() const { return nvars_; }
  long long ell() const { return ell_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Key, LaurentElem>& terms() const { return t_; }

  void add_term(const Key& k, const LaurentElem& c);

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scaled(const LaurentElem& c) const;
  MPoly derivative(int var) const;  // formal partial derivative

  LaurentElem eval(const std::vector<LaurentElem>& x) const;

  // x_var <- shift + scale * x_var (exact coefficient transport; used to
  // normalize a domain ball onto the unit polydisk).
  MPoly composed_affine(int var, const LaurentElem& shift, const LaurentElem& scale) const;

  // Largest coefficient absolute value; on the unit polydisk this bounds the
  // sup norm from above (ultrametric triangle inequality), and the bound is
  // attained, so it equals the sup over the closed unit polydisk.
  AbsExp coeff_norm() const;

  int total_degree() const;

  // Widen the variable list to n >= nvars (new variables unused).
  MPoly widened(int n) const;

 private:
  const FqCtx* F_;
  long long ell_;
  int nvars_;
  std::map<Key, LaurentElem> t_;
};

// Symbolic partial difference quotient: variable slots are tracked through
// repeated applications, each of which appends one fresh copy of the target
// variable.  origin[v] names the original variable a slot belongs to.
struct SymQuotient {
  MPoly poly;
  std::vector<int> origin;
};

// Apply Phi once in the given original variable.
SymQuotient diff_quotient_step(const SymQuotient& g, int orig_var);
// Phi_beta = Phi_1^{i_1} o ... o Phi_d^{i_d} applied to g (nvars = d).
SymQuotient diff_quotient_sym(const MPoly& g, const MultiIndex& beta);

// Numeric k-fold difference quotient of a univariate g at k+1 pairwise
// distinct points (throws CoincidentPoints otherwise).  Exact.
LaurentElem diff_quotient(const MPoly& g, const std::vector<LaurentElem>& pts, int k);

// Numeric Phi_beta at per-variable point tuples (tuple j has beta[j]+1
// pairwise distinct entries).  Exact.
LaurentElem diff_quotient_multi(const MPoly& g,
                                const std::vector<std::vector<LaurentElem>>& pts,
                                const MultiIndex& beta);

// Closure of Phi_beta at arbitrary (possibly coincident) per-variable tuples,
// computed by the symbolic polynomial (the polynomial limit).
LaurentElem diff_quotient_bar(const MPoly& g,
                              const std::vector<std::vector<LaurentElem>>& pts,
                              const MultiIndex& beta);

// Formal partial derivative for a multi-index.
MPoly derivative_multi(const MPoly& g, const MultiIndex& beta);

// Polynomial map f : U -> K^m on a domain ball U in K^d, with certified
// ultrametric bounds: ||f||, ||grad f||, and M = sup over |beta| <= 2 of the
// closed difference quotients, all derived exactly from coefficient norms
// after normalizing the domain onto the unit polydisk.
class PolyMap {
 public:
  PolyMap(int d, int m, std::vector<MPoly> comps, Ball domain);

  int d() const { return d_; }
  int m() const { return m_; }
  int n() const { return d_ + m_; }
  const FqCtx& field() const { return *F_; }
  const MPoly& comp(int j) const { return comps_[j]; }
  const Ball& domain() const { return domain_; }

  AbsExp f_bound() const { return f_bound_; }
  AbsExp grad_bound() const { return grad_bound_; }
  AbsExp M() const { return M_; }
  // true when M <= 1 and ||f|| <= 1 and ||grad f|| <= 1: the regime in which
  // the counting kernels are exact center tests.
  bool unit_exact() const;

  bool in_domain(const std::vector<LaurentElem>& x) const { return domain_.contains(x); }
  // f(x), m components; DomainError if x is outside U
  std::vector<LaurentElem> eval(const std::vector<LaurentElem>& x) const;
  // the full graph map x -> (x, f(x)), n components
  std::vector<LaurentElem> full_eval(const std::vector<LaurentElem>& x) const;
  // partial derivative values d_i f_j (x), row-major d x m
  std::vector<LaurentElem> jacobian_flat(const std::vector<LaurentElem>& x) const;

 private:
  int d_, m_;
  const FqCtx* F_;
  std::vector<MPoly> comps_;
  Ball domain_;
  AbsExp f_bound_, grad_bound_, M_;
};

// ||f(x+h) - f(x)|| and the second-order defect against the certified caps.
struct TaylorReport {
  AbsExp increment;      // max_j |f_j(x+h) - f_j(x)|
  AbsExp increment_cap;  // max(M ||h||, M ||h||^2)
  AbsExp defect;         // max_j |f_j(x+h) - f_j(x) - sum_i h_i d_i f_j(x)|
  AbsExp defect_cap;     // M ||h||^2
  bool within() const { return increment <= increment_cap && defect <= defect_cap; }
};

TaylorReport taylor_defect(const PolyMap& f, const std::vector<LaurentElem>& x,
                           const std::vector<LaurentElem>& h);

AbsExp vec_norm(const std::vector<LaurentElem>& x);

}  // namespace fflab
