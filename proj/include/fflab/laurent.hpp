#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fflab/fq.hpp"
#include "fflab/poly.hpp"
#include "fflab/rat.hpp"

namespace fflab {

// Absolute value |a| = q^e of a field element, carried as the exact exponent
// e (a rational with small denominator), never as a magnitude.  |0| = 0 is
// the MinusInfinity exponent and compares below every finite exponent.
class AbsExp {
 public:
  AbsExp() : fin_(false) {}  // |0|
  static AbsExp zero() { return AbsExp(); }
  static AbsExp q_pow(Rat e) {
    AbsExp a;
    a.fin_ = true;
    a.e_ = e;
    return a;
  }

  bool is_zero() const { return !fin_; }
  const Rat& exponent() const {
    if (!fin_) throw DomainError("|0| has no finite exponent");
    return e_;
  }

  // |xy| = |x||y|
  friend AbsExp operator*(const AbsExp& a, const AbsExp& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return q_pow(a.e_ + b.e_);
  }
  friend AbsExp operator/(const AbsExp& a, const AbsExp& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return zero();
    return q_pow(a.e_ - b.e_);
  }

  friend bool operator==(const AbsExp& a, const AbsExp& b) {
    if (a.fin_ != b.fin_) return false;
    return !a.fin_ || a.e_ == b.e_;
  }
  friend bool operator!=(const AbsExp& a, const AbsExp& b) { return !(a == b); }
  friend bool operator<(const AbsExp& a, const AbsExp& b) {
    if (!a.fin_) return b.fin_;
    if (!b.fin_) return false;
    return a.e_ < b.e_;
  }
  friend bool operator>(const AbsExp& a, const AbsExp& b) { return b < a; }
  friend bool operator<=(const AbsExp& a, const AbsExp& b) { return !(b < a); }
  friend bool operator>=(const AbsExp& a, const AbsExp& b) { return !(a < b); }

  bool operator<(const Rat& e) const { return !fin_ || e_ < e; }
  bool operator<=(const Rat& e) const { return !fin_ || e_ <= e; }

  std::string str() const { return fin_ ? ("q^" + e_.str()) : "0"; }

 private:
  bool fin_;
  Rat e_;
};

// Element of K_l = F_q((T^{-1}))(T^{1/l}) with finite support: a Laurent
// polynomial in S = T^{1/l}.  Exponents are stored as integer numerators over
// the element's ramification index l; mixed-l arithmetic coerces to the lcm.
// Terms are kept strictly ascending by exponent with nonzero coefficients.
class LaurentElem {
 public:
  using Term = std::pair<long long, uint8_t>;  // (exponent numerator, coefficient)

  explicit LaurentElem(const FqCtx& F, long long ell = 1) : F_(&F), ell_(ell) {
    if (ell < 1) throw ParamError("ramification index must be >= 1");
  }

  static LaurentElem zero(const FqCtx& F, long long ell = 1) { return LaurentElem(F, ell); }
  static LaurentElem one(const FqCtx& F, long long ell = 1) {
    return constant(F, 1, ell);
  }
  static LaurentElem constant(const FqCtx& F, uint8_t c, long long ell = 1) {
    LaurentElem e(F, ell);
    if (c) e.t_.push_back({0, c});
    return e;
  }
  // c * T^(num/ell)
  static LaurentElem monomial(const FqCtx& F, uint8_t c, long long num, long long ell = 1) {
    LaurentElem e(F, ell);
    if (c) e.t_.push_back({num, c});
    return e;
  }
  // Lift a polynomial in T (or in S = T^{1/ell} when ell > 1 is given).
  static LaurentElem from_poly(const Poly& p, long long ell = 1);

  const FqCtx& field() const { return *F_; }
  long long ell() const { return ell_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_monomial() const { return t_.size() == 1; }

  AbsExp abs() const {
    if (t_.empty()) return AbsExp::zero();
    return AbsExp::q_pow(Rat(t_.back().first, ell_));
  }
  // exponent of the lowest-order term (the "valuation at the other place")
  Rat low_exp() const {
    if (t_.empty()) throw DomainError("zero element has no lowest exponent");
    return Rat(t_.front().first, ell_);
  }
  uint8_t coeff_at(long long num) const;        // coefficient of T^(num/ell)
  uint8_t coeff_at(const Rat& e) const;

  // Representation with a larger ramification index (L must be a multiple).
  LaurentElem with_ell(long long L) const;

  friend LaurentElem operator+(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator-(const LaurentElem& a, const LaurentElem& b);
  friend LaurentElem operator*(const LaurentElem& a, const LaurentElem& b);
  LaurentElem operator-() const;
  friend bool operator==(const LaurentElem& a, const LaurentElem& b);
  friend bool operator!=(const LaurentElem& a, const LaurentElem& b) { return !(a == b); }

  LaurentElem scaled(uint8_t c) const;
  LaurentElem pow(int k) const;  // k >= 0

  // Exact quotient.  Throws DivisionByZero if b = 0 and NonTerminatingQuotient
  // if a/b has unbounded support (i.e. b does not divide a in F_q[S, S^-1]).
  static LaurentElem divide_exact(const LaurentElem& a, const LaurentElem& b);

  // Leading part of the Laurent-series expansion of a/b: returns x, supported
  // on exponents >= floor, with |a - x*b| < q^floor * |b|.  This is the exact
  // truncation of the (possibly infinite) series at the given floor.
  static LaurentElem div_trunc(const LaurentElem& a, const LaurentElem& b, const Rat& floor);

  // Multiplicative inverse of a monomial c*T^e (the units of F_q[S,S^-1]).
  LaurentElem inv_monomial() const;

  LaurentElem truncate_at_floor(const Rat& floor) const;  // keep exponents >= floor
  LaurentElem poly_part() const;                          // exponents >= 0
  LaurentElem frac_part() const;                          // exponents < 0

  // Decomposition a = sum_{k=0}^{l-1} T^{k/l} a_k with a_k in K (integer
  // exponents).  Returns the l components, each with ell = 1.
  std::vector<LaurentElem> frac_components() const;

  // The element as a polynomial in T (requires ell-divisible exponents >= 0).
  Poly as_poly() const;

 private:
  void assert_compatible(const LaurentElem& b) const;
  void normalize();

  const FqCtx* F_;
  long long ell_;
  std::vector<Term> t_;
};

}  // namespace fflab
