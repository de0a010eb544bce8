#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fflab/errors.hpp"

namespace fflab {

// Parameters of the coefficient field F_q, q = p^b.
struct FieldParams {
  int p = 3;
  int b = 1;

  int q() const {
    int r = 1;
    for (int i = 0; i < b; ++i) r *= p;
    return r;
  }
  void validate() const;
};

// Arithmetic context for F_q with full operation tables.  Instances are
// immutable per-(p,b) singletons, so raw pointers to them may be stored
// freely.  Elements are encoded as indices in [0, q): the base-p digits of
// the index are the coordinates in the power basis 1, g, g^2, ... of
// F_p[x]/(m(x)) for the fixed irreducible m from modulus_table().
//
// Supported extension fields are listed by modulus_table(); prime fields
// work for any prime p with p^b <= 81.
class FqCtx {
 public:
  static const FqCtx& get(int p, int b = 1);
  static const FqCtx& get(const FieldParams& fp) { return get(fp.p, fp.b); }

  int p() const { return p_; }
  int b() const { return b_; }
  int q() const { return q_; }

  uint8_t add(uint8_t x, uint8_t y) const { return add_[x * q_ + y]; }
  uint8_t sub(uint8_t x, uint8_t y) const { return add_[x * q_ + neg_[y]]; }
  uint8_t mul(uint8_t x, uint8_t y) const { return mul_[x * q_ + y]; }
  uint8_t neg(uint8_t x) const { return neg_[x]; }
  uint8_t inv(uint8_t x) const {
    if (x == 0) throw DivisionByZero();
    return inv_[x];
  }
  uint8_t div(uint8_t x, uint8_t y) const { return mul(x, inv(y)); }

  // embedding of small integers (reduction mod p into the prime subfield)
  uint8_t from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<uint8_t>(r);
  }

  // monic irreducible modulus, ascending coefficients c0..cb (empty for b=1)
  const std::vector<uint8_t>& modulus() const { return mod_; }

 private:
  FqCtx(int p, int b);

  int p_, b_, q_;
  std::vector<uint8_t> add_, mul_, neg_, inv_, mod_;
};

// #{ Q in F_q[T] : deg Q = t }.  Counted by enumeration: a free leading
// coefficient (q-1 choices) over q^t lower coefficients.
long long count_polys_of_degree(int q, int t);
// #{ monic Q : deg Q = t } = q^t.
long long count_monic_polys_of_degree(int q, int t);

}  // namespace fflab
