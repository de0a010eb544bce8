#pragma once

#include <cstdint>
#include <vector>

#include "fflab/errors.hpp"
#include "fflab/fq.hpp"

namespace fflab {

// Dense univariate polynomial over F_q, coefficients ascending by degree.
// The zero polynomial has an empty coefficient vector; its degree is the
// MinusInfinity symbol, exposed here as is_zero() (absolute values carry the
// symbol properly via AbsExp in laurent.hpp).
class Poly {
 public:
  explicit Poly(const FqCtx& F) : F_(&F) {}
  Poly(const FqCtx& F, std::vector<uint8_t> coeffs) : F_(&F), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const FqCtx& F) { return Poly(F); }
  static Poly constant(const FqCtx& F, uint8_t c) {
    Poly p(F);
    if (c) p.c_ = {c};
    return p;
  }
  static Poly monomial(const FqCtx& F, uint8_t c, int deg) {
    Poly p(F);
    if (c) {
      p.c_.assign(deg + 1, 0);
      p.c_[deg] = c;
    }
    return p;
  }

  const FqCtx& field() const { return *F_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of a nonzero polynomial; calling this on zero is a logic error.
  int degree() const {
    if (c_.empty()) throw DomainError("degree of the zero polynomial is minus infinity");
    return static_cast<int>(c_.size()) - 1;
  }
  uint8_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
  }
  uint8_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<uint8_t>& coeffs() const { return c_; }

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(uint8_t c) const;           // c * this
  Poly shifted(int k) const;              // this * T^k, k >= 0
  // this -= c * T^k * other  (in place, the weak-Popov elementary move)
  void axpy(uint8_t c, int k, const Poly& other);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const FqCtx* F_;
  std::vector<uint8_t> c_;
};

}  // namespace fflab
