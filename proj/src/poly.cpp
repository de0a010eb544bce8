#include "fflab/poly.hpp"

#include <algorithm>

namespace fflab {

Poly operator+(const Poly& a, const Poly& b) {
  const FqCtx& F = *a.F_;
  Poly r(F);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.add(a.coeff(i), b.coeff(i));
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  const FqCtx& F = *a.F_;
  Poly r(F);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.sub(a.coeff(i), b.coeff(i));
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  const FqCtx& F = *a.F_;
  Poly r(F);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(*F_);
  r.c_ = c_;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

Poly Poly::scaled(uint8_t c) const {
  Poly r(*F_);
  if (!c) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x = F_->mul(x, c);
  r.trim();
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero() || k == 0) {
    Poly r = *this;
    return r;
  }
  Poly r(*F_);
  r.c_.assign(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

void Poly::axpy(uint8_t c, int k, const Poly& other) {
  if (!c || other.is_zero()) return;
  if (c_.size() < other.c_.size() + k) c_.resize(other.c_.size() + k, 0);
  for (size_t j = 0; j < other.c_.size(); ++j)
    c_[j + k] = F_->sub(c_[j + k], F_->mul(c, other.c_[j]));
  trim();
}

}  // namespace fflab
