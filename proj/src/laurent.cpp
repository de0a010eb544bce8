#include "fflab/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace fflab {

LaurentElem LaurentElem::from_poly(const Poly& p, long long ell) {
  LaurentElem e(p.field(), ell);
  const auto& c = p.coeffs();
  for (long long i = 0; i < static_cast<long long>(c.size()); ++i)
    if (c[i]) e.t_.push_back({i, c[i]});
  return e;
}

uint8_t LaurentElem::coeff_at(long long num) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), num,
                             [](const Term& t, long long v) { return t.first < v; });
  return (it != t_.end() && it->first == num) ? it->second : 0;
}

uint8_t LaurentElem::coeff_at(const Rat& e) const {
  Rat scaled = e * Rat(ell_);
  if (!scaled.is_integer()) return 0;
  return coeff_at(scaled.n);
}

LaurentElem LaurentElem::with_ell(long long L) const {
  if (L == ell_) return *this;
  if (L < ell_ || L % ell_ != 0)
    throw RingMismatch("cannot coerce ramification " + std::to_string(ell_) + " to " +
                       std::to_string(L));
  LaurentElem r(*F_, L);
  long long f = L / ell_;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back({t.first * f, t.second});
  return r;
}

void LaurentElem::assert_compatible(const LaurentElem& b) const {
  if (F_ != b.F_) throw RingMismatch("operands live over different coefficient fields");
}

void LaurentElem::normalize() {
  std::sort(t_.begin(), t_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  size_t w = 0;
  for (size_t r = 0; r < t_.size();) {
    long long e = t_[r].first;
    uint8_t acc = 0;
    while (r < t_.size() && t_[r].first == e) {
      acc = F_->add(acc, t_[r].second);
      ++r;
    }
    if (acc) t_[w++] = {e, acc};
  }
  t_.resize(w);
}

LaurentElem operator+(const LaurentElem& a, const LaurentElem& b) {
  a.assert_compatible(b);
  long long L = std::lcm(a.ell_, b.ell_);
  LaurentElem x = a.with_ell(L), y = b.with_ell(L);
  LaurentElem r(*a.F_, L);
  r.t_.reserve(x.t_.size() + y.t_.size());
  size_t i = 0, j = 0;
  const FqCtx& F = *a.F_;
  while (i < x.t_.size() || j < y.t_.size()) {
    if (j == y.t_.size() || (i < x.t_.size() && x.t_[i].first < y.t_[j].first)) {
      r.t_.push_back(x.t_[i++]);
    } else if (i == x.t_.size() || y.t_[j].first < x.t_[i].first) {
      r.t_.push_back(y.t_[j++]);
    } else {
      uint8_t c = F.add(x.t_[i].second, y.t_[j].second);
      if (c) r.t_.push_back({x.t_[i].first, c});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentElem operator-(const LaurentElem& a, const LaurentElem& b) { return a + (-b); }

LaurentElem LaurentElem::operator-() const {
  LaurentElem r = *this;
  for (auto& t : r.t_) t.second = F_->neg(t.second);
  return r;
}

LaurentElem operator*(const LaurentElem& a, const LaurentElem& b) {
  a.assert_compatible(b);
  long long L = std::lcm(a.ell_, b.ell_);
  LaurentElem x = a.with_ell(L), y = b.with_ell(L);
  LaurentElem r(*a.F_, L);
  if (x.t_.empty() || y.t_.empty()) return r;
  const FqCtx& F = *a.F_;
  r.t_.reserve(x.t_.size() * y.t_.size());
  for (const auto& s : x.t_)
    for (const auto& t : y.t_)
      r.t_.push_back({s.first + t.first, F.mul(s.second, t.second)});
  r.normalize();
  return r;
}

bool operator==(const LaurentElem& a, const LaurentElem& b) {
  if (a.F_ != b.F_) return false;
  long long L = std::lcm(a.ell_, b.ell_);
  return a.with_ell(L).t_ == b.with_ell(L).t_;
}

LaurentElem LaurentElem::scaled(uint8_t c) const {
  LaurentElem r(*F_, ell_);
  if (!c) return r;
  r.t_ = t_;
  for (auto& t : r.t_) t.second = F_->mul(t.second, c);
  return r;
}

LaurentElem LaurentElem::pow(int k) const {
  if (k < 0) throw ParamError("negative power of a Laurent element");
  LaurentElem r = one(*F_, ell_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

LaurentElem LaurentElem::divide_exact(const LaurentElem& a, const LaurentElem& b) {
  if (b.is_zero()) throw DivisionByZero();
  a.assert_compatible(b);
  long long L = std::lcm(a.ell_, b.ell_);
  LaurentElem x = a.with_ell(L), y = b.with_ell(L);
  LaurentElem quot(*a.F_, L);
  if (x.is_zero()) return quot;
  // An exact quotient is supported on exponents >= low(a) - low(b); once the
  // remainder's leading term drops below that, the expansion cannot close.
  long long low_bound = x.t_.front().first - y.t_.front().first;
  const FqCtx& F = *a.F_;
  LaurentElem rem = x;
  while (!rem.is_zero()) {
    long long e = rem.t_.back().first - y.t_.back().first;
    if (e < low_bound) throw NonTerminatingQuotient();
    uint8_t c = F.div(rem.t_.back().second, y.t_.back().second);
    LaurentElem mono = monomial(F, c, e, L);
    quot = quot + mono;
    rem = rem - mono * y;
  }
  return quot;
}

LaurentElem LaurentElem::div_trunc(const LaurentElem& a, const LaurentElem& b,
                                   const Rat& floor) {
  if (b.is_zero()) throw DivisionByZero();
  a.assert_compatible(b);
  long long L = std::lcm(a.ell_, b.ell_);
  LaurentElem x = a.with_ell(L), y = b.with_ell(L);
  LaurentElem quot(*a.F_, L);
  const FqCtx& F = *a.F_;
  LaurentElem rem = x;
  while (!rem.is_zero()) {
    long long e = rem.t_.back().first - y.t_.back().first;
    if (Rat(e, L) < floor) break;
    uint8_t c = F.div(rem.t_.back().second, y.t_.back().second);
    LaurentElem mono = monomial(F, c, e, L);
    quot = quot + mono;
    rem = rem - mono * y;
  }
  return quot;
}

LaurentElem LaurentElem::inv_monomial() const {
  if (t_.size() != 1)
    throw NonTerminatingQuotient("inverse of a non-monomial is not finitely supported");
  return monomial(*F_, F_->inv(t_[0].second), -t_[0].first, ell_);
}

LaurentElem LaurentElem::truncate_at_floor(const Rat& floor) const {
  LaurentElem r(*F_, ell_);
  for (const auto& t : t_)
    if (!(Rat(t.first, ell_) < floor)) r.t_.push_back(t);
  return r;
}

LaurentElem LaurentElem::poly_part() const { return truncate_at_floor(Rat(0)); }

LaurentElem LaurentElem::frac_part() const {
  LaurentElem r(*F_, ell_);
  for (const auto& t : t_)
    if (t.first < 0) r.t_.push_back(t);
  return r;
}

std::vector<LaurentElem> LaurentElem::frac_components() const {
  std::vector<LaurentElem> comps(ell_, LaurentElem(*F_, 1));
  for (const auto& t : t_) {
    long long k = ((t.first % ell_) + ell_) % ell_;
    comps[k].t_.push_back({(t.first - k) / ell_, t.second});
  }
  return comps;
}

Poly LaurentElem::as_poly() const {
  std::vector<uint8_t> c;
  for (const auto& t : t_) {
    if (t.first < 0 || t.first % ell_ != 0)
      throw DomainError("element is not a polynomial in T");
    long long d = t.first / ell_;
    if (static_cast<long long>(c.size()) <= d) c.resize(d + 1, 0);
    c[d] = t.second;
  }
  return Poly(*F_, std::move(c));
}

}  // namespace fflab
