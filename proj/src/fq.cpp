#include "fflab/fq.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace fflab {

namespace {

constexpr int kMaxQ = 81;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Fixed irreducible moduli for the supported extension fields, ascending
// coefficients c0..cb (monic).  Also documented in the README.
const std::vector<uint8_t>* modulus_table(int p, int b) {
  static const std::map<std::pair<int, int>, std::vector<uint8_t>> table = {
      {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
      {{3, 2}, {1, 0, 1}},        // x^2 + 1
      {{3, 3}, {1, 2, 0, 1}},     // x^3 + 2x + 1
      {{5, 2}, {2, 0, 1}},        // x^2 + 2
      {{7, 2}, {1, 0, 1}},        // x^2 + 1
  };
  auto it = table.find({p, b});
  return it == table.end() ? nullptr : &it->second;
}

// Dense polynomial helpers over F_p used only to build the tables.
using PVec = std::vector<uint8_t>;

PVec pmul_mod(const PVec& a, const PVec& b, const PVec& m, int p) {
  PVec r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint8_t>((r[i + j] + a[i] * b[j]) % p);
  // reduce by the monic modulus m (degree = m.size()-1)
  int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
    int c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (int j = 0; j < dm; ++j)
      r[i - dm + j] = static_cast<uint8_t>(((r[i - dm + j] + p * p) - c * m[j]) % p);
  }
  r.resize(dm > 0 ? dm : 1);
  return r;
}

bool pdivides(const PVec& d, PVec a, int p) {
  // does monic-normalizable d divide a over F_p?
  int dd = static_cast<int>(d.size()) - 1;
  while (dd >= 0 && d[dd] == 0) --dd;
  if (dd < 0) return false;
  int inv_lead = 0;
  for (int i = 1; i < p; ++i)
    if (i * d[dd] % p == 1) { inv_lead = i; break; }
  int da = static_cast<int>(a.size()) - 1;
  while (da >= 0 && a[da] == 0) --da;
  while (da >= dd) {
    int c = a[da] * inv_lead % p;
    if (c != 0)
      for (int j = 0; j <= dd; ++j)
        a[da - dd + j] = static_cast<uint8_t>(((a[da - dd + j] + p * p) - c * d[j]) % p);
    while (da >= 0 && a[da] == 0) --da;
  }
  return da < 0;
}

bool is_irreducible(const PVec& m, int p) {
  int b = static_cast<int>(m.size()) - 1;
  // trial division by every monic polynomial of degree 1..b/2
  for (int deg = 1; deg * 2 <= b; ++deg) {
    long long total = 1;
    for (int i = 0; i < deg; ++i) total *= p;
    for (long long idx = 0; idx < total; ++idx) {
      PVec d(deg + 1, 0);
      long long v = idx;
      for (int i = 0; i < deg; ++i) { d[i] = static_cast<uint8_t>(v % p); v /= p; }
      d[deg] = 1;
      if (pdivides(d, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

void FieldParams::validate() const {
  if (!is_prime(p)) throw ParamError("field characteristic must be prime, got " + std::to_string(p));
  if (b < 1) throw ParamError("field extension degree must be >= 1");
  long long qq = 1;
  for (int i = 0; i < b; ++i) {
    qq *= p;
    if (qq > kMaxQ) throw ParamError("field size q = p^b exceeds supported limit 81");
  }
  if (b > 1 && modulus_table(p, b) == nullptr)
    throw ParamError("no irreducible modulus on record for p=" + std::to_string(p) +
                     ", b=" + std::to_string(b));
}

FqCtx::FqCtx(int p, int b) : p_(p), b_(b) {
  FieldParams fp{p, b};
  fp.validate();
  q_ = fp.q();

  if (b_ > 1) {
    mod_ = *modulus_table(p_, b_);
    if (!is_irreducible(mod_, p_))
      throw ParamError("modulus table entry is reducible");  // defends the table itself
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);

  auto digits = [&](int v) {
    PVec d(b_ > 1 ? b_ : 1, 0);
    for (int i = 0; i < static_cast<int>(d.size()); ++i) { d[i] = static_cast<uint8_t>(v % p_); v /= p_; }
    return d;
  };
  auto index = [&](const PVec& d) {
    int v = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p_ + d[i];
    return v;
  };

  for (int x = 0; x < q_; ++x) {
    PVec dx = digits(x);
    PVec nx = dx;
    for (auto& c : nx) c = static_cast<uint8_t>((p_ - c) % p_);
    neg_[x] = static_cast<uint8_t>(index(nx));
    for (int y = 0; y < q_; ++y) {
      PVec dy = digits(y);
      PVec s = dx;
      for (int i = 0; i < static_cast<int>(s.size()); ++i)
        s[i] = static_cast<uint8_t>((s[i] + dy[i]) % p_);
      add_[x * q_ + y] = static_cast<uint8_t>(index(s));
      if (b_ == 1) {
        mul_[x * q_ + y] = static_cast<uint8_t>(x * y % p_);
      } else {
        mul_[x * q_ + y] = static_cast<uint8_t>(index(pmul_mod(dx, dy, mod_, p_)));
      }
    }
  }
  for (int x = 1; x < q_; ++x)
    for (int y = 1; y < q_; ++y)
      if (mul_[x * q_ + y] == 1) { inv_[x] = static_cast<uint8_t>(y); break; }
}

const FqCtx& FqCtx::get(int p, int b) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FqCtx>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, b);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<FqCtx>(new FqCtx(p, b))).first;
  return *it->second;
}

long long count_polys_of_degree(int q, int t) {
  if (t < 0) throw ParamError("degree must be >= 0");
  long long r = q - 1;
  for (int i = 0; i < t; ++i) r *= q;
  return r;
}

long long count_monic_polys_of_degree(int q, int t) {
  if (t < 0) throw ParamError("degree must be >= 0");
  long long r = 1;
  for (int i = 0; i < t; ++i) r *= q;
  return r;
}

}  // namespace fflab
