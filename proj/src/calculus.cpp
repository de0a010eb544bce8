#include "fflab/calculus.hpp"

#include <algorithm>

namespace fflab {

int mi_order(const MultiIndex& beta) {
  int s = 0;
  for (int b : beta) {
    if (b < 0) throw ParamError("multi-index entries must be >= 0");
    s += b;
  }
  return s;
}

uint8_t mi_factorial(const FqCtx& F, const MultiIndex& beta) {
  uint8_t r = 1;
  for (int b : beta)
    for (int i = 2; i <= b; ++i) r = F.mul(r, F.from_int(i));
  return r;
}

bool Ball::contains(const std::vector<LaurentElem>& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw ParamError("point/ball dimension mismatch");
  for (int i = 0; i < dim(); ++i)
    if (!((x[i] - center[i]).abs() <= Rat(-radius_exp))) return false;
  return true;
}

long long ball_partition_count(int q, int dim, long long r, long long r2) {
  if (r2 < r) throw ParamError("subball radius must not exceed ball radius");
  long long c = 1;
  for (long long i = 0; i < dim * (r2 - r); ++i) c *= q;
  return c;
}

std::vector<std::vector<LaurentElem>> ball_cell_centers(const Ball& B, long long r2) {
  if (B.dim() == 0) throw ParamError("empty ball");
  const FqCtx& F = B.center[0].field();
  long long r = B.radius_exp;
  if (r2 < r) throw ParamError("subball radius must not exceed ball radius");
  int q = F.q();
  int nd = static_cast<int>(r2 - r) * B.dim();  // free digit positions
  std::vector<std::vector<LaurentElem>> out;
  std::vector<int> digits(nd, 0);
  for (;;) {
    std::vector<LaurentElem> c = B.center;
    int pos = 0;
    for (int i = 0; i < B.dim(); ++i)
      for (long long e = r; e < r2; ++e, ++pos)
        if (digits[pos])
          c[i] = c[i] + LaurentElem::monomial(F, static_cast<uint8_t>(digits[pos]), -e);
    out.push_back(std::move(c));
    int k = 0;
    while (k < nd && ++digits[k] == q) digits[k++] = 0;
    if (k == nd) break;
  }
  return out;
}

MPoly MPoly::constant(const FqCtx& F, int nvars, const LaurentElem& c) {
  MPoly p(F, nvars, c.ell());
  p.add_term(Key(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(const FqCtx& F, int nvars, int i) {
  MPoly p(F, nvars);
  Key k(nvars, 0);
  k[i] = 1;
  p.add_term(k, LaurentElem::one(F));
  return p;
}

void MPoly::add_term(const Key& k, const LaurentElem& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(k.size()) != nvars_) throw ParamError("bad exponent vector size");
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw ParamError("mpoly variable-count mismatch");
  MPoly r = a;
  for (const auto& [k, c] : b.t_) r.add_term(k, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) throw ParamError("mpoly variable-count mismatch");
  MPoly r(*a.F_, a.nvars_, a.ell_);
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      MPoly::Key k = ka;
      for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
      r.add_term(k, ca * cb);
    }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_) return false;
  if (a.t_.size() != b.t_.size()) return false;
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  for (; ia != a.t_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  return true;
}

MPoly MPoly::scaled(const LaurentElem& c) const {
  MPoly r(*F_, nvars_, ell_);
  for (const auto& [k, v] : t_) r.add_term(k, v * c);
  return r;
}

MPoly MPoly::derivative(int var) const {
  MPoly r(*F_, nvars_, ell_);
  for (const auto& [k, v] : t_) {
    if (k[var] == 0) continue;
    Key k2 = k;
    k2[var] -= 1;
    r.add_term(k2, v.scaled(F_->from_int(k[var])));
  }
  return r;
}

LaurentElem MPoly::eval(const std::vector<LaurentElem>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw ParamError("eval arity mismatch");
  LaurentElem acc = LaurentElem::zero(*F_, ell_);
  for (const auto& [k, v] : t_) {
    LaurentElem term = v;
    for (int i = 0; i < nvars_; ++i)
      if (k[i]) term = term * x[i].pow(k[i]);
    acc = acc + term;
  }
  return acc;
}

MPoly MPoly::composed_affine(int var, const LaurentElem& shift, const LaurentElem& scale) const {
  int maxk = 0;
  for (const auto& [k, v] : t_) maxk = std::max(maxk, k[var]);
  MPoly base = MPoly::constant(*F_, nvars_, shift) +
               MPoly::variable(*F_, nvars_, var).scaled(scale);
  std::vector<MPoly> pw;
  pw.reserve(maxk + 1);
  pw.push_back(MPoly::constant(*F_, nvars_, LaurentElem::one(*F_)));
  for (int i = 1; i <= maxk; ++i) pw.push_back(pw.back() * base);
  MPoly r(*F_, nvars_, ell_);
  for (const auto& [k, v] : t_) {
    Key k2 = k;
    k2[var] = 0;
    MPoly t(*F_, nvars_, ell_);
    t.add_term(k2, v);
    r = r + t * pw[k[var]];
  }
  return r;
}

AbsExp MPoly::coeff_norm() const {
  AbsExp m = AbsExp::zero();
  for (const auto& [k, v] : t_) m = std::max(m, v.abs());
  return m;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [k, v] : t_) {
    int s = 0;
    for (int e : k) s += e;
    d = std::max(d, s);
  }
  return d;
}

MPoly MPoly::widened(int n) const {
  if (n < nvars_) throw ParamError("cannot narrow variable list");
  MPoly r(*F_, n, ell_);
  for (const auto& [k, v] : t_) {
    Key k2 = k;
    k2.resize(n, 0);
    r.add_term(k2, v);
  }
  return r;
}

SymQuotient diff_quotient_step(const SymQuotient& g, int orig_var) {
  int slot = -1;
  for (size_t v = 0; v < g.origin.size(); ++v)
    if (g.origin[v] == orig_var) { slot = static_cast<int>(v); break; }
  if (slot < 0) throw ParamError("variable out of range in difference quotient");
  int V = g.poly.nvars();
  SymQuotient r{MPoly(g.poly.field(), V + 1, g.poly.ell()), g.origin};
  r.origin.push_back(orig_var);
  // On a monomial x^k in the slot: Phi(x^k) = sum_{a+b=k-1} x^a y^b with y the
  // fresh slot; terms without the slot variable cancel.
  for (const auto& [k, c] : g.poly.terms()) {
    int deg = k[slot];
    if (deg == 0) continue;
    for (int a = 0; a + 1 <= deg; ++a) {
      MPoly::Key k2 = k;
      k2.resize(V + 1, 0);
      k2[slot] = a;
      k2[V] = deg - 1 - a;
      r.poly.add_term(k2, c);
    }
  }
  return r;
}

SymQuotient diff_quotient_sym(const MPoly& g, const MultiIndex& beta) {
  if (static_cast<int>(beta.size()) != g.nvars())
    throw ParamError("multi-index arity mismatch");
  SymQuotient s{g, {}};
  for (int v = 0; v < g.nvars(); ++v) s.origin.push_back(v);
  // Phi_beta = Phi_1^{i_1} o ... o Phi_d^{i_d}: rightmost factor first.
  for (int v = g.nvars() - 1; v >= 0; --v)
    for (int rep = 0; rep < beta[v]; ++rep) s = diff_quotient_step(s, v);
  return s;
}

namespace {

void require_distinct(const std::vector<LaurentElem>& pts) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw CoincidentPoints();
}

// assemble the slot-point vector for a symbolic quotient
std::vector<LaurentElem> assign_slots(const SymQuotient& s,
                                      const std::vector<std::vector<LaurentElem>>& pts) {
  std::vector<int> used(pts.size(), 0);
  std::vector<LaurentElem> x;
  x.reserve(s.origin.size());
  for (int ov : s.origin) {
    if (ov >= static_cast<int>(pts.size()) || used[ov] >= static_cast<int>(pts[ov].size()))
      throw ParamError("point tuple too short for multi-index");
    x.push_back(pts[ov][used[ov]++]);
  }
  return x;
}

}  // namespace

LaurentElem diff_quotient(const MPoly& g, const std::vector<LaurentElem>& pts, int k) {
  if (g.nvars() != 1) throw ParamError("diff_quotient expects a univariate polynomial");
  if (static_cast<int>(pts.size()) != k + 1)
    throw ParamError("k-fold quotient needs exactly k+1 points");
  require_distinct(pts);
  // Recursive definition, evaluated exactly on values:
  //   Phi^k g(x1,...,x_{k+1}) =
  //     (Phi^{k-1} g(x1,x3,...) - Phi^{k-1} g(x2,x3,...)) / (x1 - x2).
  struct Rec {
    const MPoly& g;
    LaurentElem run(std::vector<LaurentElem> p) {
      if (p.size() == 1) return g.eval(p);
      std::vector<LaurentElem> a{p[0]}, b{p[1]};
      for (size_t i = 2; i < p.size(); ++i) {
        a.push_back(p[i]);
        b.push_back(p[i]);
      }
      LaurentElem num = run(a) - run(b);
      return LaurentElem::divide_exact(num, p[0] - p[1]);
    }
  } rec{g};
  return rec.run(pts);
}

LaurentElem diff_quotient_multi(const MPoly& g,
                                const std::vector<std::vector<LaurentElem>>& pts,
                                const MultiIndex& beta) {
  if (static_cast<int>(pts.size()) != g.nvars()) throw ParamError("tuple arity mismatch");
  for (int v = 0; v < g.nvars(); ++v) {
    if (static_cast<int>(pts[v].size()) != beta[v] + 1)
      throw ParamError("tuple for variable has wrong size");
    require_distinct(pts[v]);
  }
  SymQuotient s = diff_quotient_sym(g, beta);
  return s.poly.eval(assign_slots(s, pts));
}

LaurentElem diff_quotient_bar(const MPoly& g,
                              const std::vector<std::vector<LaurentElem>>& pts,
                              const MultiIndex& beta) {
  SymQuotient s = diff_quotient_sym(g, beta);
  return s.poly.eval(assign_slots(s, pts));
}

MPoly derivative_multi(const MPoly& g, const MultiIndex& beta) {
  if (static_cast<int>(beta.size()) != g.nvars())
    throw ParamError("multi-index arity mismatch");
  MPoly r = g;
  for (int v = 0; v < g.nvars(); ++v)
    for (int i = 0; i < beta[v]; ++i) r = r.derivative(v);
  return r;
}

PolyMap::PolyMap(int d, int m, std::vector<MPoly> comps, Ball domain)
    : d_(d), m_(m), comps_(std::move(comps)), domain_(std::move(domain)) {
  if (d_ < 1 || m_ < 1) throw ParamError("need d >= 1 and m >= 1");
  if (static_cast<int>(comps_.size()) != m_) throw ParamError("component count != m");
  if (domain_.dim() != d_) throw ParamError("domain dimension != d");
  for (const auto& c : comps_)
    if (c.nvars() != d_) throw ParamError("component arity != d");
  F_ = &comps_[0].field();

  // Normalize U onto the unit polydisk: x_i = c_i + T^{-r} y_i, then read
  // sup-norm bounds off coefficient norms (exact in the ultrametric).
  const LaurentElem scale = LaurentElem::monomial(*F_, 1, -domain_.radius_exp);
  auto shift_all = [&](MPoly p, const std::vector<int>& origin) {
    for (int v = 0; v < p.nvars(); ++v)
      p = p.composed_affine(v, domain_.center[origin[v]], scale);
    return p;
  };
  std::vector<int> id(d_);
  for (int i = 0; i < d_; ++i) id[i] = i;

  f_bound_ = AbsExp::zero();
  grad_bound_ = AbsExp::zero();
  M_ = AbsExp::zero();
  for (const auto& f : comps_) {
    f_bound_ = std::max(f_bound_, shift_all(f, id).coeff_norm());
    for (int i = 0; i < d_; ++i)
      grad_bound_ = std::max(grad_bound_, shift_all(f.derivative(i), id).coeff_norm());
  }
  // all multi-indices with |beta| <= 2
  std::vector<MultiIndex> betas;
  betas.push_back(MultiIndex(d_, 0));
  for (int i = 0; i < d_; ++i) {
    MultiIndex b(d_, 0);
    b[i] = 1;
    betas.push_back(b);
    for (int j = i; j < d_; ++j) {
      MultiIndex b2(d_, 0);
      b2[i] += 1;
      b2[j] += 1;
      betas.push_back(b2);
    }
  }
  for (const auto& f : comps_)
    for (const auto& b : betas) {
      SymQuotient s = diff_quotient_sym(f, b);
      M_ = std::max(M_, shift_all(s.poly, s.origin).coeff_norm());
    }
}

bool PolyMap::unit_exact() const {
  Rat one(0);
  return M_ <= one && f_bound_ <= one && grad_bound_ <= one;
}

std::vector<LaurentElem> PolyMap::eval(const std::vector<LaurentElem>& x) const {
  if (!in_domain(x)) throw DomainError("evaluation point outside the map domain");
  std::vector<LaurentElem> r;
  r.reserve(m_);
  for (const auto& f : comps_) r.push_back(f.eval(x));
  return r;
}

std::vector<LaurentElem> PolyMap::full_eval(const std::vector<LaurentElem>& x) const {
  std::vector<LaurentElem> r = x;
  auto fx = eval(x);
  r.insert(r.end(), fx.begin(), fx.end());
  return r;
}

std::vector<LaurentElem> PolyMap::jacobian_flat(const std::vector<LaurentElem>& x) const {
  if (!in_domain(x)) throw DomainError("evaluation point outside the map domain");
  std::vector<LaurentElem> J;
  J.reserve(d_ * m_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < m_; ++j) J.push_back(comps_[j].derivative(i).eval(x));
  return J;
}

AbsExp vec_norm(const std::vector<LaurentElem>& x) {
  AbsExp n = AbsExp::zero();
  for (const auto& v : x) n = std::max(n, v.abs());
  return n;
}

TaylorReport taylor_defect(const PolyMap& f, const std::vector<LaurentElem>& x,
                           const std::vector<LaurentElem>& h) {
  std::vector<LaurentElem> xh(x.size(), LaurentElem::zero(f.field()));
  for (size_t i = 0; i < x.size(); ++i) xh[i] = x[i] + h[i];
  if (!f.in_domain(x) || !f.in_domain(xh))
    throw DomainError("x or x + h outside the map domain");

  auto fx = f.eval(x);
  auto fxh = f.eval(xh);
  auto J = f.jacobian_flat(x);

  AbsExp inc = AbsExp::zero(), defect = AbsExp::zero();
  for (int j = 0; j < f.m(); ++j) {
    LaurentElem diff = fxh[j] - fx[j];
    inc = std::max(inc, diff.abs());
    LaurentElem lin = diff;
    for (int i = 0; i < f.d(); ++i) lin = lin - h[i] * J[i * f.m() + j];
    defect = std::max(defect, lin.abs());
  }
  AbsExp hn = vec_norm(h);
  AbsExp h2 = hn * hn;
  TaylorReport r;
  r.increment = inc;
  r.increment_cap = std::max(f.M() * hn, f.M() * h2);
  r.defect = defect;
  r.defect_cap = f.M() * h2;
  return r;
}

}  // namespace fflab
