#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fflab/matrix.hpp"

namespace fflab {

// Coefficient ring of a discrete subgroup of K_l^k: R = F_q[T] (a discrete
// subgroup for any l) or Rt = F_q[T^{1/l}] (a lattice in K_l).
enum class CoeffRing { R, Rt };

struct DiscreteSubgroup {
  MatKl gen;  // square, invertible; columns generate
  CoeffRing ring = CoeffRing::R;

  int dim() const { return gen.rows(); }
  long long ell() const { return gen.ell(); }
};

struct MinimaProfile {
  std::vector<AbsExp> lambda;                       // ascending
  std::vector<std::vector<LaurentElem>> witnesses;  // witness i attains lambda[i]
  bool certified = false;
  std::string method;  // "oracle" or "reduced"
  long long scanned = 0;

  // sum of exponents (Minkowski compares this against the det exponent)
  Rat product_exponent() const;
};

// Shared cooperative budget for enumeration candidate counts.
struct Budget {
  long long limit = 100000000;  // candidates
  long long used = 0;

  void charge(long long n) {
    used += n;
    if (used > limit)
      throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(used) + " > " +
                           std::to_string(limit));
  }
};

// All nonzero lattice vectors v = gen * c with every coefficient coordinate of
// degree <= deg_bound (in T for ring R, in S = T^{1/l} for Rt) and
// ||v|| <= norm_bound.  Exhaustive over the stated box.
struct EnumeratedPoints {
  std::vector<std::vector<LaurentElem>> points;  // deterministic odometer order
  long long scanned = 0;
};
EnumeratedPoints enumerate_points(const DiscreteSubgroup& L, int deg_bound,
                                  const AbsExp& norm_bound, Budget* budget = nullptr);

// Successive minima lambda_1 <= ... <= lambda_k: the i-th is the smallest
// radius containing i K_l-linearly independent subgroup vectors.
//
// "reduced": weak Popov row reduction over F_q[S]; applies when the
// coefficient ring is Rt (or R with l = 1).  Sorted reduced row degrees give
// the minima exactly.
//
// "oracle": exhaustive enumeration over per-coordinate coefficient boxes
// derived from row norms of gen^{-1} (computed via adjugate/det exponents, so
// no finite-support inverse is needed), iterated to a fixed point; greedy
// independent selection with lexicographic tie-break.  Applies to any ring.
MinimaProfile successive_minima_reduced(const DiscreteSubgroup& L);
MinimaProfile successive_minima_oracle(const DiscreteSubgroup& L, int want,
                                       Budget* budget = nullptr);
// method: "oracle", "reduced", or "auto" (reduced when applicable).
MinimaProfile successive_minima(const DiscreteSubgroup& L, const std::string& method = "auto",
                                Budget* budget = nullptr);

// Dual lattice Lambda* = { y : <x, y> in R for all x in Lambda }, generated by
// (gen^t)^{-1}.  Requires l = 1.
DiscreteSubgroup dual(const DiscreteSubgroup& L);
// <gen_i, dualgen_j> = delta_ij, the defining biorthogonality.
bool pairing_check(const DiscreteSubgroup& L, const DiscreteSubgroup& Ldual);

// Convex body C = shape * O^k.
struct ConvexBody {
  MatKl shape;
  AbsExp volume() const { return shape.det().abs(); }
};

// #(Lambda cap C) two ways: the ceiling-product formula
// prod_i ceil(q / lambda_i(shape^{-1} Lambda)) and exhaustive enumeration.
struct BodyCount {
  long long by_formula = 0;
  long long by_enumeration = 0;
  MinimaProfile minima;  // of shape^{-1} Lambda
  bool agree() const { return by_formula == by_enumeration; }
};
BodyCount count_in_body(const DiscreteSubgroup& L, const ConvexBody& C, Budget* budget = nullptr);

// exact comparison  count <= q^e  for a nonnegative integer count
bool count_le_qpow(long long count, int q, const Rat& e);

// #{ v in g u R^k : ||v|| <= q^c } <= q^{k(c+1)} / (|det g| |det u|), under the
// precondition lambda_k(g u R^k) <= q^c (PreconditionFailed otherwise).
struct BallBoundReport {
  long long count = 0;
  Rat rhs_exponent;  // k(c+1) - e_det(g) - e_det(u)
  bool holds = false;
  MinimaProfile minima;
};
BallBoundReport count_ball_bound_check(const MatKl& g, const MatKl& u, int c,
                                       Budget* budget = nullptr);

// lambda_i(g* Lambda*) * lambda_{k+1-i}(g Lambda) stays within
// q^{+-(l-1)/l} for diagonal g over K_l and Lambda = u R^k over K.
struct SandwichReport {
  std::vector<Rat> product_exponents;  // index i pairs i with k+1-i
  Rat tolerance;                       // (l-1)/l
  bool holds = false;
};
SandwichReport duality_sandwich_check(const MatKl& g, const MatKl& u, Budget* budget = nullptr);

// lambda_1(g u Rt^k) = lambda_1(g u R^k) for diagonal monomial g over K_l and
// any u over K; left side via the reduced method, right side via the oracle.
struct DescendReport {
  AbsExp lambda_reduced;
  AbsExp lambda_oracle;
  bool equal = false;
};
DescendReport first_minimum_descend(const MatKl& g, const MatKl& u, Budget* budget = nullptr);

// K_l-linear rank by fraction-free elimination (no divisions, exact).
int rank_of(std::vector<std::vector<LaurentElem>> rows);

bool is_over_K(const LaurentElem& a);  // all exponents integral
bool is_over_K(const MatKl& m);

}  // namespace fflab
