// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef MATKIT_KCM_H_
#define MATKIT_KCM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matkit/element_set.h"
#include "matkit/intersection.h"
#include "matkit/matroid.h"
#include "matkit/rational.h"

namespace matkit {

// Knapsack cover with a matroid: minimize c(S) over independent S with
// d(S) >= D. The basis variant (KCMB) additionally requires |S| = rank.
struct KcmInstance {
  MatroidPtr matroid;
  std::vector<std::int64_t> cost;  // c, non-negative
  std::vector<std::int64_t> size;  // d, non-negative
  std::int64_t demand = 0;         // D

  int ground_size() const { return matroid->ground_size(); }
  void Validate() const;
};

struct KcmSolution {
  ElementSet set;
  std::int64_t cost = 0;
};

std::optional<KcmSolution> BruteForceKcm(const KcmInstance& inst,
                                         int limit = 20);
std::optional<KcmSolution> BruteForceKcmb(const KcmInstance& inst,
                                          int limit = 20);

// Returns a basis with d(S) >= D, or nullopt when none exists.
using KcmbSolver = std::function<std::optional<ElementSet>(
    const KcmInstance&, const Rational& eps)>;
// Returns an independent set with d(S) >= D, or nullopt.
using KcmSolver =
    std::function<std::optional<ElementSet>(const KcmInstance&)>;

// Solves KCMB on every truncation of the matroid to 1..rank elements and
// keeps the cheapest answer. D <= 0 gives the empty set.
std::optional<KcmSolution> KcmViaKcmb(const KcmInstance& inst,
                                      const KcmbSolver& solver,
                                      const Rational& eps);

// Shifts sizes to d + s and the demand to D + k s with s = 2 max(1, d(E)),
// so that only k-element sets can cover, and hands the result to `solver`.
KcmInstance ShiftToBasisInstance(const KcmInstance& inst);
std::optional<KcmSolution> KcmbViaKcmShift(const KcmInstance& inst,
                                           const KcmSolver& solver);

// C with OPT <= C <= 2 OPT for a feasible KCMB instance.
using CostEstimator = std::function<std::int64_t(const KcmInstance&)>;
// C = OPT by enumeration; throws Infeasible.
CostEstimator ExactCostEstimator(int limit = 20);
// 2 * base(inst).
CostEstimator DoublingCostEstimator(CostEstimator base);

// 1 / ceil(1 / eps). Throws InvalidArgument unless 0 < eps <= 1.
Rational NormalizeEpsilon(const Rational& eps);
// ceil((1 - eps) / eps^2).
int ClassCount(const Rational& eps);

struct CostClassing {
  std::int64_t c_estimate = 0;  // C
  Rational eps;
  int k_eps = 0;
  // classes[0] = {c < eps C}; classes[i] = {(eps + (i-1) eps^2) C <= c <
  // (eps + i eps^2) C} for i >= 1, with c = C also in classes[k_eps].
  std::vector<ElementSet> classes;
  ElementSet over_cap;  // c > C; never part of an optimum

  // Class index of e, or -1 for over-cap elements.
  int ClassOf(Element e) const;
};

// eps is normalized first. With C = 0 every zero-cost element lands in E_0.
CostClassing BuildCostClasses(const KcmInstance& inst, const Rational& eps,
                              std::int64_t c_estimate);

// n[i] = number of elements taken from class i.
using PatternVector = std::vector<int>;

// Every vector with sum_{i>=1} n_i <= 1/eps and sum_i n_i <= n_elems, in
// lexicographic order.
std::vector<PatternVector> EnumeratePatterns(const CostClassing& classing,
                                             int n_elems);

// Partition matroid with |S & E_i| <= n_i and nothing from over_cap.
PartitionMatroid PatternMatroid(const CostClassing& classing,
                                const PatternVector& pattern, int n);

struct LagrangianPoint {
  std::optional<Rational> value;  // nullopt stands for +infinity
  std::optional<ElementSet> argmin;
};

// lambda D + min over common bases S of (c - lambda d)(S). Common bases are
// the rank-sized sets independent in both the matroid and PatternMatroid.
LagrangianPoint LagrangianValue(const KcmInstance& inst,
                                const CostClassing& classing,
                                const PatternVector& pattern,
                                const Rational& lambda,
                                const IntersectionOptions& options = {});

struct LagrangianResult {
  Rational lambda_star;
  Rational value;  // LR(lambda_star)
  // d(s_low) <= D <= d(s_high); both minimize c - lambda_star d. s_low is
  // absent when lambda_star = 0 because every optimum already covers D.
  std::optional<ElementSet> s_low;
  ElementSet s_high;
};

// Maximizes LR over lambda >= 0. Throws EmptyFeasible when there is no
// common basis and NoBracket when no common basis covers D.
LagrangianResult OptimizeLambda(const KcmInstance& inst,
                                const CostClassing& classing,
                                const PatternVector& pattern,
                                const IntersectionOptions& options = {});

// A sequence from `from` to `to` of common bases minimizing c - lambda d,
// where consecutive sets differ by at most one swap inside each cost class.
// Each step moves strictly closer to `to`. Throws ChainSearchFailed when no
// such step exists.
std::vector<ElementSet> Chain(const KcmInstance& inst,
                              const CostClassing& classing,
                              const PatternVector& pattern,
                              const Rational& lambda, ElementSet from,
                              ElementSet to,
                              const IntersectionOptions& options = {});

struct PatternRecord {
  PatternVector pattern;
  std::string skipped;  // reason, empty when the pattern was processed
  std::optional<LagrangianResult> lagrangian;
  std::vector<ElementSet> chain;
  std::optional<ElementSet> candidate;
};

struct EptasTrace {
  Rational eps;
  std::int64_t c_estimate = 0;
  CostClassing classing;
  std::vector<PatternRecord> patterns;
};

struct EptasOptions {
  CostEstimator estimator;  // defaults to ExactCostEstimator()
  IntersectionOptions intersection;
  EptasTrace* trace = nullptr;
};

// Cost classes, then for every pattern with sum equal to the rank: lambda*,
// the bracketing bases, the chain between them, and the first chain member
// S_{j+1} with c(S_j) <= LR <= c(S_{j+1}). The cheapest covering basis seen
// (starting from a maximum-size basis) is returned. nullopt iff no basis
// covers D.
std::optional<KcmSolution> KcmbEptas(const KcmInstance& inst,
                                     const Rational& eps,
                                     const EptasOptions& options = {});

// KcmbEptas as a KcmbSolver.
KcmbSolver EptasSolver(EptasOptions options = {});

}  // namespace matkit

#endif  // MATKIT_KCM_H_
