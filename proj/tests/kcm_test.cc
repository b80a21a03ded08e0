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

#include <gtest/gtest.h>

#include <memory>
#include <vector>

#include "matkit/errors.h"
#include "matkit/kcm.h"
#include "matkit/matroid_algorithms.h"
#include "support/test_support.h"

namespace matkit {
namespace {

using testing::Rng;
using testing::UniformInt;

std::vector<std::int64_t> Ids(int n) {
  std::vector<std::int64_t> out(n);
  for (int i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

Rational RandomLambda(Rng& rng) {
  return MakeRational(UniformInt(rng, 0, 60), UniformInt(rng, 1, 12));
}

Rational ReducedCost(const KcmInstance& inst, const Rational& lambda,
                     ElementSet s) {
  return Rational(Weight(s, inst.cost)) - lambda * Weight(s, inst.size);
}

// Minimum of lambda D + (c - lambda d)(S) over enumerated common bases.
std::optional<Rational> BruteLagrangian(const std::vector<ElementSet>& bases,
                                        const KcmInstance& inst,
                                        const Rational& lambda) {
  std::optional<Rational> best;
  for (ElementSet s : bases) {
    const Rational v = lambda * inst.demand + ReducedCost(inst, lambda, s);
    if (!best || v < *best) best = v;
  }
  return best;
}

// Rank-sized patterns whose classes can supply the counts.
std::vector<PatternVector> UsablePatterns(const KcmInstance& inst,
                                          const CostClassing& classing) {
  const int rank = Rank(*inst.matroid);
  std::vector<PatternVector> out;
  for (const PatternVector& p :
       EnumeratePatterns(classing, inst.ground_size())) {
    int total = 0;
    bool fits = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      total += p[i];
      fits = fits && p[i] <= classing.classes[i].size();
    }
    if (fits && total == rank) out.push_back(p);
  }
  return out;
}

PatternVector CountVector(const CostClassing& classing, ElementSet s) {
  PatternVector out(classing.classes.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (s & classing.classes[i]).size();
  }
  return out;
}

TEST(BruteForceKcmTest, Examples) {
  KcmInstance inst{std::make_shared<UniformMatroid>(4, 2), {4, 1, 1, 4},
                   {3, 1, 2, 5}, 5};
  const auto kcm = BruteForceKcm(inst);
  ASSERT_TRUE(kcm.has_value());
  EXPECT_EQ(kcm->set, ElementSet{4});
  EXPECT_EQ(kcm->cost, 4);
  const auto kcmb = BruteForceKcmb(inst);
  ASSERT_TRUE(kcmb.has_value());
  // {1,3} and {3,4} tie at cost 5; the first in lexicographic order wins.
  EXPECT_EQ(kcmb->set, ElementSet({1, 3}));
  EXPECT_EQ(kcmb->cost, 5);
  inst.demand = 9;
  EXPECT_FALSE(BruteForceKcm(inst).has_value());
  inst.size = {1, 1, -1, 1};
  EXPECT_THROW(BruteForceKcm(inst), InvalidArgument);
}

TEST(EstimatorTest, Examples) {
  KcmInstance inst{std::make_shared<UniformMatroid>(4, 2), {4, 1, 1, 4},
                   {3, 1, 2, 5}, 5};
  EXPECT_EQ(ExactCostEstimator()(inst), 5);
  EXPECT_EQ(DoublingCostEstimator(ExactCostEstimator())(inst), 10);
  inst.demand = 9;
  EXPECT_THROW(ExactCostEstimator()(inst), Infeasible);
}

TEST(ClassingTest, EpsilonNormalization) {
  EXPECT_EQ(NormalizeEpsilon(MakeRational(2, 5)), MakeRational(1, 3));
  EXPECT_EQ(NormalizeEpsilon(1), 1);
  EXPECT_THROW(NormalizeEpsilon(0), InvalidArgument);
  EXPECT_THROW(NormalizeEpsilon(2), InvalidArgument);
  EXPECT_EQ(ClassCount(MakeRational(1, 2)), 2);
  EXPECT_EQ(ClassCount(MakeRational(1, 3)), 6);
  EXPECT_EQ(ClassCount(1), 0);
}

TEST(ClassingTest, HalfEpsilonBoundaries) {
  KcmInstance inst{std::make_shared<UniformMatroid>(8, 2),
                   {0, 3, 4, 5, 6, 7, 8, 9}, std::vector<std::int64_t>(8, 1),
                   1};
  const CostClassing cl = BuildCostClasses(inst, MakeRational(1, 2), 8);
  EXPECT_EQ(cl.k_eps, 2);
  ASSERT_EQ(cl.classes.size(), 3u);
  EXPECT_EQ(cl.classes[0], ElementSet({1, 2}));
  EXPECT_EQ(cl.classes[1], ElementSet({3, 4}));
  EXPECT_EQ(cl.classes[2], ElementSet({5, 6, 7}));
  EXPECT_EQ(cl.over_cap, ElementSet{8});
  EXPECT_EQ(cl.ClassOf(8), -1);
  EXPECT_EQ(cl.ClassOf(7), 2);
}

TEST(ClassingTest, ZeroCostsGoToClassZero) {
  KcmInstance inst{std::make_shared<UniformMatroid>(4, 2), {0, 0, 0, 0},
                   {1, 1, 1, 1}, 1};
  const CostClassing cl = BuildCostClasses(inst, MakeRational(1, 3), 0);
  EXPECT_EQ(cl.classes[0], ElementSet::Range(4));
  EXPECT_TRUE(cl.over_cap.empty());
}

TEST(PatternTest, CountsMatchDirectEnumeration) {
  for (int denom : {1, 2, 3}) {
    const Rational eps = MakeRational(1, denom);
    KcmInstance inst{std::make_shared<UniformMatroid>(4, 2), Ids(4), Ids(4), 1};
    const CostClassing cl = BuildCostClasses(inst, eps, 4);
    for (int n_elems = 0; n_elems <= 4; ++n_elems) {
      const auto patterns = EnumeratePatterns(cl, n_elems);
      // Odometer over [0, n_elems]^(k_eps + 1) with both filters.
      std::vector<PatternVector> want;
      PatternVector v(cl.k_eps + 1, 0);
      while (true) {
        int high = 0, all = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
          all += v[i];
          if (i > 0) high += v[i];
        }
        if (high <= denom && all <= n_elems) want.push_back(v);
        std::size_t i = 0;
        while (i < v.size() && v[i] == n_elems) v[i++] = 0;
        if (i == v.size()) break;
        ++v[i];
      }
      std::sort(want.begin(), want.end());
      EXPECT_EQ(patterns, want) << denom << " " << n_elems;
    }
  }
}

TEST(PatternTest, EdgeCases) {
  KcmInstance inst{std::make_shared<UniformMatroid>(3, 2), {1, 2, 3},
                   {1, 1, 1}, 1};
  const CostClassing one = BuildCostClasses(inst, 1, 3);
  for (const PatternVector& p : EnumeratePatterns(one, 3)) {
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_EQ(p[i], 0);
  }
  const CostClassing half = BuildCostClasses(inst, MakeRational(1, 2), 3);
  EXPECT_EQ(EnumeratePatterns(half, 0),
            std::vector<PatternVector>{PatternVector(3, 0)});
}

TEST(PatternTest, OptimaHaveAnEnumeratedPattern) {
  Rng rng(55);
  for (int trial = 0; trial < 80; ++trial) {
    const KcmInstance inst = testing::RandomFeasibleKcm(UniformInt(rng, 1, 8), 10, rng);
    const auto opt = BruteForceKcmb(inst);
    ASSERT_TRUE(opt.has_value());
    for (const Rational eps : {MakeRational(1, 2), MakeRational(1, 3)}) {
      const CostClassing cl = BuildCostClasses(inst, eps, opt->cost);
      EXPECT_TRUE((opt->set & cl.over_cap).empty());
      const auto patterns = EnumeratePatterns(cl, inst.ground_size());
      EXPECT_TRUE(std::binary_search(patterns.begin(), patterns.end(),
                                     CountVector(cl, opt->set)));
    }
  }
}

TEST(LagrangianTest, ZeroLambdaAndEmptyPattern) {
  KcmInstance inst{std::make_shared<UniformMatroid>(4, 2), {4, 1, 1, 4},
                   {3, 1, 2, 5}, 5};
  const CostClassing cl = BuildCostClasses(inst, MakeRational(1, 2), 5);
  // Everything in class 0 except cost 4 = 0.8 C, which is class 2.
  const LagrangianPoint at_zero = LagrangianValue(inst, cl, {2, 0, 0}, 0);
  ASSERT_TRUE(at_zero.value.has_value());
  EXPECT_EQ(*at_zero.value, 2);
  EXPECT_EQ(at_zero.argmin, ElementSet({2, 3}));
  const LagrangianPoint none = LagrangianValue(inst, cl, {0, 2, 0}, 0);
  EXPECT_FALSE(none.value.has_value());
}

TEST(LagrangianTest, LowerBoundAndConcavity) {
  Rng rng(60);
  for (int trial = 0; trial < 40; ++trial) {
    const KcmInstance inst = testing::RandomFeasibleKcm(UniformInt(rng, 2, 8), 10, rng);
    const std::int64_t c = ExactCostEstimator()(inst);
    const CostClassing cl = BuildCostClasses(inst, MakeRational(1, 2), c);
    for (const PatternVector& p : UsablePatterns(inst, cl)) {
      const auto bases = testing::BruteCommonBases(inst, cl, p);
      std::optional<std::int64_t> restricted;
      for (ElementSet s : bases) {
        if (Weight(s, inst.size) < inst.demand) continue;
        const std::int64_t cost = Weight(s, inst.cost);
        if (!restricted || cost < *restricted) restricted = cost;
      }
      for (int sample = 0; sample < 10; ++sample) {
        const Rational a = RandomLambda(rng), b = RandomLambda(rng);
        const LagrangianPoint la = LagrangianValue(inst, cl, p, a);
        EXPECT_EQ(la.value, BruteLagrangian(bases, inst, a));
        if (!la.value) continue;
        if (restricted) EXPECT_LE(*la.value, Rational(*restricted));
        const LagrangianPoint lb = LagrangianValue(inst, cl, p, b);
        const LagrangianPoint mid = LagrangianValue(inst, cl, p, (a + b) / 2);
        EXPECT_GE(*mid.value * 2, *la.value + *lb.value);
      }
    }
  }
}

TEST(OptimizeLambdaTest, CoveredAtZero) {
  KcmInstance inst{std::make_shared<UniformMatroid>(4, 2), {4, 1, 1, 4},
                   {3, 1, 2, 5}, 2};
  const CostClassing cl = BuildCostClasses(inst, MakeRational(1, 2), 5);
  const LagrangianResult r = OptimizeLambda(inst, cl, {2, 0, 0});
  EXPECT_EQ(r.lambda_star, 0);
  EXPECT_EQ(r.s_high, ElementSet({2, 3}));
  EXPECT_FALSE(r.s_low.has_value());
}

TEST(OptimizeLambdaTest, SingleCommonBasis) {
  std::vector<ElementSet> only = {ElementSet(), ElementSet{1}, ElementSet{2},
                                  ElementSet{1, 2}};
  KcmInstance inst{std::make_shared<ExplicitMatroid>(3, only), {1, 1, 1},
                   {1, 1, 1}, 2};
  const CostClassing cl = BuildCostClasses(inst, 1, 2);
  const LagrangianResult r = OptimizeLambda(inst, cl, {2});
  EXPECT_EQ(r.s_high, ElementSet({1, 2}));
  if (r.s_low) EXPECT_EQ(*r.s_low, ElementSet({1, 2}));
}

TEST(OptimizeLambdaTest, MaximizesAndBrackets) {
  Rng rng(61);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const KcmInstance inst = testing::RandomFeasibleKcm(UniformInt(rng, 2, 10), 10, rng);
    const std::int64_t c = ExactCostEstimator()(inst);
    const CostClassing cl = BuildCostClasses(inst, MakeRational(1, 2), c);
    for (const PatternVector& p : UsablePatterns(inst, cl)) {
      const auto bases = testing::BruteCommonBases(inst, cl, p);
      if (bases.empty()) {
        EXPECT_THROW(OptimizeLambda(inst, cl, p), EmptyFeasible);
        continue;
      }
      bool covers = false;
      for (ElementSet s : bases) covers |= Weight(s, inst.size) >= inst.demand;
      if (!covers) {
        EXPECT_THROW(OptimizeLambda(inst, cl, p), NoBracket);
        continue;
      }
      const LagrangianResult r = OptimizeLambda(inst, cl, p);
      ++checked;
      EXPECT_EQ(r.value, *BruteLagrangian(bases, inst, r.lambda_star));
      for (int sample = 0; sample < (checked <= 3 ? 1000 : 30); ++sample) {
        const Rational lambda = RandomLambda(rng);
        EXPECT_GE(r.value, *BruteLagrangian(bases, inst, lambda));
      }
      Rational best_reduced = ReducedCost(inst, r.lambda_star, bases[0]);
      for (ElementSet s : bases) {
        best_reduced = std::min(best_reduced, ReducedCost(inst, r.lambda_star, s));
      }
      EXPECT_GE(Weight(r.s_high, inst.size), inst.demand);
      EXPECT_EQ(ReducedCost(inst, r.lambda_star, r.s_high), best_reduced);
      if (r.s_low) {
        EXPECT_LE(Weight(*r.s_low, inst.size), inst.demand);
        EXPECT_EQ(ReducedCost(inst, r.lambda_star, *r.s_low), best_reduced);
      } else {
        EXPECT_EQ(r.lambda_star, 0);
      }
    }
  }
  EXPECT_GT(checked, 20);
}

// Checks every step against enumeration: common basis, reduced-cost
// optimal, at most one swap per class, strictly closer to the end.
void VerifyChain(const KcmInstance& inst, const CostClassing& cl,
                 const PatternVector& p, const Rational& lambda,
                 const std::vector<ElementSet>& chain, ElementSet from,
                 ElementSet to) {
  const auto bases = testing::BruteCommonBases(inst, cl, p);
  Rational best = ReducedCost(inst, lambda, bases.at(0));
  for (ElementSet s : bases) best = std::min(best, ReducedCost(inst, lambda, s));
  ASSERT_FALSE(chain.empty());
  EXPECT_EQ(chain.front(), from);
  EXPECT_EQ(chain.back(), to);
  for (std::size_t j = 0; j < chain.size(); ++j) {
    EXPECT_TRUE(std::count(bases.begin(), bases.end(), chain[j]));
    EXPECT_EQ(ReducedCost(inst, lambda, chain[j]), best);
    if (j == 0) continue;
    const ElementSet out = chain[j - 1] - chain[j];
    const ElementSet in = chain[j] - chain[j - 1];
    for (ElementSet cls : cl.classes) {
      EXPECT_LE((out & cls).size(), 1);
      EXPECT_LE((in & cls).size(), 1);
    }
    EXPECT_LT((chain[j] ^ to).size(), (chain[j - 1] ^ to).size());
  }
}

TEST(ChainTest, TrivialCases) {
  KcmInstance inst{std::make_shared<UniformMatroid>(4, 2), {1, 1, 1, 1},
                   {1, 2, 3, 4}, 1};
  const CostClassing cl = BuildCostClasses(inst, 1, 2);
  EXPECT_EQ(Chain(inst, cl, {2}, 0, ElementSet{1, 2}, ElementSet{1, 2}),
            std::vector<ElementSet>{ElementSet({1, 2})});
  const auto two = Chain(inst, cl, {2}, 0, ElementSet{1, 2}, ElementSet{1, 3});
  EXPECT_EQ(two, (std::vector<ElementSet>{ElementSet{1, 2}, ElementSet{1, 3}}));
  EXPECT_THROW(Chain(inst, cl, {2}, 1, ElementSet{1, 2}, ElementSet{3, 4}),
               InvalidArgument);
}

TEST(ChainTest, StepsVerifiedOnRandomInstances) {
  Rng rng(62);
  int chains = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const KcmInstance inst = testing::RandomFeasibleKcm(UniformInt(rng, 2, 10), 10, rng);
    const std::int64_t c = ExactCostEstimator()(inst);
    const CostClassing cl = BuildCostClasses(inst, MakeRational(1, 2), c);
    for (const PatternVector& p : UsablePatterns(inst, cl)) {
      LagrangianResult r;
      try {
        r = OptimizeLambda(inst, cl, p);
      } catch (const EmptyFeasible&) {
        continue;
      } catch (const NoBracket&) {
        continue;
      }
      if (!r.s_low) continue;
      const auto chain = Chain(inst, cl, p, r.lambda_star, *r.s_low, r.s_high);
      VerifyChain(inst, cl, p, r.lambda_star, chain, *r.s_low, r.s_high);
      ++chains;
    }
  }
  EXPECT_GT(chains, 10);
}

TEST(EptasTest, ExactHit) {
  KcmInstance inst{std::make_shared<UniformMatroid>(4, 2), {4, 1, 1, 4},
                   {3, 1, 2, 5}, 5};
  const auto got = KcmbEptas(inst, MakeRational(1, 2));
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(got->cost, 5);
  inst.demand = 9;
  EXPECT_FALSE(KcmbEptas(inst, MakeRational(1, 2)).has_value());
}

TEST(EptasTest, RatioAndFeasibilityOnRandomInstances) {
  Rng rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const KcmInstance inst = testing::RandomFeasibleKcm(UniformInt(rng, 1, 10), 10, rng);
    const auto opt = BruteForceKcmb(inst);
    ASSERT_TRUE(opt.has_value());
    for (const Rational eps : {MakeRational(1, 2), MakeRational(1, 3)}) {
      EptasTrace trace;
      EptasOptions options;
      options.trace = &trace;
      const auto got = KcmbEptas(inst, eps, options);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(got->set.size(), Rank(*inst.matroid));
      EXPECT_TRUE(inst.matroid->IsIndependent(got->set));
      EXPECT_GE(Weight(got->set, inst.size), inst.demand);
      EXPECT_EQ(got->cost, Weight(got->set, inst.cost));
      EXPECT_LE(Rational(got->cost), (1 + 5 * eps) * opt->cost);
      EXPECT_EQ(trace.c_estimate, opt->cost);
      for (const PatternRecord& rec : trace.patterns) {
        if (!rec.skipped.empty() || !rec.lagrangian || !rec.lagrangian->s_low) {
          continue;
        }
        VerifyChain(inst, trace.classing, rec.pattern,
                    rec.lagrangian->lambda_star, rec.chain,
                    *rec.lagrangian->s_low, rec.lagrangian->s_high);
      }
    }
  }
}

TEST(EptasTest, DoublingEstimatorStaysFeasible) {
  Rng rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const KcmInstance inst = testing::RandomFeasibleKcm(UniformInt(rng, 1, 9), 10, rng);
    const auto opt = BruteForceKcmb(inst);
    EptasOptions options;
    options.estimator = DoublingCostEstimator(ExactCostEstimator());
    const auto got = KcmbEptas(inst, 1, options);
    ASSERT_TRUE(got.has_value());
    EXPECT_GE(Weight(got->set, inst.size), inst.demand);
    EXPECT_LE(got->cost, 6 * opt->cost);
  }
}

KcmbSolver ExactKcmb() {
  return [](const KcmInstance& inst, const Rational&) -> std::optional<ElementSet> {
    const auto s = BruteForceKcmb(inst);
    if (!s) return std::nullopt;
    return s->set;
  };
}

TEST(KcmViaKcmbTest, Examples) {
  // Rank 5, but the cheapest cover uses the two large elements.
  KcmInstance inst{std::make_shared<UniformMatroid>(7, 5),
                   {1, 1, 1, 1, 1, 3, 3}, {1, 1, 1, 1, 1, 9, 9}, 18};
  const auto got = KcmViaKcmb(inst, ExactKcmb(), MakeRational(1, 2));
  ASSERT_TRUE(got.has_value());
  EXPECT_EQ(got->set, ElementSet({6, 7}));
  EXPECT_EQ(got->cost, 6);
  inst.demand = 0;
  const auto empty = KcmViaKcmb(inst, ExactKcmb(), MakeRational(1, 2));
  ASSERT_TRUE(empty.has_value());
  EXPECT_EQ(empty->set, ElementSet());
  EXPECT_EQ(empty->cost, 0);
  inst.demand = 100;
  EXPECT_FALSE(KcmViaKcmb(inst, ExactKcmb(), MakeRational(1, 2)).has_value());
}

TEST(KcmViaKcmbTest, MatchesBruteForceKcm) {
  Rng rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const KcmInstance inst = testing::RandomFeasibleKcm(UniformInt(rng, 1, 8), 10, rng);
    const auto want = BruteForceKcm(inst);
    const auto got = KcmViaKcmb(inst, ExactKcmb(), MakeRational(1, 2));
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) EXPECT_EQ(got->cost, want->cost);
  }
}

KcmSolver ExactKcm() {
  return [](const KcmInstance& inst) -> std::optional<ElementSet> {
    const auto s = BruteForceKcm(inst);
    if (!s) return std::nullopt;
    return s->set;
  };
}

TEST(ShiftTest, Examples) {
  KcmInstance zero{std::make_shared<UniformMatroid>(4, 2), {1, 2, 3, 4},
                   {0, 0, 0, 0}, 0};
  const auto any = KcmbViaKcmShift(zero, ExactKcm());
  ASSERT_TRUE(any.has_value());
  EXPECT_EQ(any->set.size(), 2);
  KcmInstance infeasible{std::make_shared<UniformMatroid>(4, 2), {1, 1, 1, 1},
                         {1, 1, 1, 1}, 3};
  EXPECT_FALSE(KcmbViaKcmShift(infeasible, ExactKcm()).has_value());
  const KcmInstance shifted = ShiftToBasisInstance(infeasible);
  EXPECT_EQ(shifted.size, std::vector<std::int64_t>(4, 9));
  EXPECT_EQ(shifted.demand, 3 + 2 * 8);
}

TEST(ShiftTest, MatchesBruteForceKcmb) {
  Rng rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    KcmInstance inst = testing::RandomFeasibleKcm(UniformInt(rng, 1, 8), 10, rng);
    if (trial % 4 == 0) inst.demand += 50;
    const auto want = BruteForceKcmb(inst);
    const auto got = KcmbViaKcmShift(inst, ExactKcm());
    ASSERT_EQ(got.has_value(), want.has_value());
    if (!got) continue;
    EXPECT_EQ(got->cost, want->cost);
    EXPECT_EQ(got->set.size(), Rank(*inst.matroid));
  }
}

}  // namespace
}  // namespace matkit
