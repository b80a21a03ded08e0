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

#include "matkit/kcm.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "matkit/errors.h"
#include "matkit/matroid_algorithms.h"

namespace matkit {

namespace {

std::int64_t Total(std::span<const std::int64_t> values) {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

}  // namespace

void KcmInstance::Validate() const {
  if (!matroid) throw InvalidArgument("instance has no matroid");
  const std::size_t n = matroid->ground_size();
  if (cost.size() != n || size.size() != n) {
    throw InvalidArgument("cost/size vectors do not match ground set");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cost[i] < 0 || size[i] < 0) {
      throw InvalidArgument("costs and sizes must be >= 0");
    }
  }
}

std::optional<KcmSolution> BruteForceKcm(const KcmInstance& inst, int limit) {
  inst.Validate();
  const int n = inst.ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  std::optional<KcmSolution> best;
  ForEachSubsetBySize(n, [&](ElementSet s) {
    if (Weight(s, inst.size) < inst.demand) return true;
    const std::int64_t c = Weight(s, inst.cost);
    if ((!best || c < best->cost) && inst.matroid->IsIndependent(s)) {
      best = KcmSolution{s, c};
    }
    return true;
  });
  return best;
}

std::optional<KcmSolution> BruteForceKcmb(const KcmInstance& inst, int limit) {
  inst.Validate();
  const int n = inst.ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  std::optional<KcmSolution> best;
  ForEachKSubset(n, Rank(*inst.matroid), [&](ElementSet s) {
    if (Weight(s, inst.size) < inst.demand) return true;
    const std::int64_t c = Weight(s, inst.cost);
    if ((!best || c < best->cost) && inst.matroid->IsIndependent(s)) {
      best = KcmSolution{s, c};
    }
    return true;
  });
  return best;
}

std::optional<KcmSolution> KcmViaKcmb(const KcmInstance& inst,
                                      const KcmbSolver& solver,
                                      const Rational& eps) {
  inst.Validate();
  if (inst.demand <= 0) return KcmSolution{ElementSet(), 0};
  std::optional<KcmSolution> best;
  const int rank = Rank(*inst.matroid);
  for (int q = 1; q <= rank; ++q) {
    KcmInstance truncated = inst;
    truncated.matroid = Truncate(inst.matroid, q);
    const std::optional<ElementSet> s = solver(truncated, eps);
    if (!s) continue;
    if (s->size() != q || !inst.matroid->IsIndependent(*s) ||
        Weight(*s, inst.size) < inst.demand) {
      throw ContractViolation("basis solver returned " + s->ToString() +
                              ", which does not cover the demand");
    }
    const std::int64_t c = Weight(*s, inst.cost);
    if (!best || c < best->cost) best = KcmSolution{*s, c};
  }
  return best;
}

KcmInstance ShiftToBasisInstance(const KcmInstance& inst) {
  inst.Validate();
  const std::int64_t shift = 2 * std::max<std::int64_t>(1, Total(inst.size));
  const int rank = Rank(*inst.matroid);
  KcmInstance out = inst;
  for (std::int64_t& d : out.size) d += shift;
  out.demand = inst.demand + rank * shift;
  return out;
}

std::optional<KcmSolution> KcmbViaKcmShift(const KcmInstance& inst,
                                           const KcmSolver& solver) {
  const KcmInstance shifted = ShiftToBasisInstance(inst);
  const std::optional<ElementSet> s = solver(shifted);
  if (!s) return std::nullopt;
  if (!inst.matroid->IsIndependent(*s) ||
      Weight(*s, shifted.size) < shifted.demand) {
    throw ContractViolation("cover solver returned " + s->ToString() +
                            ", which does not cover the shifted demand");
  }
  if (s->size() != Rank(*inst.matroid) ||
      Weight(*s, inst.size) < inst.demand) {
    throw InvariantViolation("shifted cover " + s->ToString() +
                             " is not a covering basis");
  }
  return KcmSolution{*s, Weight(*s, inst.cost)};
}

CostEstimator ExactCostEstimator(int limit) {
  return [limit](const KcmInstance& inst) {
    auto best = BruteForceKcmb(inst, limit);
    if (!best) throw Infeasible("no basis covers the demand");
    return best->cost;
  };
}

CostEstimator DoublingCostEstimator(CostEstimator base) {
  return [base = std::move(base)](const KcmInstance& inst) {
    return 2 * base(inst);
  };
}

Rational NormalizeEpsilon(const Rational& eps) {
  if (eps <= 0 || eps > 1) {
    throw InvalidArgument("eps must lie in (0, 1], got " + ToString(eps));
  }
  return Rational(1) / Rational(Ceil(Rational(1) / eps));
}

int ClassCount(const Rational& eps) {
  return static_cast<int>(Ceil((1 - eps) / (eps * eps)));
}

int CostClassing::ClassOf(Element e) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].Contains(e)) return static_cast<int>(i);
  }
  return -1;
}

CostClassing BuildCostClasses(const KcmInstance& inst, const Rational& eps,
                              std::int64_t c_estimate) {
  inst.Validate();
  if (c_estimate < 0) throw InvalidArgument("cost estimate must be >= 0");
  CostClassing out;
  out.eps = NormalizeEpsilon(eps);
  out.c_estimate = c_estimate;
  out.k_eps = ClassCount(out.eps);
  out.classes.assign(out.k_eps + 1, ElementSet());
  const Rational eps2 = out.eps * out.eps;
  for (Element e = 1; e <= inst.ground_size(); ++e) {
    const std::int64_t c = inst.cost[e - 1];
    if (c > c_estimate) {
      out.over_cap.Insert(e);
      continue;
    }
    if (c == c_estimate) {
      // eps + k_eps eps^2 = 1, so c = C closes the last class. C = 0 puts
      // zero-cost elements into E_0 instead.
      out.classes[c_estimate == 0 ? 0 : out.k_eps].Insert(e);
      continue;
    }
    const Rational ratio = Rational(c) / c_estimate;
    if (ratio < out.eps) {
      out.classes[0].Insert(e);
      continue;
    }
    int i = static_cast<int>(Floor((ratio - out.eps) / eps2)) + 1;
    out.classes[std::min(i, out.k_eps)].Insert(e);
  }
  return out;
}

namespace {

void ExtendPatterns(int cls, int k_eps, int budget, PatternVector& current,
                    std::vector<PatternVector>& out) {
  if (cls > k_eps) {
    out.push_back(current);
    return;
  }
  for (int x = 0; x <= budget; ++x) {
    current[cls] = x;
    ExtendPatterns(cls + 1, k_eps, budget - x, current, out);
  }
  current[cls] = 0;
}

}  // namespace

std::vector<PatternVector> EnumeratePatterns(const CostClassing& classing,
                                             int n_elems) {
  const int inv = static_cast<int>(Ceil(Rational(1) / classing.eps));
  std::vector<PatternVector> upper;
  PatternVector current(classing.k_eps + 1, 0);
  ExtendPatterns(1, classing.k_eps, std::min(inv, n_elems), current, upper);
  std::vector<PatternVector> out;
  for (PatternVector& p : upper) {
    const int used = std::accumulate(p.begin() + 1, p.end(), 0);
    for (int n0 = 0; n0 + used <= n_elems; ++n0) {
      p[0] = n0;
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PartitionMatroid PatternMatroid(const CostClassing& classing,
                                const PatternVector& pattern, int n) {
  if (pattern.size() != classing.classes.size()) {
    throw InvalidArgument("pattern length does not match class count");
  }
  std::vector<ElementSet> blocks = classing.classes;
  std::vector<int> bounds(pattern.begin(), pattern.end());
  blocks.push_back(classing.over_cap);
  bounds.push_back(0);
  return PartitionMatroid(n, std::move(blocks), std::move(bounds));
}

namespace {

// Shared state for one (instance, pattern) pair.
struct PatternProblem {
  const KcmInstance& inst;
  PartitionMatroid pattern;
  int rank;
  IntersectionOptions options;

  std::optional<ElementSet> Solve(const std::vector<Rational>& weights) const {
    return MinWeightCommonBasis(*inst.matroid, pattern, weights, rank,
                                options);
  }

  std::vector<Rational> Reduced(const Rational& lambda,
                                const Rational& tilt = 0) const {
    std::vector<Rational> w(inst.cost.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = inst.cost[i] - (lambda + tilt) * inst.size[i];
    }
    return w;
  }

  bool IsCommonBasis(ElementSet s) const {
    return s.size() == rank && inst.matroid->IsIndependent(s) &&
           pattern.IsIndependent(s);
  }
};

PatternProblem MakeProblem(const KcmInstance& inst,
                           const CostClassing& classing,
                           const PatternVector& pattern,
                           const IntersectionOptions& options) {
  inst.Validate();
  return PatternProblem{inst,
                        PatternMatroid(classing, pattern, inst.ground_size()),
                        Rank(*inst.matroid), options};
}

Rational ReducedCost(const KcmInstance& inst, const Rational& lambda,
                     ElementSet s) {
  return Rational(Weight(s, inst.cost)) - lambda * Weight(s, inst.size);
}

}  // namespace

LagrangianPoint LagrangianValue(const KcmInstance& inst,
                                const CostClassing& classing,
                                const PatternVector& pattern,
                                const Rational& lambda,
                                const IntersectionOptions& options) {
  const PatternProblem problem = MakeProblem(inst, classing, pattern, options);
  LagrangianPoint out;
  out.argmin = problem.Solve(problem.Reduced(lambda));
  if (out.argmin) {
    out.value = lambda * inst.demand + ReducedCost(inst, lambda, *out.argmin);
  }
  return out;
}

LagrangianResult OptimizeLambda(const KcmInstance& inst,
                                const CostClassing& classing,
                                const PatternVector& pattern,
                                const IntersectionOptions& options) {
  const PatternProblem problem = MakeProblem(inst, classing, pattern, options);
  const std::int64_t total_size = Total(inst.size);
  const std::int64_t total_cost = Total(inst.cost);
  const std::int64_t demand = inst.demand;

  // Cheapest basis, ties toward larger size.
  std::vector<Rational> w(inst.cost.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = Rational(inst.cost[i]) * (total_size + 1) - inst.size[i];
  }
  const std::optional<ElementSet> cheapest = problem.Solve(w);
  if (!cheapest) throw EmptyFeasible("pattern admits no common basis");

  LagrangianResult out;
  if (Weight(*cheapest, inst.size) >= demand) {
    out.lambda_star = 0;
    out.value = Weight(*cheapest, inst.cost);
    out.s_high = *cheapest;
    return out;
  }

  // Largest basis, ties toward lower cost.
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = Rational(inst.cost[i]) - Rational(inst.size[i]) * (total_cost + 1);
  }
  const std::optional<ElementSet> largest = problem.Solve(w);
  if (Weight(*largest, inst.size) < demand) {
    throw NoBracket("no common basis of the pattern covers the demand");
  }

  // LR is the lower envelope of the lines c(S) + lambda (D - d(S)). Keep one
  // line of positive slope (a) and one of non-positive slope (b); their
  // intersection either lies on the envelope or exposes a lower line that
  // replaces one of them.
  ElementSet a = *cheapest;
  ElementSet b = *largest;
  Rational lambda;
  while (true) {
    lambda = Rational(Weight(b, inst.cost) - Weight(a, inst.cost)) /
             (Weight(b, inst.size) - Weight(a, inst.size));
    const Rational line =
        Weight(a, inst.cost) + lambda * (demand - Weight(a, inst.size));
    const ElementSet s = *problem.Solve(problem.Reduced(lambda));
    const Rational value = lambda * demand + ReducedCost(inst, lambda, s);
    if (value == line) break;
    if (value > line) throw InvariantViolation("envelope above a line");
    if (Weight(s, inst.size) < demand) {
      a = s;
    } else {
      b = s;
    }
  }

  out.lambda_star = lambda;
  // Reduced costs of bases are multiples of 1/q for lambda = p/q; a tilt of
  // less than 1/(2q) in total only breaks ties.
  const Rational tilt =
      Rational(1) / (BigInt(2) * Denominator(lambda) * (total_size + 1));
  const ElementSet low = *problem.Solve(problem.Reduced(lambda, -tilt));
  const ElementSet high = *problem.Solve(problem.Reduced(lambda, tilt));
  if (Weight(low, inst.size) > demand || Weight(high, inst.size) < demand) {
    throw InvariantViolation("optimal bases at lambda* do not bracket D");
  }
  out.value = lambda * demand + ReducedCost(inst, lambda, high);
  out.s_low = low;
  out.s_high = high;
  return out;
}

namespace {

// Tries every way of picking one swap (x out, y in) in each of the given
// classes; visit returns true to stop.
template <typename Visitor>
bool ForEachSwapSet(const std::vector<std::pair<std::vector<Element>,
                                                std::vector<Element>>>& options,
                    const std::vector<int>& chosen, std::size_t at,
                    ElementSet current, Visitor&& visit) {
  if (at == chosen.size()) return visit(current);
  const auto& [outs, ins] = options[chosen[at]];
  for (Element x : outs) {
    for (Element y : ins) {
      if (ForEachSwapSet(options, chosen, at + 1, current.Without(x).With(y),
                         visit)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<ElementSet> Chain(const KcmInstance& inst,
                              const CostClassing& classing,
                              const PatternVector& pattern,
                              const Rational& lambda, ElementSet from,
                              ElementSet to,
                              const IntersectionOptions& options) {
  const PatternProblem problem = MakeProblem(inst, classing, pattern, options);
  const std::optional<ElementSet> best = problem.Solve(problem.Reduced(lambda));
  if (!best) throw EmptyFeasible("pattern admits no common basis");
  const Rational optimum = ReducedCost(inst, lambda, *best);
  auto optimal = [&](ElementSet s) {
    return problem.IsCommonBasis(s) && ReducedCost(inst, lambda, s) == optimum;
  };
  if (!optimal(from) || !optimal(to)) {
    throw InvalidArgument("chain endpoints must be optimal common bases");
  }

  std::vector<ElementSet> chain{from};
  ElementSet current = from;
  while (current != to) {
    // Per class: elements to drop (in current, not in target) and to add.
    std::vector<std::pair<std::vector<Element>, std::vector<Element>>> swaps;
    std::vector<int> active;
    for (std::size_t i = 0; i < classing.classes.size(); ++i) {
      const ElementSet cls = classing.classes[i];
      swaps.emplace_back(((current - to) & cls).ToVector(),
                         ((to - current) & cls).ToVector());
      if (!swaps.back().first.empty() && !swaps.back().second.empty()) {
        active.push_back(static_cast<int>(i));
      }
    }
    std::optional<ElementSet> next;
    const int m = static_cast<int>(active.size());
    // Fewest classes first; within a size, subsets in lexicographic order.
    for (int r = 1; r <= m && !next; ++r) {
      ForEachKSubset(m, r, [&](ElementSet pick) {
        std::vector<int> chosen;
        for (Element p : pick.ToVector()) chosen.push_back(active[p - 1]);
        ForEachSwapSet(swaps, chosen, 0, current, [&](ElementSet cand) {
          if (!optimal(cand)) return false;
          next = cand;
          return true;
        });
        return !next.has_value();
      });
    }
    if (!next) {
      throw ChainSearchFailed("no balanced swap from " + current.ToString() +
                              " toward " + to.ToString());
    }
    current = *next;
    chain.push_back(current);
  }
  return chain;
}

std::optional<KcmSolution> KcmbEptas(const KcmInstance& inst,
                                     const Rational& eps,
                                     const EptasOptions& options) {
  inst.Validate();
  const Rational e = NormalizeEpsilon(eps);
  const MatroidOracle& m = *inst.matroid;
  const int n = inst.ground_size();
  const int rank = Rank(m);

  const ElementSet widest = GreedyExtremeBasis(m, inst.size, Direction::kMax);
  if (Weight(widest, inst.size) < inst.demand) return std::nullopt;
  KcmSolution incumbent{widest, Weight(widest, inst.cost)};

  const CostEstimator estimator =
      options.estimator ? options.estimator : ExactCostEstimator();
  const std::int64_t c_estimate = estimator(inst);
  const CostClassing classing = BuildCostClasses(inst, e, c_estimate);
  if (options.trace) {
    options.trace->eps = e;
    options.trace->c_estimate = c_estimate;
    options.trace->classing = classing;
    options.trace->patterns.clear();
  }

  for (const PatternVector& pattern : EnumeratePatterns(classing, n)) {
    PatternRecord record;
    record.pattern = pattern;
    bool usable = std::accumulate(pattern.begin(), pattern.end(), 0) == rank;
    if (!usable) record.skipped = "pattern size differs from rank";
    for (std::size_t i = 0; usable && i < pattern.size(); ++i) {
      if (pattern[i] > classing.classes[i].size()) {
        usable = false;
        record.skipped = "class too small";
      }
    }
    if (usable) {
      try {
        record.lagrangian =
            OptimizeLambda(inst, classing, pattern, options.intersection);
      } catch (const EmptyFeasible&) {
        record.skipped = "no common basis";
      } catch (const NoBracket&) {
        record.skipped = "no covering basis";
      }
    }
    if (record.lagrangian) {
      const LagrangianResult& lr = *record.lagrangian;
      if (!lr.s_low) {
        record.candidate = lr.s_high;
      } else {
        record.chain = Chain(inst, classing, pattern, lr.lambda_star,
                             *lr.s_low, lr.s_high, options.intersection);
        if (record.chain.size() == 1) record.candidate = record.chain[0];
        for (std::size_t j = 0; j + 1 < record.chain.size(); ++j) {
          if (Weight(record.chain[j], inst.cost) <= lr.value &&
              lr.value <= Weight(record.chain[j + 1], inst.cost)) {
            record.candidate = record.chain[j + 1];
            break;
          }
        }
      }
      if (record.candidate) {
        const ElementSet s = *record.candidate;
        const std::int64_t c = Weight(s, inst.cost);
        if (Weight(s, inst.size) >= inst.demand && c < incumbent.cost) {
          incumbent = KcmSolution{s, c};
        }
      }
    }
    if (options.trace) options.trace->patterns.push_back(std::move(record));
  }
  return incumbent;
}

KcmbSolver EptasSolver(EptasOptions options) {
  return [options = std::move(options)](const KcmInstance& inst,
                                        const Rational& eps) {
    std::optional<ElementSet> out;
    if (auto s = KcmbEptas(inst, eps, options)) out = s->set;
    return out;
  };
}

}  // namespace matkit
