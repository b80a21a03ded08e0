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

// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "matkit/adversary.h"
#include "matkit/emb.h"
#include "matkit/errors.h"
#include "matkit/kcm.h"
#include "matkit/legacy.h"
#include "matkit/matroid_algorithms.h"
#include "matkit/mol.h"
#include "matkit/pi_matroid.h"
#include "matkit/sat.h"
#include "support/test_support.h"

namespace matkit {
namespace {

using testing::Rng;
using testing::UniformInt;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void Check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  long checks() const { return checks_; }
  long failures() const { return failures_; }

  Outcome Done(const std::string& summary) const {
    std::ostringstream os;
    os << summary << "; " << failures_ << " failures in " << checks_
       << " checks";
    if (!first_.empty()) os << "; first: " << first_;
    return {failures_ == 0, os.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::string first_;
};

std::string Str(ElementSet s) { return s.ToString(); }

// 1. Pi-matroid axioms, exhaustive over small parameters.
Outcome AxiomSuite() {
  Rng rng(101);
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (std::int64_t alpha = 1; alpha <= n * n; ++alpha) {
        for (int trial = 0; trial < 50; ++trial) {
          PiMatroid pm(n, k, alpha,
                       testing::RandomExplicitSecret(n, k, alpha, rng));
          const AxiomReport r = VerifyMatroidAxioms(pm);
          t.Check(r.ok(), "n=" + std::to_string(n) + " k=" +
                              std::to_string(k) + " alpha=" +
                              std::to_string(alpha) + " " +
                              ToString(r.failure));
        }
      }
    }
  }
  return t.Done("Pi-matroids with n <= 5, 50 secrets per (n, k, alpha)");
}

// 2. Budget-limited deciders always lose; exhaustive ones never do.
Outcome AdversaryDefeat() {
  Rng rng(202);
  Tally t;
  long runs = 0;
  for (int n = 6; n <= 12; ++n) {
    const int k = n / 2;
    const std::int64_t alpha = ArgmaxAlpha(n, k);
    const int family = static_cast<int>(CountTargetSets(n, k, alpha));
    const std::string where = "n=" + std::to_string(n);
    for (int d = 0; d < 50; ++d) {
      const int budget = d == 0 ? family - 1 : UniformInt(rng, 0, family - 1);
      const Decider decider =
          d % 2 == 0 ? BudgetDecider(budget)
                     : testing::GeneratedBudgetDecider(budget,
                                                       UniformInt(rng, 0, 60));
      const AdversaryReport r = AdversaryGame(decider, n, k, alpha, rng());
      ++runs;
      t.Check(r.empty_run.transcript.size() < static_cast<std::size_t>(family),
              where + " budget exceeded");
      t.Check(!r.empty_run.verdict, where + " said yes on the empty family");
      t.Check(r.defeated, where + " budget decider not defeated");
      t.Check(r.hidden_run.has_value() &&
                  r.hidden_run->transcript == r.empty_run.transcript,
              where + " replay transcripts differ");
    }
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const AdversaryReport r =
          AdversaryGame(ExhaustiveDecider(), n, k, alpha, seed);
      ++runs;
      t.Check(!r.defeated, where + " exhaustive decider defeated");
    }
  }
  return t.Done(std::to_string(runs) + " games over n = 6..12");
}

// All permutations of [n] (as 0-based images) fixing the cost vector.
std::vector<std::vector<int>> CostStabilizer(
    const std::vector<std::int64_t>& cost) {
  const int n = static_cast<int>(cost.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool fixes = true;
    for (int i = 0; i < n && fixes; ++i) fixes = cost[perm[i]] == cost[i];
    if (fixes) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Bit b of the result is set iff the subset with mask b is a basis (n <= 6).
std::uint64_t BasisIndicator(const std::vector<ElementSet>& bases) {
  std::uint64_t out = 0;
  for (ElementSet b : bases) out |= std::uint64_t{1} << b.mask();
  return out;
}

std::uint64_t Relabel(std::uint64_t indicator, const std::vector<int>& perm) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = indicator; rest != 0; rest &= rest - 1) {
    const int mask = std::countr_zero(rest);
    int image = 0;
    for (int i = 0; i < static_cast<int>(perm.size()); ++i) {
      if ((mask >> i) & 1) image |= 1 << perm[i];
    }
    out |= std::uint64_t{1} << image;
  }
  return out;
}

// Every cost vector over {0..max} of length n, or only the non-decreasing
// ones.
std::vector<std::vector<std::int64_t>> CostVectors(int n, int max,
                                                   bool sorted_only) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(n, 0);
  while (true) {
    if (!sorted_only || std::is_sorted(c.begin(), c.end())) out.push_back(c);
    int i = 0;
    while (i < n && c[i] == max) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  return out;
}

void CheckReductions(const EmbInstance& base, Tally& t, long& instances) {
  std::int64_t total = 0;
  for (auto c : base.cost) total += c;
  for (std::int64_t target = 0; target <= total; ++target) {
    EmbInstance inst = base;
    inst.target = target;
    const bool truth = BruteForceEmb(inst).has_value();
    ++instances;
    for (const MolParams& p : NonTrivialParams()) {
      const bool got = DecideEmbViaMol(inst, p, BruteForceMolSolver());
      const ValueBoundReport report = CertifyValueBounds(ReduceEmbToMol(inst, p));
      const bool ok = got == truth && report.ok;
      std::ostringstream os;
      if (!ok) {
        os << ToString(p) << " n=" << inst.ground_size() << " T=" << target
           << " " << report.failure;
      }
      t.Check(ok, os.str());
    }
  }
}

// 3. EMB reduces to every non-trivial MOL variant.
//
// Sizes up to 4 sweep every labeled matroid against every cost vector.
// Sizes 5 and 6 cover every (matroid, cost) pair up to relabeling: costs
// are taken non-decreasing and a labeled matroid is kept only if it is the
// smallest image of itself under the permutations that fix the costs.
Outcome ReductionEquivalence() {
  Tally t;
  long instances = 0;
  long pairs = 0;
  for (int n = 0; n <= 6; ++n) {
    const auto all = testing::AllMatroidBases(n);
    std::vector<MatroidPtr> matroids;
    std::vector<std::uint64_t> indicators;
    for (const auto& bases : all) {
      matroids.push_back(testing::FromBases(n, bases));
      indicators.push_back(BasisIndicator(bases));
    }
    const bool labeled = n <= 4;
    for (const auto& cost : CostVectors(n, 4, !labeled)) {
      const auto stabilizer =
          labeled ? std::vector<std::vector<int>>{} : CostStabilizer(cost);
      for (std::size_t i = 0; i < matroids.size(); ++i) {
        bool canonical = true;
        for (const auto& perm : stabilizer) {
          if (Relabel(indicators[i], perm) < indicators[i]) {
            canonical = false;
            break;
          }
        }
        if (!canonical) continue;
        ++pairs;
        CheckReductions({matroids[i], cost, 0}, t, instances);
      }
    }
  }
  return t.Done(std::to_string(pairs) + " (matroid, cost) pairs, " +
                std::to_string(instances) + " EMB instances x 7 variants");
}

// 4. Standard weights: the iff and budget lemmas, plus the 3 n^3 bound.
Outcome LegacyWeightsCheck() {
  Rng rng(404);
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (std::int64_t alpha = 1; alpha <= n * n; ++alpha) {
        for (int trial = 0; trial < 10; ++trial) {
          auto pm = std::make_shared<PiMatroid>(
              n, k, alpha, testing::RandomExplicitSecret(n, k, alpha, rng));
          const std::string where = "n=" + std::to_string(n) +
                                    " k=" + std::to_string(k) +
                                    " alpha=" + std::to_string(alpha);
          ForEachSubset(n, [&](ElementSet s) {
            if (!pm->IsIndependent(s)) return true;
            const bool in_l = s.size() == k && SumOf(s) == alpha &&
                              pm->secret().Contains(s);
            try {
              t.Check(LegacyWeightCheck(*pm, s) == in_l, where + " " + Str(s));
            } catch (const InvariantViolation& e) {
              t.Check(false, where + " " + e.what());
            }
            return true;
          });
          if (pm->degenerate()) continue;
          const bool truth = BruteForceEmb(InducedEmbInstance(pm)).has_value();
          for (LegacyTarget target : {LegacyTarget::kBm, LegacyTarget::kEmi,
                                      LegacyTarget::kCmb, LegacyTarget::kKcm}) {
            t.Check(DecideViaLegacy(LegacyReduce(pm, target),
                                    BruteForceMolSolver()) == truth,
                    where + " " + ToString(target));
          }
        }
      }
    }
  }
  for (int sample = 0; sample < 10000; ++sample) {
    const int n = UniformInt(rng, 1, 30);
    const ElementSet s =
        ElementSet::FromMask(rng() & ElementSet::Range(n).mask());
    const std::int64_t w = LegacyWeights(n).W(s);
    t.Check(w >= 0 && w <= 3 * std::int64_t{n} * n * n,
            "bound n=" + std::to_string(n) + " " + Str(s));
  }
  return t.Done("n <= 5 exhaustive over independent sets, 10^4 bound samples");
}

// Step checks for a chain against enumerated common bases.
bool ChainStepsValid(const KcmInstance& inst, const CostClassing& cl,
                     const PatternVector& p, const Rational& lambda,
                     const std::vector<ElementSet>& chain, ElementSet from,
                     ElementSet to) {
  const auto bases = testing::BruteCommonBases(inst, cl, p);
  if (bases.empty() || chain.empty()) return false;
  auto reduced = [&](ElementSet s) {
    return Rational(Weight(s, inst.cost)) - lambda * Weight(s, inst.size);
  };
  Rational best = reduced(bases[0]);
  for (ElementSet s : bases) best = std::min(best, reduced(s));
  if (chain.front() != from || chain.back() != to) return false;
  for (std::size_t j = 0; j < chain.size(); ++j) {
    if (std::find(bases.begin(), bases.end(), chain[j]) == bases.end()) {
      return false;
    }
    if (reduced(chain[j]) != best) return false;
    if (j == 0) continue;
    for (ElementSet cls : cl.classes) {
      if (((chain[j - 1] - chain[j]) & cls).size() > 1) return false;
      if (((chain[j] - chain[j - 1]) & cls).size() > 1) return false;
    }
    if ((chain[j] ^ to).size() >= (chain[j - 1] ^ to).size()) return false;
  }
  return true;
}

// 5. Approximation ratio of the knapsack-cover scheme.
Outcome KcmEptasRatio() {
  Rng rng(505);
  Tally t;
  long chains = 0;
  long steps = 0;
  double worst[2] = {1.0, 1.0};
  const Rational eps_values[2] = {MakeRational(1, 2), MakeRational(1, 3)};
  for (int trial = 0; trial < 100; ++trial) {
    const int n = UniformInt(rng, 4, 12);
    const KcmInstance inst = testing::RandomFeasibleKcm(n, 10, rng);
    const auto opt = BruteForceKcmb(inst);
    const std::string where = "instance " + std::to_string(trial);
    t.Check(opt.has_value(), where + " generator produced infeasible");
    if (!opt) continue;
    for (int e = 0; e < 2; ++e) {
      const Rational& eps = eps_values[e];
      EptasTrace trace;
      EptasOptions options;
      options.trace = &trace;
      std::optional<KcmSolution> got;
      try {
        got = KcmbEptas(inst, eps, options);
      } catch (const Error& err) {
        t.Check(false, where + " " + err.what());
        continue;
      }
      t.Check(got.has_value(), where + " no solution returned");
      if (!got) continue;
      const bool feasible = got->set.size() == Rank(*inst.matroid) &&
                            inst.matroid->IsIndependent(got->set) &&
                            Weight(got->set, inst.size) >= inst.demand;
      t.Check(feasible, where + " infeasible output");
      const bool within =
          Rational(got->cost) <= (1 + 5 * eps) * opt->cost;
      t.Check(within, where + " ratio above 1 + 5 eps");
      if (opt->cost > 0) {
        worst[e] = std::max(worst[e], static_cast<double>(got->cost) /
                                          static_cast<double>(opt->cost));
      }
      for (const PatternRecord& rec : trace.patterns) {
        if (!rec.skipped.empty() || !rec.lagrangian || !rec.lagrangian->s_low) {
          continue;
        }
        ++chains;
        steps += static_cast<long>(rec.chain.size());
        t.Check(ChainStepsValid(inst, trace.classing, rec.pattern,
                                rec.lagrangian->lambda_star, rec.chain,
                                *rec.lagrangian->s_low,
                                rec.lagrangian->s_high),
                where + " chain step invalid");
      }
    }
  }
  char summary[160];
  std::snprintf(summary, sizeof summary,
                "100 instances; worst ratio %.3f (eps 1/2), %.3f (eps 1/3); "
                "%ld chains, %ld steps verified",
                worst[0], worst[1], chains, steps);
  return t.Done(summary);
}

// 6. SAT decided through EMB instances agrees with truth tables.
Outcome SatViaEmb() {
  Rng rng(606);
  Tally t;
  int satisfiable = 0;
  const EmbDecider decider = [](const EmbInstance& inst) {
    return BruteForceEmb(inst).has_value();
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = UniformInt(rng, 1, 4);
    const SatInstance sat = testing::RandomSat(n, UniformInt(rng, 1, 6), rng);
    const bool truth = testing::TruthTableSatisfiable(sat);
    satisfiable += truth ? 1 : 0;
    t.Check(DecideSatViaEmb(sat, decider).satisfiable == truth,
            "instance " + std::to_string(trial));
  }
  return t.Done("200 instances, " + std::to_string(satisfiable) +
                " satisfiable");
}

// 7. Hard parameters for degree one.
Outcome HardParametersCheck() {
  Tally t;
  const HardParameters hp = ChooseHardParameters(1);
  const BigInt recount = CountTargetSets(hp.n, hp.k, hp.alpha);
  const BigInt bound = 24 * boost::multiprecision::pow(BigInt(hp.n), 5);
  t.Check(recount == hp.family_size, "family size recount differs");
  t.Check(recount > bound, "family not larger than 2 * 12 * n^5");
  std::ostringstream os;
  os << "n=" << hp.n << " k=" << hp.k << " alpha=" << hp.alpha
     << " |F|=" << recount << " > " << bound;
  return t.Done(os.str());
}

// 8. The path-graph image preserves EMI answers.
Outcome GwcpEquivalence() {
  Rng rng(808);
  Tally t;
  int yes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = UniformInt(rng, 2, 8);
    EmiInstance inst;
    inst.matroid = testing::RandomMatroid(n, rng);
    for (int i = 0; i < n; ++i) inst.weight.push_back(UniformInt(rng, 0, 6));
    inst.k = UniformInt(rng, 0, n);
    inst.target = UniformInt(rng, 0, 6 * inst.k + 1);
    const bool truth = BruteForceEmi(inst).has_value();
    yes += truth ? 1 : 0;
    t.Check(BruteForceGwcp(EmiToGwcp(inst)) == truth,
            "instance " + std::to_string(trial));
  }
  return t.Done("100 instances, " + std::to_string(yes) + " yes");
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace matkit

int main() {
  using matkit::Criterion;
  using matkit::Outcome;
  const std::vector<Criterion> criteria = {
      {1, "pi-matroid axioms", 60, matkit::AxiomSuite},
      {2, "adversary defeat", 60, matkit::AdversaryDefeat},
      {3, "reduction equivalence", 300, matkit::ReductionEquivalence},
      {4, "legacy weights", 600, matkit::LegacyWeightsCheck},
      {5, "kcm eptas ratio", 600, matkit::KcmEptasRatio},
      {6, "sat via emb", 600, matkit::SatViaEmb},
      {7, "hard parameters", 10, matkit::HardParametersCheck},
      {8, "gwcp equivalence", 600, matkit::GwcpEquivalence},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (seconds > c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += "; over the time limit";
    }
    std::printf("criterion %d %-22s %s (%.1f s, limit %.0f s) %s\n", c.id,
                c.name, outcome.pass ? "PASS" : "FAIL", seconds,
                c.limit_seconds, outcome.detail.c_str());
    std::fflush(stdout);
    failed += outcome.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
