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

#include "matkit/adversary.h"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <string>

#include "matkit/emb.h"
#include "matkit/errors.h"
#include "matkit/pi_matroid.h"

namespace matkit {

DeciderQuestion MakeQuestion(int n, int k, std::int64_t alpha) {
  DeciderQuestion q;
  q.n = n;
  q.k = k;
  q.alpha = alpha;
  q.cost.resize(n);
  for (int i = 0; i < n; ++i) q.cost[i] = i + 1;
  q.target = alpha;
  return q;
}

namespace {

DeciderRun Execute(const Decider& decider, const DeciderQuestion& question,
                   const MatroidOracle& matroid, std::uint64_t seed) {
  CountingOracle counting(matroid);
  DeciderRun run;
  run.verdict = decider(question, counting, seed);
  run.transcript = counting.transcript();
  return run;
}

std::vector<ElementSet> Distinct(const std::vector<CountingOracle::Query>& t) {
  std::vector<ElementSet> out;
  out.reserve(t.size());
  for (const auto& q : t) out.push_back(q.set);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

AdversaryReport AdversaryGame(const Decider& decider, int n, int k,
                              std::int64_t alpha, std::uint64_t seed) {
  const std::vector<ElementSet> family = EnumerateTargetSets(n, k, alpha);
  if (family.empty()) {
    throw EmptyTargetFamily("no " + std::to_string(k) + "-subset of [" +
                            std::to_string(n) + "] sums to " +
                            std::to_string(alpha));
  }
  const DeciderQuestion question = MakeQuestion(n, k, alpha);
  AdversaryReport report;
  report.seed = seed;
  report.family_size = family.size();

  const PiMatroid empty(n, k, alpha, std::make_shared<EmptyFamily>());
  report.empty_run = Execute(decider, question, empty, seed);
  report.queried = Distinct(report.empty_run.transcript);
  if (report.empty_run.verdict) {
    report.defeated = true;
    return report;
  }

  for (ElementSet s : family) {
    if (!std::binary_search(report.queried.begin(), report.queried.end(), s)) {
      report.hidden = s;
      break;
    }
  }
  if (!report.hidden) return report;

  const PiMatroid planted(n, k, alpha,
                          std::make_shared<SingletonFamily>(*report.hidden));
  report.hidden_run = Execute(decider, question, planted, seed);
  if (report.hidden_run->transcript != report.empty_run.transcript ||
      report.hidden_run->verdict) {
    throw InvariantViolation(
        "replay diverged: decider is not a pure function of question, "
        "answers and seed");
  }
  report.defeated = true;
  return report;
}

FrequentQueries EmpiricalFrequentQueries(const Decider& decider, int n, int k,
                                         std::int64_t alpha, int num_seeds,
                                         std::uint64_t first_seed) {
  if (num_seeds < 1) throw InvalidArgument("num_seeds must be >= 1");
  const std::vector<ElementSet> family = EnumerateTargetSets(n, k, alpha);
  const DeciderQuestion question = MakeQuestion(n, k, alpha);
  const PiMatroid empty(n, k, alpha, std::make_shared<EmptyFamily>());
  std::map<ElementSet, int> hits;
  double total_queries = 0;
  for (int i = 0; i < num_seeds; ++i) {
    const DeciderRun run = Execute(decider, question, empty, first_seed + i);
    total_queries += static_cast<double>(run.transcript.size());
    for (ElementSet s : Distinct(run.transcript)) ++hits[s];
  }
  FrequentQueries out;
  out.runs = num_seeds;
  out.mean_queries = total_queries / num_seeds;
  for (ElementSet s : family) {
    auto it = hits.find(s);
    if (it != hits.end() && 2 * it->second >= num_seeds) out.sets.push_back(s);
  }
  return out;
}

Decider BudgetDecider(int budget) {
  return [budget](const DeciderQuestion& q, const MatroidOracle& oracle,
                  std::uint64_t seed) {
    std::vector<ElementSet> family = EnumerateTargetSets(q.n, q.k, q.alpha);
    std::mt19937_64 rng(seed);
    std::shuffle(family.begin(), family.end(), rng);
    const int limit = std::min<int>(budget, static_cast<int>(family.size()));
    for (int i = 0; i < limit; ++i) {
      if (oracle.IsIndependent(family[i])) return true;
    }
    return false;
  };
}

Decider SilentDecider() {
  return [](const DeciderQuestion&, const MatroidOracle&, std::uint64_t) {
    return false;
  };
}

Decider RandomProbeDecider() {
  return [](const DeciderQuestion& q, const MatroidOracle& oracle,
            std::uint64_t seed) {
    const std::vector<ElementSet> family =
        EnumerateTargetSets(q.n, q.k, q.alpha);
    if (family.empty()) return false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
    return oracle.IsIndependent(family[pick(rng)]);
  };
}

namespace {

// Non-owning view so a borrowed oracle can sit in an EmbInstance.
class BorrowedOracle final : public MatroidOracle {
 public:
  explicit BorrowedOracle(const MatroidOracle& inner) : inner_(inner) {}
  int ground_size() const override { return inner_.ground_size(); }
  bool IsIndependent(ElementSet s) const override {
    return inner_.IsIndependent(s);
  }

 private:
  const MatroidOracle& inner_;
};

}  // namespace

Decider ExhaustiveDecider() {
  return [](const DeciderQuestion& q, const MatroidOracle& oracle,
            std::uint64_t) {
    EmbInstance inst;
    inst.matroid = std::make_shared<BorrowedOracle>(oracle);
    inst.cost = q.cost;
    inst.target = q.target;
    return BruteForceEmb(inst, kMaxElements).has_value();
  };
}

}  // namespace matkit
