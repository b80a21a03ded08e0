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


#ifndef MATKIT_ADVERSARY_H_
#define MATKIT_ADVERSARY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "matkit/element_set.h"
#include "matkit/matroid.h"

namespace matkit {

// What a decider is told about the instance besides the oracle: the
// induced EMB instance ([n], identity cost, T = alpha) of a Pi-matroid with
// parameters (n, k, alpha).
struct DeciderQuestion {
  int n = 0;
  int k = 0;
  std::int64_t alpha = 0;
  std::vector<std::int64_t> cost;
  std::int64_t target = 0;
};

DeciderQuestion MakeQuestion(int n, int k, std::int64_t alpha);

// Returns the verdict "yes" (true) or "no". Must be a pure function of the
// question, the oracle answers and the seed so that runs can be replayed.
using Decider = std::function<bool(const DeciderQuestion&,
                                   const MatroidOracle&, std::uint64_t seed)>;

struct DeciderRun {
  std::vector<CountingOracle::Query> transcript;
  bool verdict = false;
};

struct AdversaryReport {
  std::uint64_t seed = 0;
  std::size_t family_size = 0;  // |F_{n,k,alpha}|
  // Distinct sets queried during the first run, increasing mask order.
  std::vector<ElementSet> queried;
  std::optional<ElementSet> hidden;
  bool defeated = false;
  DeciderRun empty_run;                  // secret family empty
  std::optional<DeciderRun> hidden_run;  // secret family {hidden}
};

// Runs `decider` against the empty-secret Pi-matroid. A "yes" there is
// wrong outright. Otherwise the lexicographically first member S of
// F_{n,k,alpha} that was never queried is hidden as the only secret set and
// the decider is replayed with the same seed; identical transcripts mean
// the "no" is wrong on the second instance. If every member of F was
// queried the decider is not defeated.
//
// Throws EmptyTargetFamily when F is empty and InvariantViolation when the
// replay diverges (the decider is not a pure function of its inputs).
AdversaryReport AdversaryGame(const Decider& decider, int n, int k,
                              std::int64_t alpha, std::uint64_t seed);

struct FrequentQueries {
  std::vector<ElementSet> sets;  // members of F queried in >= half the runs
  double mean_queries = 0;
  int runs = 0;
};

// Seeds first_seed, first_seed + 1, ... against the empty-secret instance.
FrequentQueries EmpiricalFrequentQueries(const Decider& decider, int n, int k,
                                         std::int64_t alpha, int num_seeds,
                                         std::uint64_t first_seed = 0);

// Sample deciders.

// Queries up to `budget` members of F in a seed-dependent random order and
// answers yes iff one of them is independent.
Decider BudgetDecider(int budget);

// Answers no without querying.
Decider SilentDecider();

// Queries one uniformly random member of F, yes iff it is independent.
Decider RandomProbeDecider();

// Brute-force EMB on the oracle. Queries every set of F (after a rank
// pass), so it always decides correctly.
Decider ExhaustiveDecider();

}  // namespace matkit

#endif  // MATKIT_ADVERSARY_H_
