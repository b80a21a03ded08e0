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


#ifndef MATKIT_SAT_H_
#define MATKIT_SAT_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "matkit/element_set.h"
#include "matkit/emb.h"
#include "matkit/pi_matroid.h"

namespace matkit {

// CNF formula over variables 1..n_vars. Literal +i is v_i, -i its negation.
class SatInstance {
 public:
  // Throws InvalidArgument on an empty clause or a literal outside
  // [-n_vars, n_vars] \ {0}.
  SatInstance(int n_vars, std::vector<std::vector<int>> clauses);

  int n_vars() const { return n_vars_; }
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }

 private:
  int n_vars_;
  std::vector<std::vector<int>> clauses_;
};

// Does the assignment "i is true iff i in S" satisfy every clause?
bool SatSolutionCheck(const SatInstance& sat, ElementSet s);

// The solution sets of a formula, as a secret family.
class SatSolutions final : public SecretFamily {
 public:
  explicit SatSolutions(SatInstance sat) : sat_(std::move(sat)) {}
  bool Contains(ElementSet s) const override {
    return SatSolutionCheck(sat_, s);
  }
  const SatInstance& sat() const { return sat_; }

 private:
  SatInstance sat_;
};

// Encodes the Pi-matroid M_{n,k,alpha}(solutions of sat) with n = n_vars.
struct SatMatroidCode {
  SatInstance sat;
  int k = 1;
  std::int64_t alpha = 1;

  // Throws InvalidArgument unless k in [n] and alpha in [n^2].
  void Validate() const;
  std::shared_ptr<const PiMatroid> Decode() const;
};

// Membership in the decoded matroid in a single clause scan.
bool SatMatroidMembership(const SatMatroidCode& code, ElementSet s);

using EmbDecider = std::function<bool(const EmbInstance&)>;

struct SatViaEmbResult {
  bool satisfiable = false;
  bool empty_assignment = false;  // the all-false assignment satisfies
  // (k, alpha) pairs whose structured instance was a yes-instance.
  std::vector<std::pair<int, std::int64_t>> accepted;
};

// Satisfiability through EMB queries: test the empty assignment directly,
// then ask `decider` about the structured instance (code (sat, k, alpha),
// identity cost, T = alpha) for every k in [n] and alpha in [n^2]. When
// `stop_early` is false every pair is asked so the trace is complete.
SatViaEmbResult DecideSatViaEmb(const SatInstance& sat,
                                const EmbDecider& decider,
                                bool stop_early = false);

}  // namespace matkit

#endif  // MATKIT_SAT_H_
