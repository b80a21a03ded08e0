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

#include "matkit/sat.h"

#include <cstdlib>
#include <string>

#include "matkit/errors.h"

namespace matkit {

SatInstance::SatInstance(int n_vars, std::vector<std::vector<int>> clauses)
    : n_vars_(n_vars), clauses_(std::move(clauses)) {
  ElementSet::CheckSize(n_vars);
  for (const auto& clause : clauses_) {
    if (clause.empty()) throw InvalidArgument("empty clause");
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > n_vars) {
        throw InvalidArgument("literal " + std::to_string(lit) +
                              " outside variable range 1.." +
                              std::to_string(n_vars));
      }
    }
  }
}

bool SatSolutionCheck(const SatInstance& sat, ElementSet s) {
  for (const auto& clause : sat.clauses()) {
    bool satisfied = false;
    for (int lit : clause) {
      if ((lit > 0) == s.Contains(std::abs(lit))) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

void SatMatroidCode::Validate() const {
  const int n = sat.n_vars();
  if (k < 1 || k > n) {
    throw InvalidArgument("k = " + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  if (alpha < 1 || alpha > std::int64_t{n} * n) {
    throw InvalidArgument("alpha = " + std::to_string(alpha) +
                          " outside [1, n^2]");
  }
}

std::shared_ptr<const PiMatroid> SatMatroidCode::Decode() const {
  Validate();
  return std::make_shared<PiMatroid>(sat.n_vars(), k, alpha,
                                     std::make_shared<SatSolutions>(sat));
}

bool SatMatroidMembership(const SatMatroidCode& code, ElementSet s) {
  const int size = s.size();
  if (size < code.k) return true;
  if (size > code.k) return false;
  if (SumOf(s) != code.alpha) return true;
  return SatSolutionCheck(code.sat, s);
}

SatViaEmbResult DecideSatViaEmb(const SatInstance& sat,
                                const EmbDecider& decider, bool stop_early) {
  SatViaEmbResult result;
  if (SatSolutionCheck(sat, ElementSet())) {
    result.satisfiable = true;
    result.empty_assignment = true;
    if (stop_early) return result;
  }
  const int n = sat.n_vars();
  for (int k = 1; k <= n; ++k) {
    for (std::int64_t alpha = 1; alpha <= std::int64_t{n} * n; ++alpha) {
      SatMatroidCode code{sat, k, alpha};
      if (decider(InducedEmbInstance(code.Decode()))) {
        result.satisfiable = true;
        result.accepted.emplace_back(k, alpha);
        if (stop_early) return result;
      }
    }
  }
  return result;
}

}  // namespace matkit
