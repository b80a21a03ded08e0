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


#ifndef MATKIT_MOL_H_
#define MATKIT_MOL_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matkit/element_set.h"
#include "matkit/emb.h"
#include "matkit/matroid.h"
#include "matkit/rational.h"

namespace matkit {

enum class Opt { kMax, kMin };
enum class Feas { kIndependent, kBases };
enum class Rel { kLe, kGe };

// One of the eight (opt, feasibility, relation) combinations. (min, IS, <=)
// is trivial: the empty set is always optimal.
struct MolParams {
  Opt opt = Opt::kMax;
  Feas feas = Feas::kIndependent;
  Rel rel = Rel::kLe;

  bool trivial() const {
    return opt == Opt::kMin && feas == Feas::kIndependent && rel == Rel::kLe;
  }
  friend bool operator==(const MolParams&, const MolParams&) = default;
};

// "(max,IS,<=)" style.
std::string ToString(const MolParams& p);
// Accepts "max,is,le", "min,bases,ge" and the like.
MolParams ParseMolParams(const std::string& text);

// The seven non-trivial combinations.
std::array<MolParams, 7> NonTrivialParams();

// opt v(S) subject to S feasible and w(S) rel L.
struct MolInstance {
  MatroidPtr matroid;
  std::vector<std::int64_t> v;
  std::vector<std::int64_t> w;
  std::int64_t bound = 0;  // L
};

// 0 for (max, *, <=) and (min, *, >=), 1 otherwise. Throws TrivialParams for
// (min, IS, <=).
int DOf(const MolParams& p);

struct ReducedMolInstance {
  MolInstance mol;
  MolParams params;
  std::int64_t h = 0;  // 2 * max(1, c(E))
  int k_rank = 0;
  int d = 0;
  Rational eps;  // 1 / (8 (|E|+1) (T+1) (c(E)+1))
  EmbInstance source;

  // k_rank * h + T: the value every optimum has on a yes-instance.
  std::int64_t target_value() const { return k_rank * h + source.target; }
};

// v = H + c, w = H + c (-1)^d, L = k H + T (-1)^d with k the greedy rank of
// the source matroid.
ReducedMolInstance ReduceEmbToMol(const EmbInstance& inst, const MolParams& p);

bool IsMolSolution(const MolInstance& mol, const MolParams& p, ElementSet s);

struct MolSolution {
  ElementSet set;
  std::int64_t value = 0;
};

// Exact optimum by enumeration; the first optimizer in (size, lex) order.
std::optional<MolSolution> BruteForceMol(const MolInstance& mol,
                                         const MolParams& p, int limit = 18);

// Returns a (1 + eps)-approximate solution, or nullopt only when the
// instance has no solution at all.
using MolSolver = std::function<std::optional<ElementSet>(
    const MolInstance&, const MolParams&, const Rational& eps)>;

// BruteForceMol as a solver; exact, hence (1 + eps)-approximate for all eps.
MolSolver BruteForceMolSolver(int limit = 18);

// Builds the reduction, calls `solver` with eps_I and answers yes iff the
// returned set has value exactly k H + T. A returned set that is not a
// solution throws ContractViolation.
bool DecideEmbViaMol(const EmbInstance& inst, const MolParams& p,
                     const MolSolver& solver);

struct ValueBoundReport {
  bool ok = true;
  int solutions = 0;
  bool bound_attained = false;
  std::string failure;  // empty when ok
};

// Enumerates every solution of the reduced instance and checks that
//   max side: v(S) <= k H + T,   min side: v(S) >= k H + T,
//   any solution with v(S) = k H + T is an EMB witness,
//   every EMB witness is a solution with v(S) = k H + T.
ValueBoundReport CertifyValueBounds(const ReducedMolInstance& r,
                                    int limit = 14);

}  // namespace matkit

#endif  // MATKIT_MOL_H_
