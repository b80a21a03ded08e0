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

#ifndef MATKIT_MATROID_ALGORITHMS_H_
#define MATKIT_MATROID_ALGORITHMS_H_

#include <cstdint>
#include <optional>
#include <span>

#include "matkit/element_set.h"
#include "matkit/matroid.h"

namespace matkit {

// Greedy growth in ascending id order. Valid only when `m` is a matroid;
// issues exactly |E| queries.
int Rank(const MatroidOracle& m);

// A maximal independent set grown greedily in id order.
ElementSet GreedyBasis(const MatroidOracle& m);

enum class Direction { kMin, kMax };

// A basis of minimum (or maximum) total weight. weights[e - 1] is the weight
// of element e. Ties are broken by ascending element id.
ElementSet GreedyExtremeBasis(const MatroidOracle& m,
                              std::span<const std::int64_t> weights,
                              Direction direction);

std::int64_t Weight(ElementSet s, std::span<const std::int64_t> weights);

struct AxiomReport {
  enum class Failure { kNone, kEmptySetDependent, kHereditary, kExchange };

  Failure failure = Failure::kNone;
  // kHereditary: `a` independent, `b` a dependent subset of `a`.
  // kExchange: `a`, `b` independent with |a| > |b| and no e in a \ b with
  // b + e independent.
  ElementSet a;
  ElementSet b;

  bool ok() const { return failure == Failure::kNone; }
};

const char* ToString(AxiomReport::Failure failure);

// Exhaustive scan over 2^E. Hereditary is checked over all (A, B ⊂ A) pairs;
// exchange over independent pairs with |A| = |B| + 1, which is equivalent to
// the general exchange axiom once the family is hereditary. Throws
// GroundSetTooLarge when |E| > limit.
AxiomReport VerifyMatroidAxioms(const MatroidOracle& m, int limit = 16);

// Maximum independent-set size by exhaustive enumeration. Unlike Rank this
// does not assume the axioms.
int BruteForceRank(const MatroidOracle& m, int limit = 20);

}  // namespace matkit

#endif  // MATKIT_MATROID_ALGORITHMS_H_
