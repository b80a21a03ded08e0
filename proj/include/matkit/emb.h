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


#ifndef MATKIT_EMB_H_
#define MATKIT_EMB_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "matkit/element_set.h"
#include "matkit/matroid.h"

namespace matkit {

// Exact Matroid Basis: is there a basis S with c(S) = T?
struct EmbInstance {
  MatroidPtr matroid;
  std::vector<std::int64_t> cost;  // cost[e - 1] >= 0
  std::int64_t target = 0;

  int ground_size() const { return matroid->ground_size(); }
  // Throws InvalidArgument on a missing matroid, wrong cost length or
  // negative values.
  void Validate() const;
};

// Exact Matroid Independent set: is there S in I with |S| = k, w(S) = T?
struct EmiInstance {
  MatroidPtr matroid;
  std::vector<std::int64_t> weight;
  int k = 0;
  std::int64_t target = 0;

  int ground_size() const { return matroid->ground_size(); }
  void Validate() const;
};

// Lexicographically first basis of cost exactly T. Only sets of the right
// cardinality and cost are sent to the oracle, after a greedy rank pass.
std::optional<ElementSet> BruteForceEmb(const EmbInstance& inst,
                                        int limit = 20);

std::optional<ElementSet> BruteForceEmi(const EmiInstance& inst,
                                        int limit = 20);

// Is there a k-subset of `weights` summing to T? O(n * k * T) table.
bool KSubsetSumDp(std::span<const std::int64_t> weights, int k,
                  std::int64_t target);

// Generalized weighted cardinality path instance. Vertices are the elements
// 1..n of the matroid's ground set.
struct GwcpInstance {
  std::vector<std::pair<Element, Element>> edges;
  ElementSet sources;  // A
  ElementSet sinks;    // B
  MatroidPtr matroid;
  std::vector<std::int64_t> weight;
  int paths = 1;  // p
  int k = 0;
  std::int64_t target = 0;
};

// The path e1 - e2 - ... - en with A = {e1}, B = {en}, p = 1. Throws
// GroundSetTooSmall for fewer than two elements.
GwcpInstance EmiToGwcp(const EmiInstance& inst);

// Decides whether some A-B path P admits X within V(P) with X independent,
// |X| = k and w(X) = T. Only simple path graphs with p = 1 are supported;
// anything else throws UnsupportedTopology.
bool BruteForceGwcp(const GwcpInstance& inst, int limit = 20);

}  // namespace matkit

#endif  // MATKIT_EMB_H_
