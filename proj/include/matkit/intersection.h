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

#ifndef MATKIT_INTERSECTION_H_
#define MATKIT_INTERSECTION_H_

#include <optional>
#include <span>

#include "matkit/element_set.h"
#include "matkit/matroid.h"
#include "matkit/rational.h"

namespace matkit {

struct IntersectionOptions {
  // Ground sets of at most this many elements are solved by enumeration
  // instead of augmenting paths. Zero forces the augmenting-path route.
  int brute_force_threshold = 6;
};

// A maximum-cardinality set independent in both matroids, found by repeated
// shortest augmenting paths in the exchange graph. Both oracles must be
// matroids on the same ground set.
ElementSet MaxCommonIndependent(const MatroidOracle& m1,
                                const MatroidOracle& m2,
                                const IntersectionOptions& options = {});

// A minimum-weight common independent set of cardinality exactly `b`, or
// nullopt when the largest common independent set is smaller than `b`.
// weights[e - 1] may be negative.
//
// The augmenting-path route grows one element at a time along a shortest
// path (by total vertex weight, then by arc count) computed with
// Bellman-Ford; every intermediate set is extreme for its cardinality.
std::optional<ElementSet> MinWeightCommonBasis(
    const MatroidOracle& m1, const MatroidOracle& m2,
    std::span<const Rational> weights, int b,
    const IntersectionOptions& options = {});

Rational Weight(ElementSet s, std::span<const Rational> weights);

}  // namespace matkit

#endif  // MATKIT_INTERSECTION_H_
