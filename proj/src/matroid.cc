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

#include "matkit/matroid.h"

#include <algorithm>
#include <string>
#include <utility>

#include "matkit/errors.h"

namespace matkit {

UniformMatroid::UniformMatroid(int n, int k) : n_(n), k_(k) {
  ElementSet::CheckSize(n);
  if (k < 0) throw InvalidArgument("uniform matroid needs k >= 0");
}

PartitionMatroid::PartitionMatroid(int n, std::vector<ElementSet> blocks,
                                   std::vector<int> bounds)
    : n_(n), blocks_(std::move(blocks)), bounds_(std::move(bounds)) {
  ElementSet::CheckSize(n);
  if (blocks_.size() != bounds_.size()) {
    throw InvalidArgument("partition matroid: " +
                          std::to_string(blocks_.size()) + " blocks but " +
                          std::to_string(bounds_.size()) + " bounds");
  }
  ElementSet covered;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (bounds_[i] < 0) throw InvalidArgument("partition bound < 0");
    if (!(covered & blocks_[i]).empty()) {
      throw InvalidArgument("partition blocks overlap");
    }
    covered = covered | blocks_[i];
  }
  if (covered != ElementSet::Range(n)) {
    throw InvalidArgument("partition blocks do not cover the ground set");
  }
}

bool PartitionMatroid::IsIndependent(ElementSet s) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((s & blocks_[i]).size() > bounds_[i]) return false;
  }
  return true;
}

ExplicitMatroid::ExplicitMatroid(int n,
                                 std::span<const ElementSet> independent)
    : n_(n) {
  ElementSet::CheckSize(n);
  const ElementSet ground = ElementSet::Range(n);
  for (ElementSet s : independent) {
    if (!s.IsSubsetOf(ground)) {
      throw InvalidArgument("independent set " + s.ToString() +
                            " is not a subset of [" + std::to_string(n) + "]");
    }
    family_.insert(s.mask());
  }
  if (!family_.contains(0)) {
    throw InvalidArgument("explicit family must contain the empty set");
  }
  if (n <= kDenseLimit) {
    dense_.assign(std::size_t{1} << n, false);
    for (std::uint64_t m : family_) dense_[m] = true;
  }
}

std::vector<ElementSet> ExplicitMatroid::independent_sets() const {
  std::vector<std::uint64_t> masks(family_.begin(), family_.end());
  std::sort(masks.begin(), masks.end());
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(ElementSet::FromMask(m));
  return out;
}

TruncatedMatroid::TruncatedMatroid(MatroidPtr inner, int q)
    : inner_(std::move(inner)), q_(q) {
  if (!inner_) throw InvalidArgument("truncate: null matroid");
  if (q < 0) throw InvalidArgument("truncate: q < 0");
}

MatroidPtr Truncate(MatroidPtr m, int q) {
  return std::make_shared<TruncatedMatroid>(std::move(m), q);
}

std::vector<ElementSet> CountingOracle::QueriedSets() const {
  std::vector<ElementSet> sets;
  sets.reserve(transcript_.size());
  for (const Query& q : transcript_) sets.push_back(q.set);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

}  // namespace matkit
