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

#ifndef MATKIT_MATROID_H_
#define MATKIT_MATROID_H_

#include <cstddef>
#include <memory>
#include <span>
#include <unordered_set>
#include <vector>

#include "matkit/element_set.h"

namespace matkit {

// Membership oracle over the ground set [n]. This is the only access path to
// independence; algorithms never look behind it.
//
// Implementations are immutable after construction, so a const oracle may be
// shared read-only between threads (CountingOracle is the exception).
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual int ground_size() const = 0;
  // `s` must be a subset of [ground_size()].
  virtual bool IsIndependent(ElementSet s) const = 0;

  ElementSet ground_set() const { return ElementSet::Range(ground_size()); }
};

using MatroidPtr = std::shared_ptr<const MatroidOracle>;

// S is independent iff |S| <= k.
class UniformMatroid final : public MatroidOracle {
 public:
  UniformMatroid(int n, int k);

  int ground_size() const override { return n_; }
  bool IsIndependent(ElementSet s) const override { return s.size() <= k_; }
  int k() const { return k_; }

 private:
  int n_;
  int k_;
};

// S is independent iff |S ∩ blocks[i]| <= bounds[i] for every block. Blocks
// must be pairwise disjoint and cover [n].
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(int n, std::vector<ElementSet> blocks,
                   std::vector<int> bounds);

  int ground_size() const override { return n_; }
  bool IsIndependent(ElementSet s) const override;

  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<int>& bounds() const { return bounds_; }

 private:
  int n_;
  std::vector<ElementSet> blocks_;
  std::vector<int> bounds_;
};

// An arbitrary set system given by listing its independent sets. Only
// membership of the empty set is validated; the axioms are deliberately not
// checked so that broken families can be fed to VerifyMatroidAxioms.
class ExplicitMatroid final : public MatroidOracle {
 public:
  ExplicitMatroid(int n, std::span<const ElementSet> independent);

  int ground_size() const override { return n_; }
  bool IsIndependent(ElementSet s) const override {
    if (!dense_.empty()) return dense_[s.mask()];
    return family_.contains(s.mask());
  }
  // Listed sets in increasing mask order.
  std::vector<ElementSet> independent_sets() const;

 private:
  // Ground sets up to this size use a bitmap indexed by mask.
  static constexpr int kDenseLimit = 20;

  int n_;
  std::unordered_set<std::uint64_t> family_;
  std::vector<bool> dense_;
};

// Truncation to cardinality at most q.
class TruncatedMatroid final : public MatroidOracle {
 public:
  TruncatedMatroid(MatroidPtr inner, int q);

  int ground_size() const override { return inner_->ground_size(); }
  bool IsIndependent(ElementSet s) const override {
    return s.size() <= q_ && inner_->IsIndependent(s);
  }
  const MatroidOracle& inner() const { return *inner_; }
  int q() const { return q_; }

 private:
  MatroidPtr inner_;
  int q_;
};

MatroidPtr Truncate(MatroidPtr m, int q);

// Records every query forwarded to `inner` together with the answer.
// Single-writer: concurrent experiments must each own their CountingOracle.
class CountingOracle final : public MatroidOracle {
 public:
  struct Query {
    ElementSet set;
    bool answer;
    friend bool operator==(const Query&, const Query&) = default;
  };

  explicit CountingOracle(const MatroidOracle& inner) : inner_(&inner) {}

  int ground_size() const override { return inner_->ground_size(); }
  bool IsIndependent(ElementSet s) const override {
    bool answer = inner_->IsIndependent(s);
    transcript_.push_back({s, answer});
    return answer;
  }

  std::size_t query_count() const { return transcript_.size(); }
  const std::vector<Query>& transcript() const { return transcript_; }
  // Distinct queried sets in increasing mask order.
  std::vector<ElementSet> QueriedSets() const;
  void Reset() { transcript_.clear(); }

 private:
  const MatroidOracle* inner_;
  mutable std::vector<Query> transcript_;
};

}  // namespace matkit

#endif  // MATKIT_MATROID_H_
