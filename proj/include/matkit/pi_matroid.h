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


#ifndef MATKIT_PI_MATROID_H_
#define MATKIT_PI_MATROID_H_

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matkit/element_set.h"
#include "matkit/emb.h"
#include "matkit/matroid.h"
#include "matkit/rational.h"

namespace matkit {

// An opaque family of subsets of [n]. Contains() must be a pure function of
// its argument.
class SecretFamily {
 public:
  virtual ~SecretFamily() = default;
  virtual bool Contains(ElementSet s) const = 0;
};

using SecretPtr = std::shared_ptr<const SecretFamily>;

class ExplicitFamily final : public SecretFamily {
 public:
  explicit ExplicitFamily(std::span<const ElementSet> sets);
  bool Contains(ElementSet s) const override {
    return sets_.contains(s.mask());
  }

 private:
  std::unordered_set<std::uint64_t> sets_;
};

// Independent sets of a graph on [n]: S is a member iff no edge lies
// inside S.
class GraphIndependentSets final : public SecretFamily {
 public:
  GraphIndependentSets(int n, std::span<const std::pair<Element, Element>> edges);
  bool Contains(ElementSet s) const override;

 private:
  std::vector<ElementSet> edges_;
};

class EmptyFamily final : public SecretFamily {
 public:
  bool Contains(ElementSet) const override { return false; }
};

class SingletonFamily final : public SecretFamily {
 public:
  explicit SingletonFamily(ElementSet member) : member_(member) {}
  bool Contains(ElementSet s) const override { return s == member_; }
  ElementSet member() const { return member_; }

 private:
  ElementSet member_;
};

// Wraps another family and counts Contains() calls. Not thread-safe.
class CountingFamily final : public SecretFamily {
 public:
  explicit CountingFamily(SecretPtr inner) : inner_(std::move(inner)) {}
  bool Contains(ElementSet s) const override {
    ++count_;
    return inner_->Contains(s);
  }
  std::int64_t count() const { return count_; }

 private:
  SecretPtr inner_;
  mutable std::int64_t count_ = 0;
};

std::int64_t SumOf(ElementSet s);

// The Pi-matroid on [n]: S is independent iff
//   |S| < k, or
//   |S| = k and sum(S) != alpha, or
//   |S| = k and sum(S) == alpha and S is in the secret family.
// The secret is consulted only in the last case.
class PiMatroid final : public MatroidOracle {
 public:
  // Requires 1 <= k <= n <= 64 and alpha >= 1.
  PiMatroid(int n, int k, std::int64_t alpha, SecretPtr secret);

  int ground_size() const override { return n_; }
  bool IsIndependent(ElementSet s) const override;

  int k() const { return k_; }
  std::int64_t alpha() const { return alpha_; }
  const SecretFamily& secret() const { return *secret_; }
  const SecretPtr& secret_ptr() const { return secret_; }

  // True when no k-set is independent, so the rank drops below k. This
  // happens only for k = n, alpha = n(n+1)/2 and [n] outside the secret.
  // Induced EMB instances are then vacuously "no" even if the reading via
  // the secret family would differ.
  bool degenerate() const { return degenerate_; }

 private:
  int n_;
  int k_;
  std::int64_t alpha_;
  SecretPtr secret_;
  bool degenerate_;
};

// All k-subsets of [n] with sum alpha, in lexicographic order.
std::vector<ElementSet> EnumerateTargetSets(int n, int k, std::int64_t alpha);

// counts[a] = number of k-subsets of [n] with sum a, for a in
// [0, n(n+1)/2]. Exact for any n.
std::vector<BigInt> CountTargetSetsBySum(int n, int k);
BigInt CountTargetSets(int n, int k, std::int64_t alpha);

// The smallest alpha maximizing the number of k-subsets of [n] with sum
// alpha.
std::int64_t ArgmaxAlpha(int n, int k);

struct HardParameters {
  int n = 0;
  int k = 0;
  std::int64_t alpha = 0;
  BigInt family_size;    // |F| for (n, k, alpha)
  BigInt query_bound;    // 2 * (12 n^5)^d
};

// Smallest n with 2 n^3 (12 n^5)^d < 2^n - 1, then k = floor(n/2) and the
// alpha with the largest target family. Throws InvariantViolation if either
// C(n,k) * n >= 2^n - 1 or |F| > 2 (12 n^5)^d fails.
HardParameters ChooseHardParameters(int d);

// ([n], pm, identity cost, T = alpha).
EmbInstance InducedEmbInstance(std::shared_ptr<const PiMatroid> pm);

// Every dependent set has at least rank(m) elements. Exhaustive; throws
// GroundSetTooLarge when |E| > limit.
bool IsPaving(const MatroidOracle& m, int limit = 16);

}  // namespace matkit

#endif  // MATKIT_PI_MATROID_H_
