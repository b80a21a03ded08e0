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

#include "matkit/pi_matroid.h"

#include <algorithm>
#include <string>

#include "matkit/errors.h"
#include "matkit/matroid_algorithms.h"

namespace matkit {

ExplicitFamily::ExplicitFamily(std::span<const ElementSet> sets) {
  for (ElementSet s : sets) sets_.insert(s.mask());
}

GraphIndependentSets::GraphIndependentSets(
    int n, std::span<const std::pair<Element, Element>> edges) {
  ElementSet::CheckSize(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n || u == v) {
      throw InvalidArgument("bad edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") for n = " +
                            std::to_string(n));
    }
    edges_.push_back(ElementSet{u, v});
  }
}

bool GraphIndependentSets::Contains(ElementSet s) const {
  for (ElementSet e : edges_) {
    if (e.IsSubsetOf(s)) return false;
  }
  return true;
}

std::int64_t SumOf(ElementSet s) {
  std::int64_t total = 0;
  s.ForEachElement([&](Element e) { total += e; });
  return total;
}

PiMatroid::PiMatroid(int n, int k, std::int64_t alpha, SecretPtr secret)
    : n_(n), k_(k), alpha_(alpha), secret_(std::move(secret)) {
  ElementSet::CheckSize(n);
  if (n < 1 || k < 1 || k > n) {
    throw InvalidArgument("need 1 <= k <= n, got n = " + std::to_string(n) +
                          ", k = " + std::to_string(k));
  }
  if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
  if (!secret_) throw InvalidArgument("missing secret family");
  const std::int64_t full = std::int64_t{n} * (n + 1) / 2;
  degenerate_ =
      k == n && alpha == full && !secret_->Contains(ElementSet::Range(n));
}

bool PiMatroid::IsIndependent(ElementSet s) const {
  const int size = s.size();
  if (size < k_) return true;
  if (size > k_) return false;
  if (SumOf(s) != alpha_) return true;
  return secret_->Contains(s);
}

namespace {

void EnumerateFrom(int n, int k, std::int64_t remaining, Element next,
                   ElementSet current, std::vector<ElementSet>& out) {
  if (k == 0) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (Element e = next; e <= n - k + 1; ++e) {
    // Smallest and largest sums of k elements drawn from [e, n].
    const std::int64_t lo = std::int64_t{k} * e + std::int64_t{k} * (k - 1) / 2;
    const std::int64_t hi = std::int64_t{k} * n - std::int64_t{k} * (k - 1) / 2;
    if (remaining < lo) break;
    if (remaining > hi) continue;
    EnumerateFrom(n, k - 1, remaining - e, e + 1, current.With(e), out);
  }
}

}  // namespace

std::vector<ElementSet> EnumerateTargetSets(int n, int k, std::int64_t alpha) {
  ElementSet::CheckSize(n);
  std::vector<ElementSet> out;
  if (k < 0 || k > n) return out;
  EnumerateFrom(n, k, alpha, 1, ElementSet(), out);
  return out;
}

std::vector<BigInt> CountTargetSetsBySum(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidArgument("need 0 <= k <= n");
  }
  const std::size_t max_sum = static_cast<std::size_t>(n) * (n + 1) / 2;
  // ways[j][s]: j-subsets of the scanned prefix with sum s.
  std::vector<std::vector<BigInt>> ways(k + 1,
                                        std::vector<BigInt>(max_sum + 1));
  ways[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      for (std::size_t s = max_sum; s >= static_cast<std::size_t>(i); --s) {
        if (!ways[j - 1][s - i].is_zero()) ways[j][s] += ways[j - 1][s - i];
      }
    }
  }
  return std::move(ways[k]);
}

BigInt CountTargetSets(int n, int k, std::int64_t alpha) {
  const std::vector<BigInt> counts = CountTargetSetsBySum(n, k);
  if (alpha < 0 || alpha >= static_cast<std::int64_t>(counts.size())) return 0;
  return counts[alpha];
}

std::int64_t ArgmaxAlpha(int n, int k) {
  const std::vector<BigInt> counts = CountTargetSetsBySum(n, k);
  std::int64_t best = 0;
  for (std::size_t a = 1; a < counts.size(); ++a) {
    if (counts[a] > counts[best]) best = static_cast<std::int64_t>(a);
  }
  return best;
}

HardParameters ChooseHardParameters(int d) {
  if (d < 1) throw InvalidArgument("d must be >= 1");
  auto bound = [d](int n) -> BigInt {
    BigInt per = BigInt(12) * boost::multiprecision::pow(BigInt(n), 5);
    return boost::multiprecision::pow(per, d);
  };
  HardParameters out;
  int n = 1;
  BigInt all_nonempty;
  while (true) {
    all_nonempty = (BigInt(1) << n) - 1;
    if (2 * boost::multiprecision::pow(BigInt(n), 3) * bound(n) <
        all_nonempty) {
      break;
    }
    ++n;
  }
  out.n = n;
  out.k = n / 2;
  BigInt binom = 1;
  for (int i = 0; i < out.k; ++i) binom = binom * (n - i) / (i + 1);
  if (binom * n < all_nonempty) {
    throw InvariantViolation("C(n, floor(n/2)) * n < 2^n - 1 for n = " +
                             std::to_string(n));
  }
  const std::vector<BigInt> counts = CountTargetSetsBySum(n, out.k);
  std::size_t best = 0;
  for (std::size_t a = 1; a < counts.size(); ++a) {
    if (counts[a] > counts[best]) best = a;
  }
  out.alpha = static_cast<std::int64_t>(best);
  out.family_size = counts[best];
  out.query_bound = 2 * bound(n);
  if (out.family_size <= out.query_bound) {
    throw InvariantViolation("largest target family does not exceed the bound");
  }
  return out;
}

EmbInstance InducedEmbInstance(std::shared_ptr<const PiMatroid> pm) {
  EmbInstance inst;
  const int n = pm->ground_size();
  inst.cost.resize(n);
  for (int i = 0; i < n; ++i) inst.cost[i] = i + 1;
  inst.target = pm->alpha();
  inst.matroid = std::move(pm);
  return inst;
}

bool IsPaving(const MatroidOracle& m, int limit) {
  const int n = m.ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  const int rank = BruteForceRank(m, limit);
  bool paving = true;
  ForEachSubset(n, [&](ElementSet s) {
    if (s.size() < rank && !m.IsIndependent(s)) paving = false;
    return paving;
  });
  return paving;
}

}  // namespace matkit
