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

#include "matkit/emb.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "matkit/errors.h"
#include "matkit/matroid_algorithms.h"

namespace matkit {

namespace {

void CheckValues(const MatroidPtr& matroid,
                 std::span<const std::int64_t> values, const char* what) {
  if (!matroid) throw InvalidArgument("instance has no matroid");
  if (static_cast<int>(values.size()) != matroid->ground_size()) {
    throw InvalidArgument(std::string(what) +
                          " vector length does not match ground set");
  }
  for (std::int64_t x : values) {
    if (x < 0) throw InvalidArgument(std::string(what) + " must be >= 0");
  }
}

std::int64_t Total(std::span<const std::int64_t> values) {
  return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

// First k-subset in lex order with weight T that the oracle accepts.
std::optional<ElementSet> FirstExactSet(const MatroidOracle& m,
                                        std::span<const std::int64_t> weights,
                                        int k, std::int64_t target) {
  std::optional<ElementSet> found;
  if (target < 0 || target > Total(weights)) return found;
  ForEachKSubset(m.ground_size(), k, [&](ElementSet s) {
    if (Weight(s, weights) == target && m.IsIndependent(s)) {
      found = s;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

void EmbInstance::Validate() const { CheckValues(matroid, cost, "cost"); }

void EmiInstance::Validate() const {
  CheckValues(matroid, weight, "weight");
  if (k < 0) throw InvalidArgument("cardinality must be >= 0");
}

std::optional<ElementSet> BruteForceEmb(const EmbInstance& inst, int limit) {
  inst.Validate();
  const int n = inst.ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  return FirstExactSet(*inst.matroid, inst.cost, Rank(*inst.matroid),
                       inst.target);
}

std::optional<ElementSet> BruteForceEmi(const EmiInstance& inst, int limit) {
  inst.Validate();
  const int n = inst.ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  if (inst.k > n) return std::nullopt;
  return FirstExactSet(*inst.matroid, inst.weight, inst.k, inst.target);
}

bool KSubsetSumDp(std::span<const std::int64_t> weights, int k,
                  std::int64_t target) {
  const int n = static_cast<int>(weights.size());
  if (k < 0 || k > n || target < 0) return false;
  for (std::int64_t x : weights) {
    if (x < 0) throw InvalidArgument("weights must be >= 0");
  }
  const std::size_t width = static_cast<std::size_t>(target) + 1;
  // reach[j * width + s]: some j-subset of the scanned prefix sums to s.
  std::vector<char> reach(static_cast<std::size_t>(k + 1) * width, 0);
  reach[0] = 1;
  for (std::int64_t x : weights) {
    if (x > target) continue;
    for (int j = k; j >= 1; --j) {
      char* row = &reach[j * width];
      const char* prev = &reach[(j - 1) * width];
      for (std::int64_t s = target; s >= x; --s) {
        if (prev[s - x]) row[s] = 1;
      }
    }
  }
  return reach[k * width + target] != 0;
}

GwcpInstance EmiToGwcp(const EmiInstance& inst) {
  inst.Validate();
  const int n = inst.ground_size();
  if (n < 2) {
    throw GroundSetTooSmall("path reduction needs at least two elements, got " +
                            std::to_string(n));
  }
  GwcpInstance out;
  for (Element e = 1; e < n; ++e) out.edges.emplace_back(e, e + 1);
  out.sources = {1};
  out.sinks = {n};
  out.matroid = inst.matroid;
  out.weight = inst.weight;
  out.paths = 1;
  out.k = inst.k;
  out.target = inst.target;
  return out;
}

namespace {

// Vertex sets of all simple A-B paths in a graph whose maximum degree is at
// most two and which contains no cycle.
std::vector<ElementSet> PathVertexSets(const GwcpInstance& inst, int n) {
  std::vector<std::vector<Element>> adj(n + 1);
  for (auto [u, v] : inst.edges) {
    if (u < 1 || u > n || v < 1 || v > n || u == v) {
      throw UnsupportedTopology("edge (" + std::to_string(u) + "," +
                                std::to_string(v) + ") is not simple");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (Element v = 1; v <= n; ++v) {
    std::sort(adj[v].begin(), adj[v].end());
    if (std::adjacent_find(adj[v].begin(), adj[v].end()) != adj[v].end() ||
        adj[v].size() > 2) {
      throw UnsupportedTopology("graph is not a simple path");
    }
  }
  if (static_cast<int>(inst.edges.size()) != n - 1) {
    throw UnsupportedTopology("graph is not a single path");
  }
  std::vector<ElementSet> out;
  for (Element a : inst.sources.ToVector()) {
    // Walk both directions from a; a path graph has no branching.
    for (Element first : adj[a]) {
      ElementSet seen{a};
      Element prev = a;
      Element cur = first;
      while (true) {
        seen.Insert(cur);
        if (inst.sinks.Contains(cur)) out.push_back(seen);
        Element next = 0;
        for (Element v : adj[cur]) {
          if (v != prev) next = v;
        }
        if (next == 0) break;
        prev = cur;
        cur = next;
      }
    }
    if (inst.sinks.Contains(a)) out.push_back(ElementSet{a});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool BruteForceGwcp(const GwcpInstance& inst, int limit) {
  if (!inst.matroid) throw InvalidArgument("instance has no matroid");
  const int n = inst.matroid->ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  if (inst.paths != 1) {
    throw UnsupportedTopology("only a single path (p = 1) is supported");
  }
  CheckValues(inst.matroid, inst.weight, "weight");
  for (ElementSet path : PathVertexSets(inst, n)) {
    const std::vector<Element> vertices = path.ToVector();
    const int len = static_cast<int>(vertices.size());
    bool found = false;
    ForEachKSubset(len, inst.k, [&](ElementSet pick) {
      ElementSet x;
      for (Element i : pick.ToVector()) x.Insert(vertices[i - 1]);
      if (Weight(x, inst.weight) == inst.target &&
          inst.matroid->IsIndependent(x)) {
        found = true;
        return false;
      }
      return true;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace matkit
