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

#include "matkit/intersection.h"

#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "matkit/errors.h"

namespace matkit {

Rational Weight(ElementSet s, std::span<const Rational> weights) {
  Rational total = 0;
  s.ForEachElement([&](Element e) { total += weights[e - 1]; });
  return total;
}

namespace {

void CheckSameGround(const MatroidOracle& m1, const MatroidOracle& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw InvalidArgument("matroids have different ground sets (" +
                          std::to_string(m1.ground_size()) + " vs " +
                          std::to_string(m2.ground_size()) + ")");
  }
}

// Exchange graph of a common independent set Y.
//   y -> x  when Y - y + x is independent in m1,
//   x -> y  when Y - y + x is independent in m2,
// sources X1 = {x : Y + x in m1}, sinks X2 = {x : Y + x in m2}.
struct ExchangeGraph {
  std::vector<std::vector<Element>> out;  // indexed by element id
  std::vector<char> source;
  std::vector<char> sink;
};

ExchangeGraph BuildExchangeGraph(const MatroidOracle& m1,
                                 const MatroidOracle& m2, ElementSet y) {
  const int n = m1.ground_size();
  ExchangeGraph g;
  g.out.assign(n + 1, {});
  g.source.assign(n + 1, 0);
  g.sink.assign(n + 1, 0);
  const std::vector<Element> inside = y.ToVector();
  for (Element x = 1; x <= n; ++x) {
    if (y.Contains(x)) continue;
    const ElementSet with_x = y.With(x);
    g.source[x] = m1.IsIndependent(with_x) ? 1 : 0;
    g.sink[x] = m2.IsIndependent(with_x) ? 1 : 0;
    for (Element in : inside) {
      const ElementSet swapped = with_x.Without(in);
      if (m1.IsIndependent(swapped)) g.out[in].push_back(x);
      if (m2.IsIndependent(swapped)) g.out[x].push_back(in);
    }
  }
  return g;
}

ElementSet FlipPath(ElementSet y, Element end, const std::vector<Element>& pred) {
  for (Element v = end; v != 0; v = pred[v]) {
    if (y.Contains(v)) {
      y.Erase(v);
    } else {
      y.Insert(v);
    }
  }
  return y;
}

// Fewest-arc augmenting path; returns false when none exists.
bool AugmentShortest(const MatroidOracle& m1, const MatroidOracle& m2,
                     ElementSet& y) {
  const int n = m1.ground_size();
  const ExchangeGraph g = BuildExchangeGraph(m1, m2, y);
  std::vector<Element> pred(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  std::deque<Element> queue;
  for (Element x = 1; x <= n; ++x) {
    if (g.source[x]) {
      seen[x] = 1;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    const Element u = queue.front();
    queue.pop_front();
    if (!y.Contains(u) && g.sink[u]) {
      y = FlipPath(y, u, pred);
      return true;
    }
    for (Element v : g.out[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      pred[v] = u;
      queue.push_back(v);
    }
  }
  return false;
}

struct PathLength {
  Rational length;
  int arcs = 0;
  bool reached = false;
};

bool Shorter(const Rational& length, int arcs, const PathLength& than) {
  if (!than.reached) return true;
  if (length != than.length) return length < than.length;
  return arcs < than.arcs;
}

// Minimum-weight augmentation: vertex lengths w(x) outside Y and -w(y)
// inside Y, shortest by (length, arcs). Returns false when no path exists.
bool AugmentCheapest(const MatroidOracle& m1, const MatroidOracle& m2,
                     std::span<const Rational> weights, ElementSet& y) {
  const int n = m1.ground_size();
  const ExchangeGraph g = BuildExchangeGraph(m1, m2, y);
  auto vertex_length = [&](Element v) -> Rational {
    return y.Contains(v) ? Rational(-weights[v - 1]) : weights[v - 1];
  };
  std::vector<PathLength> dist(n + 1);
  std::vector<Element> pred(n + 1, 0);
  for (Element x = 1; x <= n; ++x) {
    if (g.source[x]) dist[x] = {vertex_length(x), 0, true};
  }
  // Without negative cycles, n rounds suffice.
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (Element u = 1; u <= n; ++u) {
      if (!dist[u].reached) continue;
      for (Element v : g.out[u]) {
        Rational cand = dist[u].length + vertex_length(v);
        const int arcs = dist[u].arcs + 1;
        if (Shorter(cand, arcs, dist[v])) {
          dist[v] = {std::move(cand), arcs, true};
          pred[v] = u;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  Element best = 0;
  for (Element x = 1; x <= n; ++x) {
    if (y.Contains(x) || !g.sink[x] || !dist[x].reached) continue;
    if (best == 0 || Shorter(dist[x].length, dist[x].arcs, dist[best])) {
      best = x;
    }
  }
  if (best == 0) return false;
  y = FlipPath(y, best, pred);
  return true;
}

}  // namespace

ElementSet MaxCommonIndependent(const MatroidOracle& m1,
                                const MatroidOracle& m2,
                                const IntersectionOptions& options) {
  CheckSameGround(m1, m2);
  const int n = m1.ground_size();
  if (n <= options.brute_force_threshold) {
    ElementSet best;
    ForEachSubset(n, [&](ElementSet s) {
      if (s.size() > best.size() && m1.IsIndependent(s) &&
          m2.IsIndependent(s)) {
        best = s;
      }
      return true;
    });
    return best;
  }
  ElementSet y;
  while (AugmentShortest(m1, m2, y)) {
  }
  return y;
}

std::optional<ElementSet> MinWeightCommonBasis(
    const MatroidOracle& m1, const MatroidOracle& m2,
    std::span<const Rational> weights, int b,
    const IntersectionOptions& options) {
  CheckSameGround(m1, m2);
  const int n = m1.ground_size();
  if (static_cast<int>(weights.size()) != n) {
    throw InvalidArgument("weight vector length does not match ground set");
  }
  if (b < 0 || b > n) return std::nullopt;
  if (n <= options.brute_force_threshold) {
    std::optional<ElementSet> best;
    Rational best_weight;
    ForEachKSubset(n, b, [&](ElementSet s) {
      if (!m1.IsIndependent(s) || !m2.IsIndependent(s)) return true;
      Rational w = Weight(s, weights);
      if (!best || w < best_weight) {
        best = s;
        best_weight = std::move(w);
      }
      return true;
    });
    return best;
  }
  ElementSet y;
  for (int step = 0; step < b; ++step) {
    if (!AugmentCheapest(m1, m2, weights, y)) return std::nullopt;
  }
  return y;
}

}  // namespace matkit
