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

#include "matkit/matroid_algorithms.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "matkit/errors.h"

namespace matkit {

ElementSet GreedyBasis(const MatroidOracle& m) {
  ElementSet basis;
  for (Element e = 1; e <= m.ground_size(); ++e) {
    if (m.IsIndependent(basis.With(e))) basis.Insert(e);
  }
  return basis;
}

int Rank(const MatroidOracle& m) { return GreedyBasis(m).size(); }

std::int64_t Weight(ElementSet s, std::span<const std::int64_t> weights) {
  std::int64_t total = 0;
  s.ForEachElement([&](Element e) { total += weights[e - 1]; });
  return total;
}

ElementSet GreedyExtremeBasis(const MatroidOracle& m,
                              std::span<const std::int64_t> weights,
                              Direction direction) {
  const int n = m.ground_size();
  if (static_cast<int>(weights.size()) != n) {
    throw InvalidArgument("weight vector length does not match ground set");
  }
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return direction == Direction::kMin ? weights[a - 1] < weights[b - 1]
                                        : weights[a - 1] > weights[b - 1];
  });
  ElementSet basis;
  for (Element e : order) {
    if (m.IsIndependent(basis.With(e))) basis.Insert(e);
  }
  return basis;
}

const char* ToString(AxiomReport::Failure failure) {
  switch (failure) {
    case AxiomReport::Failure::kNone:
      return "none";
    case AxiomReport::Failure::kEmptySetDependent:
      return "empty-set-dependent";
    case AxiomReport::Failure::kHereditary:
      return "hereditary";
    case AxiomReport::Failure::kExchange:
      return "exchange";
  }
  return "unknown";
}

namespace {

std::vector<char> IndependenceTable(const MatroidOracle& m) {
  const int n = m.ground_size();
  std::vector<char> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = m.IsIndependent(ElementSet::FromMask(mask)) ? 1 : 0;
  }
  return table;
}

}  // namespace

AxiomReport VerifyMatroidAxioms(const MatroidOracle& m, int limit) {
  const int n = m.ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  const std::vector<char> indep = IndependenceTable(m);
  AxiomReport report;
  if (!indep[0]) {
    report.failure = AxiomReport::Failure::kEmptySetDependent;
    return report;
  }
  for (std::uint64_t a = 0; a < indep.size(); ++a) {
    if (!indep[a]) continue;
    // Proper subsets of a, in increasing mask order.
    for (std::uint64_t b = (a - 1) & a;; b = (b - 1) & a) {
      if (b != a && !indep[b]) {
        report.failure = AxiomReport::Failure::kHereditary;
        report.a = ElementSet::FromMask(a);
        report.b = ElementSet::FromMask(b);
        // Keep the smallest dependent subset for a readable witness.
        for (std::uint64_t c = 0; c < indep.size(); ++c) {
          if ((c & ~a) == 0 && c != a && !indep[c]) {
            report.b = ElementSet::FromMask(c);
            break;
          }
        }
        return report;
      }
      if (b == 0) break;
    }
  }
  for (std::uint64_t a = 0; a < indep.size(); ++a) {
    if (!indep[a]) continue;
    const ElementSet sa = ElementSet::FromMask(a);
    for (std::uint64_t b = 0; b < indep.size(); ++b) {
      if (!indep[b]) continue;
      const ElementSet sb = ElementSet::FromMask(b);
      if (sa.size() != sb.size() + 1) continue;
      bool extended = false;
      for (Element e : (sa - sb).ToVector()) {
        if (indep[sb.With(e).mask()]) {
          extended = true;
          break;
        }
      }
      if (!extended) {
        report.failure = AxiomReport::Failure::kExchange;
        report.a = sa;
        report.b = sb;
        return report;
      }
    }
  }
  return report;
}

int BruteForceRank(const MatroidOracle& m, int limit) {
  const int n = m.ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  int best = 0;
  ForEachSubset(n, [&](ElementSet s) {
    if (s.size() > best && m.IsIndependent(s)) best = s.size();
    return true;
  });
  return best;
}

}  // namespace matkit
