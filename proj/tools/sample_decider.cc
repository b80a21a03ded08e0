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


// A decider speaking the line protocol, for exercising `matkit adversary`.
//
//   sample_decider budget [B]   query up to B members of F in seeded random
//                               order (default |F| - 1), yes iff one is
//                               independent
//   sample_decider exhaustive   rank pass, then every basis candidate of
//                               cost T
//   sample_decider silent       answer no without querying
//   sample_decider garbage      violate the protocol

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "matkit/element_set.h"
#include "matkit/pi_matroid.h"

namespace {

using matkit::Element;
using matkit::ElementSet;

bool Ask(ElementSet s) {
  std::cout << 'Q';
  for (Element e : s.ToVector()) std::cout << ' ' << e;
  std::cout << std::endl;
  std::string reply;
  if (!std::getline(std::cin, reply)) std::exit(4);
  return reply == "1";
}

void Verdict(bool yes) { std::cout << (yes ? "V yes" : "V no") << std::endl; }

}  // namespace

int main(int argc, char** argv) {
  const std::string strategy = argc > 1 ? argv[1] : "silent";
  std::string line;
  if (!std::getline(std::cin, line)) return 4;
  const nlohmann::json q = nlohmann::json::parse(line);
  const int n = q.at("n").get<int>();
  const int k = q.at("k").get<int>();
  const std::int64_t alpha = q.at("alpha").get<std::int64_t>();
  const std::int64_t target = q.at("target").get<std::int64_t>();
  const std::vector<std::int64_t> cost =
      q.at("cost").get<std::vector<std::int64_t>>();
  const std::uint64_t seed = q.at("seed").get<std::uint64_t>();

  if (strategy == "silent") {
    Verdict(false);
  } else if (strategy == "garbage") {
    std::cout << "hello" << std::endl;
  } else if (strategy == "budget") {
    std::vector<ElementSet> family = matkit::EnumerateTargetSets(n, k, alpha);
    const int budget = argc > 2 ? std::stoi(argv[2])
                                : static_cast<int>(family.size()) - 1;
    std::mt19937_64 rng(seed);
    std::shuffle(family.begin(), family.end(), rng);
    bool yes = false;
    for (int i = 0; i < budget && i < static_cast<int>(family.size()); ++i) {
      if (Ask(family[i])) {
        yes = true;
        break;
      }
    }
    Verdict(yes);
  } else if (strategy == "exhaustive") {
    ElementSet basis;
    for (Element e = 1; e <= n; ++e) {
      if (Ask(basis.With(e))) basis.Insert(e);
    }
    bool yes = false;
    matkit::ForEachKSubset(n, basis.size(), [&](ElementSet s) {
      std::int64_t c = 0;
      for (Element e : s.ToVector()) c += cost[e - 1];
      if (c == target && Ask(s)) yes = true;
      return !yes;
    });
    Verdict(yes);
  } else {
    std::cerr << "unknown strategy " << strategy << '\n';
    return 2;
  }
  return 0;
}
