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

#include "matkit/json_io.h"

#include <algorithm>
#include <fstream>
#include <memory>
#include <utility>
#include <vector>

#include "matkit/errors.h"
#include "matkit/pi_matroid.h"

namespace matkit {

namespace {

using nlohmann::json;

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::int64_t Int(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_number_integer()) {
    throw InvalidArgument(std::string("field \"") + key +
                          "\" must be an integer");
  }
  return v.get<std::int64_t>();
}

ElementSet Set(const json& j) {
  if (!j.is_array()) throw InvalidArgument("element list must be an array");
  ElementSet s;
  for (const json& e : j) {
    if (!e.is_number_integer()) {
      throw InvalidArgument("element ids must be integers");
    }
    s.Insert(e.get<int>());
  }
  return s;
}

std::vector<ElementSet> Sets(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of sets");
  std::vector<ElementSet> out;
  for (const json& s : j) out.push_back(Set(s));
  return out;
}

std::vector<std::int64_t> Ints(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_array()) {
    throw InvalidArgument(std::string("field \"") + key + "\" must be a list");
  }
  std::vector<std::int64_t> out;
  for (const json& x : v) {
    if (!x.is_number_integer()) {
      throw InvalidArgument(std::string("field \"") + key +
                            "\" must hold integers");
    }
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

int CheckedN(std::int64_t n) {
  if (n < 0 || n > kMaxElements) {
    throw InvalidArgument("n = " + std::to_string(n) + " outside [0, 64]");
  }
  return static_cast<int>(n);
}

void CheckWithin(ElementSet s, int n) {
  if (s.MaxElement() > n) {
    throw InvalidArgument("set " + s.ToString() + " not inside [" +
                          std::to_string(n) + "]");
  }
}

SecretPtr ParseSecret(const json& j, int n) {
  const std::string type = Field(j, "type").get<std::string>();
  if (type == "empty") return std::make_shared<EmptyFamily>();
  if (type == "singleton") {
    const ElementSet s = Set(Field(j, "set"));
    CheckWithin(s, n);
    return std::make_shared<SingletonFamily>(s);
  }
  if (type == "explicit") {
    const std::vector<ElementSet> sets = Sets(Field(j, "sets"));
    for (ElementSet s : sets) CheckWithin(s, n);
    return std::make_shared<ExplicitFamily>(sets);
  }
  if (type == "graph") {
    std::vector<std::pair<Element, Element>> edges;
    for (const json& e : Field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidArgument("graph edges must be pairs");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return std::make_shared<GraphIndependentSets>(n, edges);
  }
  throw InvalidArgument("unknown secret family type \"" + type + "\"");
}

SatInstance ParseSatFields(const json& j) {
  const int n_vars = CheckedN(Int(j, "n_vars"));
  std::vector<std::vector<int>> clauses;
  const json& cs = Field(j, "clauses");
  if (!cs.is_array()) throw InvalidArgument("clauses must be a list");
  for (const json& c : cs) {
    if (!c.is_array()) throw InvalidArgument("each clause must be a list");
    std::vector<int> clause;
    for (const json& lit : c) {
      if (!lit.is_number_integer()) {
        throw InvalidArgument("literals must be integers");
      }
      clause.push_back(lit.get<int>());
    }
    clauses.push_back(std::move(clause));
  }
  return SatInstance(n_vars, std::move(clauses));
}

template <typename Fn>
auto Guard(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed descriptor: ") + e.what());
  }
}

}  // namespace

MatroidPtr ParseMatroid(const json& j) {
  return Guard([&]() -> MatroidPtr {
    const std::string type = Field(j, "type").get<std::string>();
    if (type == "uniform") {
      return std::make_shared<UniformMatroid>(CheckedN(Int(j, "n")),
                                              static_cast<int>(Int(j, "k")));
    }
    if (type == "partition") {
      std::vector<ElementSet> blocks = Sets(Field(j, "blocks"));
      std::vector<int> bounds;
      for (std::int64_t b : Ints(j, "bounds")) bounds.push_back(static_cast<int>(b));
      int n = 0;
      for (ElementSet b : blocks) n = std::max(n, b.MaxElement());
      if (j.contains("n")) n = CheckedN(Int(j, "n"));
      return std::make_shared<PartitionMatroid>(n, std::move(blocks),
                                                std::move(bounds));
    }
    if (type == "explicit") {
      const int n = CheckedN(Int(j, "n"));
      const std::vector<ElementSet> sets = Sets(Field(j, "independent"));
      return std::make_shared<ExplicitMatroid>(n, sets);
    }
    if (type == "pi") {
      const int n = CheckedN(Int(j, "n"));
      return std::make_shared<PiMatroid>(n, static_cast<int>(Int(j, "k")),
                                         Int(j, "alpha"),
                                         ParseSecret(Field(j, "secret"), n));
    }
    if (type == "sat") {
      SatMatroidCode code{ParseSatFields(j), static_cast<int>(Int(j, "k")),
                          Int(j, "alpha")};
      return code.Decode();
    }
    throw InvalidArgument("unknown matroid type \"" + type + "\"");
  });
}

EmbInstance ParseEmbInstance(const json& j) {
  return Guard([&] {
    EmbInstance inst;
    inst.matroid = ParseMatroid(Field(j, "matroid"));
    inst.cost = Ints(j, "cost");
    inst.target = Int(j, "target");
    inst.Validate();
    return inst;
  });
}

EmiInstance ParseEmiInstance(const json& j) {
  return Guard([&] {
    EmiInstance inst;
    inst.matroid = ParseMatroid(Field(j, "matroid"));
    inst.weight = Ints(j, "weight");
    inst.k = static_cast<int>(Int(j, "k"));
    inst.target = Int(j, "target");
    inst.Validate();
    return inst;
  });
}

SatInstance ParseSatInstance(const json& j) {
  return Guard([&] { return ParseSatFields(j); });
}

KcmInstance ParseKcmInstance(const json& j) {
  return Guard([&] {
    KcmInstance inst;
    inst.matroid = ParseMatroid(Field(j, "matroid"));
    inst.cost = Ints(j, "cost");
    inst.size = Ints(j, "size");
    inst.demand = Int(j, "demand");
    inst.Validate();
    return inst;
  });
}

json SetToJson(ElementSet s) { return s.ToVector(); }

json MolToJson(const MolInstance& mol, const MolParams& p,
               const json& matroid_json) {
  json params = {{"opt", p.opt == Opt::kMax ? "max" : "min"},
                 {"feas", p.feas == Feas::kIndependent ? "is" : "bases"},
                 {"rel", p.rel == Rel::kLe ? "le" : "ge"}};
  return {{"matroid", matroid_json},
          {"v", mol.v},
          {"w", mol.w},
          {"L", mol.bound},
          {"params", params}};
}

json LoadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

}  // namespace matkit
