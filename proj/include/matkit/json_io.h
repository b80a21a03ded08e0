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


#ifndef MATKIT_JSON_IO_H_
#define MATKIT_JSON_IO_H_

#include <string>

#include <json.hpp>

#include "matkit/emb.h"
#include "matkit/kcm.h"
#include "matkit/matroid.h"
#include "matkit/mol.h"
#include "matkit/sat.h"

namespace matkit {

// All parsers throw InvalidArgument on malformed input.

// {"type":"uniform","n":N,"k":K}
// {"type":"partition","blocks":[[..],..],"bounds":[..]}  ("n" optional)
// {"type":"explicit","n":N,"independent":[[..],..]}
// {"type":"pi","n":N,"k":K,"alpha":A,"secret":{...}} with secret one of
//   {"type":"explicit","sets":[[..]]}, {"type":"graph","edges":[[u,v],..]},
//   {"type":"empty"}, {"type":"singleton","set":[..]}
// {"type":"sat","n_vars":N,"clauses":[[1,-3],..],"k":K,"alpha":A}
MatroidPtr ParseMatroid(const nlohmann::json& j);

// {"matroid":..,"cost":[..],"target":T}
EmbInstance ParseEmbInstance(const nlohmann::json& j);
// {"matroid":..,"weight":[..],"k":K,"target":T}
EmiInstance ParseEmiInstance(const nlohmann::json& j);
// {"n_vars":N,"clauses":[[..],..]}
SatInstance ParseSatInstance(const nlohmann::json& j);
// {"matroid":..,"cost":[..],"size":[..],"demand":D}
KcmInstance ParseKcmInstance(const nlohmann::json& j);

// {"matroid":<matroid_json>,"v":[..],"w":[..],"L":..,"params":{..}}
nlohmann::json MolToJson(const MolInstance& mol, const MolParams& p,
                         const nlohmann::json& matroid_json);

nlohmann::json SetToJson(ElementSet s);

// Reads and parses a JSON file; throws InvalidArgument on I/O or syntax
// errors.
nlohmann::json LoadJsonFile(const std::string& path);

}  // namespace matkit

#endif  // MATKIT_JSON_IO_H_
