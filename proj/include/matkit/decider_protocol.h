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


#ifndef MATKIT_DECIDER_PROTOCOL_H_
#define MATKIT_DECIDER_PROTOCOL_H_

#include <string>
#include <vector>

#include "matkit/adversary.h"

namespace matkit {

// A decider living in another process. Each call spawns `argv` and talks
// to it over its standard streams:
//
//   harness -> decider   one JSON line
//                        {"n":..,"k":..,"alpha":..,"cost":[..],"target":..,"seed":..}
//   decider -> harness   "Q 2 3"   membership query for {2,3} ("Q" alone is the
//                                  empty set)
//   harness -> decider   "1" or "0"
//   decider -> harness   "V yes" or "V no", after which the harness stops
//                        reading and waits for the process.
//
// Anything else, or end of stream before a verdict, throws ProtocolError.
Decider ExternalDecider(std::vector<std::string> argv);

// The metadata line sent first; exposed for decider implementations.
std::string EncodeQuestion(const DeciderQuestion& q, std::uint64_t seed);

}  // namespace matkit

#endif  // MATKIT_DECIDER_PROTOCOL_H_
