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

#include "matkit/element_set.h"

#include <sstream>

namespace matkit {

std::string ElementSet::ToString() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, ElementSet s) {
  os << '{';
  bool first = true;
  for (Element e : s.ToVector()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  return os << '}';
}

bool LexLess(ElementSet a, ElementSet b) {
  const std::vector<Element> va = a.ToVector();
  const std::vector<Element> vb = b.ToVector();
  return va < vb;
}

}  // namespace matkit
