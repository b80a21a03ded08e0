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

#ifndef MATKIT_ELEMENT_SET_H_
#define MATKIT_ELEMENT_SET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "matkit/errors.h"

namespace matkit {

// Elements are the natural numbers 1..n of a ground set [n].
using Element = int;

inline constexpr int kMaxElements = 64;

// A subset of [n] for n <= kMaxElements, stored as a bit mask where element
// i occupies bit i-1. Iteration and ToVector() yield ascending ids, which is
// the canonical (sorted) form used in transcripts.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) Insert(e);
  }
  explicit ElementSet(std::span<const Element> elements) {
    for (Element e : elements) Insert(e);
  }

  static constexpr ElementSet FromMask(std::uint64_t mask) {
    ElementSet s;
    s.mask_ = mask;
    return s;
  }
  // The full ground set [n].
  static ElementSet Range(int n) {
    CheckSize(n);
    return FromMask(n == 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }

  bool Contains(Element e) const {
    return e >= 1 && e <= kMaxElements && ((mask_ >> (e - 1)) & 1u) != 0;
  }
  void Insert(Element e) {
    CheckElement(e);
    mask_ |= Bit(e);
  }
  void Erase(Element e) {
    CheckElement(e);
    mask_ &= ~Bit(e);
  }
  ElementSet With(Element e) const {
    ElementSet s = *this;
    s.Insert(e);
    return s;
  }
  ElementSet Without(Element e) const {
    ElementSet s = *this;
    s.Erase(e);
    return s;
  }

  // Largest element id, 0 for the empty set.
  int MaxElement() const { return 64 - std::countl_zero(mask_); }

  bool IsSubsetOf(ElementSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  std::vector<Element> ToVector() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(std::countr_zero(m) + 1);
    }
    return out;
  }

  // Calls visit(e) for each element in ascending order without allocating.
  template <typename Visitor>
  void ForEachElement(Visitor&& visit) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      visit(static_cast<Element>(std::countr_zero(m) + 1));
    }
  }

  std::string ToString() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return FromMask(a.mask_ | b.mask_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return FromMask(a.mask_ & b.mask_);
  }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return FromMask(a.mask_ & ~b.mask_);
  }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return FromMask(a.mask_ ^ b.mask_);
  }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;
  // Orders by mask value; deterministic but not lexicographic.
  friend constexpr auto operator<=>(ElementSet a, ElementSet b) {
    return a.mask_ <=> b.mask_;
  }

  static void CheckSize(int n) {
    if (n < 0 || n > kMaxElements) {
      throw InvalidArgument("ground set size " + std::to_string(n) +
                            " outside [0, " + std::to_string(kMaxElements) +
                            "]");
    }
  }

 private:
  static std::uint64_t Bit(Element e) { return std::uint64_t{1} << (e - 1); }
  static void CheckElement(Element e) {
    if (e < 1 || e > kMaxElements) {
      throw InvalidArgument("element id " + std::to_string(e) +
                            " outside [1, " + std::to_string(kMaxElements) +
                            "]");
    }
  }

  std::uint64_t mask_ = 0;
};

std::ostream& operator<<(std::ostream& os, ElementSet s);

// Lexicographic comparison of the sorted element lists: {1,4} < {2,3}.
bool LexLess(ElementSet a, ElementSet b);

// All k-subsets of [n] in lexicographic order of their sorted element lists.
// Calls visit(ElementSet) for each; stops early if visit returns false.
template <typename Visitor>
void ForEachKSubset(int n, int k, Visitor&& visit) {
  if (k < 0 || k > n) return;
  ElementSet::CheckSize(n);
  std::vector<Element> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    std::uint64_t mask = 0;
    for (Element e : idx) mask |= std::uint64_t{1} << (e - 1);
    if (!visit(ElementSet::FromMask(mask))) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Every subset of [n] (n <= 30) in increasing mask order.
template <typename Visitor>
void ForEachSubset(int n, Visitor&& visit) {
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < end; ++m) {
    if (!visit(ElementSet::FromMask(m))) return;
  }
}

// Subsets of [n] ordered by cardinality, then lexicographically.
template <typename Visitor>
void ForEachSubsetBySize(int n, Visitor&& visit) {
  bool go = true;
  for (int k = 0; k <= n && go; ++k) {
    ForEachKSubset(n, k, [&](ElementSet s) {
      go = visit(s);
      return go;
    });
  }
}

}  // namespace matkit

#endif  // MATKIT_ELEMENT_SET_H_
