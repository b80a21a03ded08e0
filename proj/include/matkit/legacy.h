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


#ifndef MATKIT_LEGACY_H_
#define MATKIT_LEGACY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matkit/emb.h"
#include "matkit/mol.h"
#include "matkit/pi_matroid.h"
#include "matkit/rational.h"

namespace matkit {

// Standard weights on [n], with s = sum([n]):
//   w_n(i) = i + 2s,       B(k, alpha)  = alpha + 2ks,
//   c_n(i) = 2s - i,       Lb(k, alpha) = 2ks - alpha.
// For a k-set S, w_n(S) = B iff sum(S) = alpha.
class LegacyWeights {
 public:
  explicit LegacyWeights(int n);

  int n() const { return n_; }
  std::int64_t total() const { return total_; }  // sum([n])

  std::int64_t W(Element i) const { return i + 2 * total_; }
  std::int64_t C(Element i) const { return 2 * total_ - i; }
  std::int64_t W(ElementSet s) const;
  std::int64_t C(ElementSet s) const;
  std::int64_t B(int k, std::int64_t alpha) const {
    return alpha + 2 * k * total_;
  }
  std::int64_t Lb(int k, std::int64_t alpha) const {
    return 2 * k * total_ - alpha;
  }

  std::vector<std::int64_t> WVector() const;
  std::vector<std::int64_t> CVector() const;

 private:
  int n_;
  std::int64_t total_;
};

// 1 / (6 n^3).
Rational LegacyEpsilon(int n);

// Returns whether S (independent in pm) is a k-set of sum alpha inside the
// secret family, and checks on the way that this agrees with
// w_n(S) = B(n, k, alpha), and that for |S| = k, w_n(S) >= B iff
// c_n(S) <= Lb. A mismatch throws InvariantViolation; alpha outside [n^2]
// throws AlphaOutOfRange.
bool LegacyWeightCheck(const PiMatroid& pm, ElementSet s);

enum class LegacyTarget { kBm, kEmi, kCmb, kKcm };

std::string ToString(LegacyTarget t);

// BM:  max w_n(S) over independent S with w_n(S) <= B.      (max, IS, <=)
// KCM: min w_n(S) over independent S with w_n(S) >= B.      (min, IS, >=)
// CMB: min w_n(S) over bases S with c_n(S) <= Lb.           (min, bases, <=)
// EMI: independent S with |S| = k and w_n(S) = B.
// In every case the optimum (or witness) has w_n-value exactly B iff the
// Pi-matroid has an independent k-set of sum alpha.
struct LegacyInstance {
  LegacyTarget target = LegacyTarget::kBm;
  std::int64_t b = 0;  // B(n, k, alpha)
  Rational eps;        // 1 / (6 n^3)
  std::optional<MolInstance> mol;
  MolParams params;
  std::optional<EmiInstance> emi;
};

LegacyInstance LegacyReduce(std::shared_ptr<const PiMatroid> pm,
                            LegacyTarget target);

// Exact optimum value (BM/KCM/CMB) or B if an EMI witness exists; nullopt
// when the instance has no solution.
std::optional<std::int64_t> LegacyOptimum(const LegacyInstance& inst,
                                          int limit = 18);

// Does `solver`, run at eps = 1/(6 n^3), land exactly on B? For EMI the
// exact brute force decides.
bool DecideViaLegacy(const LegacyInstance& inst, const MolSolver& solver);

}  // namespace matkit

#endif  // MATKIT_LEGACY_H_
