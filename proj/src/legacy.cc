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

#include "matkit/legacy.h"

#include <string>

#include "matkit/errors.h"
#include "matkit/matroid_algorithms.h"

namespace matkit {

LegacyWeights::LegacyWeights(int n) : n_(n), total_(std::int64_t{n} * (n + 1) / 2) {
  ElementSet::CheckSize(n);
}

std::int64_t LegacyWeights::W(ElementSet s) const {
  return SumOf(s) + 2 * total_ * s.size();
}

std::int64_t LegacyWeights::C(ElementSet s) const {
  return 2 * total_ * s.size() - SumOf(s);
}

std::vector<std::int64_t> LegacyWeights::WVector() const {
  std::vector<std::int64_t> out(n_);
  for (Element i = 1; i <= n_; ++i) out[i - 1] = W(i);
  return out;
}

std::vector<std::int64_t> LegacyWeights::CVector() const {
  std::vector<std::int64_t> out(n_);
  for (Element i = 1; i <= n_; ++i) out[i - 1] = C(i);
  return out;
}

Rational LegacyEpsilon(int n) {
  return Rational(1) / (BigInt(6) * n * n * n);
}

namespace {

void CheckAlpha(const PiMatroid& pm) {
  const std::int64_t n = pm.ground_size();
  if (pm.alpha() < 1 || pm.alpha() > n * n) {
    throw AlphaOutOfRange("alpha = " + std::to_string(pm.alpha()) +
                          " outside [1, " + std::to_string(n * n) + "]");
  }
}

}  // namespace

bool LegacyWeightCheck(const PiMatroid& pm, ElementSet s) {
  CheckAlpha(pm);
  const LegacyWeights lw(pm.ground_size());
  const int k = pm.k();
  const std::int64_t alpha = pm.alpha();
  const bool in_l = s.size() == k && SumOf(s) == alpha && pm.secret().Contains(s);
  const bool at_budget = lw.W(s) == lw.B(k, alpha);
  if (in_l != at_budget) {
    throw InvariantViolation("w_n(" + s.ToString() + ") = B disagrees with " +
                             "membership in the sum-alpha layer");
  }
  if (s.size() == k) {
    const bool above = lw.W(s) >= lw.B(k, alpha);
    const bool cheap = lw.C(s) <= lw.Lb(k, alpha);
    if (above != cheap) {
      throw InvariantViolation("w_n(S) >= B disagrees with c_n(S) <= Lb for " +
                               s.ToString());
    }
  }
  return in_l;
}

std::string ToString(LegacyTarget t) {
  switch (t) {
    case LegacyTarget::kBm:
      return "BM";
    case LegacyTarget::kEmi:
      return "EMI";
    case LegacyTarget::kCmb:
      return "CMB";
    case LegacyTarget::kKcm:
      return "KCM";
  }
  return "?";
}

LegacyInstance LegacyReduce(std::shared_ptr<const PiMatroid> pm,
                            LegacyTarget target) {
  CheckAlpha(*pm);
  const int n = pm->ground_size();
  const LegacyWeights lw(n);
  LegacyInstance out;
  out.target = target;
  out.b = lw.B(pm->k(), pm->alpha());
  out.eps = LegacyEpsilon(n);
  MolInstance mol;
  mol.matroid = pm;
  mol.v = lw.WVector();
  switch (target) {
    case LegacyTarget::kBm:
      mol.w = lw.WVector();
      mol.bound = out.b;
      out.params = {Opt::kMax, Feas::kIndependent, Rel::kLe};
      out.mol = std::move(mol);
      break;
    case LegacyTarget::kKcm:
      mol.w = lw.WVector();
      mol.bound = out.b;
      out.params = {Opt::kMin, Feas::kIndependent, Rel::kGe};
      out.mol = std::move(mol);
      break;
    case LegacyTarget::kCmb:
      mol.w = lw.CVector();
      mol.bound = lw.Lb(pm->k(), pm->alpha());
      out.params = {Opt::kMin, Feas::kBases, Rel::kLe};
      out.mol = std::move(mol);
      break;
    case LegacyTarget::kEmi: {
      EmiInstance emi;
      emi.matroid = pm;
      emi.weight = lw.WVector();
      emi.k = pm->k();
      emi.target = out.b;
      out.emi = std::move(emi);
      break;
    }
  }
  return out;
}

std::optional<std::int64_t> LegacyOptimum(const LegacyInstance& inst,
                                          int limit) {
  if (inst.emi) {
    if (!BruteForceEmi(*inst.emi, limit)) return std::nullopt;
    return inst.b;
  }
  auto best = BruteForceMol(*inst.mol, inst.params, limit);
  if (!best) return std::nullopt;
  return best->value;
}

bool DecideViaLegacy(const LegacyInstance& inst, const MolSolver& solver) {
  if (inst.emi) return BruteForceEmi(*inst.emi).has_value();
  const std::optional<ElementSet> s = solver(*inst.mol, inst.params, inst.eps);
  if (!s) return false;
  if (!IsMolSolution(*inst.mol, inst.params, *s)) {
    throw ContractViolation("solver returned " + s->ToString() +
                            ", which is not a solution");
  }
  return Weight(*s, inst.mol->v) == inst.b;
}

}  // namespace matkit
