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

#include "matkit/mol.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "matkit/errors.h"
#include "matkit/matroid_algorithms.h"

namespace matkit {

std::string ToString(const MolParams& p) {
  std::string out = "(";
  out += p.opt == Opt::kMax ? "max" : "min";
  out += p.feas == Feas::kIndependent ? ",IS," : ",bases,";
  out += p.rel == Rel::kLe ? "<=)" : ">=)";
  return out;
}

MolParams ParseMolParams(const std::string& text) {
  std::string clean;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ') continue;
    clean.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  std::vector<std::string> parts;
  std::istringstream in(clean);
  for (std::string part; std::getline(in, part, ',');) parts.push_back(part);
  if (parts.size() != 3) {
    throw InvalidArgument("params must look like max,is,le: '" + text + "'");
  }
  MolParams p;
  if (parts[0] == "max") {
    p.opt = Opt::kMax;
  } else if (parts[0] == "min") {
    p.opt = Opt::kMin;
  } else {
    throw InvalidArgument("bad opt '" + parts[0] + "'");
  }
  if (parts[1] == "is") {
    p.feas = Feas::kIndependent;
  } else if (parts[1] == "bases") {
    p.feas = Feas::kBases;
  } else {
    throw InvalidArgument("bad feasibility '" + parts[1] + "'");
  }
  if (parts[2] == "le" || parts[2] == "<=") {
    p.rel = Rel::kLe;
  } else if (parts[2] == "ge" || parts[2] == ">=") {
    p.rel = Rel::kGe;
  } else {
    throw InvalidArgument("bad relation '" + parts[2] + "'");
  }
  return p;
}

std::array<MolParams, 7> NonTrivialParams() {
  std::array<MolParams, 7> out;
  int i = 0;
  for (Opt opt : {Opt::kMax, Opt::kMin}) {
    for (Feas feas : {Feas::kIndependent, Feas::kBases}) {
      for (Rel rel : {Rel::kLe, Rel::kGe}) {
        MolParams p{opt, feas, rel};
        if (!p.trivial()) out[i++] = p;
      }
    }
  }
  return out;
}

int DOf(const MolParams& p) {
  if (p.trivial()) throw TrivialParams();
  const bool zero = (p.opt == Opt::kMax && p.rel == Rel::kLe) ||
                    (p.opt == Opt::kMin && p.rel == Rel::kGe);
  return zero ? 0 : 1;
}

ReducedMolInstance ReduceEmbToMol(const EmbInstance& inst, const MolParams& p) {
  inst.Validate();
  ReducedMolInstance r;
  r.params = p;
  r.d = DOf(p);
  r.source = inst;
  const int n = inst.ground_size();
  const std::int64_t total =
      std::accumulate(inst.cost.begin(), inst.cost.end(), std::int64_t{0});
  r.h = 2 * std::max<std::int64_t>(1, total);
  r.k_rank = Rank(*inst.matroid);
  const std::int64_t sign = r.d == 0 ? 1 : -1;
  r.mol.matroid = inst.matroid;
  r.mol.v.resize(n);
  r.mol.w.resize(n);
  for (int i = 0; i < n; ++i) {
    r.mol.v[i] = r.h + inst.cost[i];
    r.mol.w[i] = r.h + inst.cost[i] * sign;
    if (r.mol.w[i] < 0) {
      throw InvariantViolation("negative constraint weight in reduction");
    }
  }
  r.mol.bound = r.k_rank * r.h + inst.target * sign;
  r.eps = Rational(1) / (BigInt(8) * (n + 1) * (BigInt(inst.target) + 1) *
                         (BigInt(total) + 1));
  return r;
}

bool IsMolSolution(const MolInstance& mol, const MolParams& p, ElementSet s) {
  if (!mol.matroid->IsIndependent(s)) return false;
  if (p.feas == Feas::kBases && s.size() != Rank(*mol.matroid)) return false;
  const std::int64_t w = Weight(s, mol.w);
  return p.rel == Rel::kLe ? w <= mol.bound : w >= mol.bound;
}

namespace {

// Calls visit(S) for every solution, in (size, lex) order.
template <typename Visitor>
void ForEachSolution(const MolInstance& mol, const MolParams& p, int limit,
                     Visitor&& visit) {
  const MatroidOracle& m = *mol.matroid;
  const int n = m.ground_size();
  if (n > limit) throw GroundSetTooLarge(n, limit);
  if (static_cast<int>(mol.v.size()) != n ||
      static_cast<int>(mol.w.size()) != n) {
    throw InvalidArgument("value/weight vectors do not match ground set");
  }
  const int rank = Rank(m);
  ForEachSubsetBySize(n, [&](ElementSet s) {
    if (p.feas == Feas::kBases && s.size() != rank) return true;
    const std::int64_t w = Weight(s, mol.w);
    const bool fits = p.rel == Rel::kLe ? w <= mol.bound : w >= mol.bound;
    if (fits && m.IsIndependent(s)) visit(s);
    return true;
  });
}

}  // namespace

std::optional<MolSolution> BruteForceMol(const MolInstance& mol,
                                         const MolParams& p, int limit) {
  std::optional<MolSolution> best;
  ForEachSolution(mol, p, limit, [&](ElementSet s) {
    const std::int64_t value = Weight(s, mol.v);
    const bool better = !best || (p.opt == Opt::kMax ? value > best->value
                                                     : value < best->value);
    if (better) best = MolSolution{s, value};
  });
  return best;
}

MolSolver BruteForceMolSolver(int limit) {
  return [limit](const MolInstance& mol, const MolParams& p,
                 const Rational&) -> std::optional<ElementSet> {
    auto best = BruteForceMol(mol, p, limit);
    if (!best) return std::nullopt;
    return best->set;
  };
}

bool DecideEmbViaMol(const EmbInstance& inst, const MolParams& p,
                     const MolSolver& solver) {
  const ReducedMolInstance r = ReduceEmbToMol(inst, p);
  const std::optional<ElementSet> s = solver(r.mol, p, r.eps);
  if (!s) return false;
  if (!IsMolSolution(r.mol, p, *s)) {
    throw ContractViolation("solver returned " + s->ToString() +
                            ", which is not a solution");
  }
  return Weight(*s, r.mol.v) == r.target_value();
}

ValueBoundReport CertifyValueBounds(const ReducedMolInstance& r, int limit) {
  ValueBoundReport report;
  const std::int64_t target = r.target_value();
  const MatroidOracle& m = *r.mol.matroid;
  const int rank = Rank(m);
  auto is_witness = [&](ElementSet s) {
    return s.size() == rank && Weight(s, r.source.cost) == r.source.target &&
           m.IsIndependent(s);
  };
  auto fail = [&](const std::string& why) {
    if (report.ok) {
      report.ok = false;
      report.failure = why;
    }
  };
  ForEachSolution(r.mol, r.params, limit, [&](ElementSet s) {
    ++report.solutions;
    const std::int64_t value = Weight(s, r.mol.v);
    if (r.params.opt == Opt::kMax && value > target) {
      fail("solution " + s.ToString() + " exceeds k H + T");
    }
    if (r.params.opt == Opt::kMin && value < target) {
      fail("solution " + s.ToString() + " is below k H + T");
    }
    if (value == target) {
      report.bound_attained = true;
      if (!is_witness(s)) {
        fail("solution " + s.ToString() + " attains k H + T but is no witness");
      }
    }
  });
  ForEachKSubset(m.ground_size(), rank, [&](ElementSet s) {
    if (!is_witness(s)) return true;
    if (!IsMolSolution(r.mol, r.params, s) || Weight(s, r.mol.v) != target) {
      fail("witness " + s.ToString() + " is not an optimal solution");
    }
    return true;
  });
  return report;
}

}  // namespace matkit
