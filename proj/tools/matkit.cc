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


// matkit: batch driver for the matroid toolkit.
//
// Exit codes: 0 success, 1 domain-negative result, 2 input error,
// 3 decider plug-in protocol error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "matkit/adversary.h"
#include "matkit/decider_protocol.h"
#include "matkit/emb.h"
#include "matkit/errors.h"
#include "matkit/json_io.h"
#include "matkit/kcm.h"
#include "matkit/matroid_algorithms.h"
#include "matkit/mol.h"
#include "matkit/pi_matroid.h"
#include "matkit/sat.h"

namespace {

using nlohmann::json;
using namespace matkit;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kProtocolError = 3;

struct Global {
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "json";
  std::string out;
};

// A result in both shapes: JSON document and CSV table.
struct Output {
  json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string Cell(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string SetCell(ElementSet s) {
  std::string out;
  for (Element e : s.ToVector()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

void Emit(const Global& g, const Output& out) {
  std::ostringstream text;
  if (g.format == "csv") {
    for (std::size_t i = 0; i < out.header.size(); ++i) {
      text << (i ? "," : "") << Cell(out.header[i]);
    }
    text << '\n';
    for (const auto& row : out.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        text << (i ? "," : "") << Cell(row[i]);
      }
      text << '\n';
    }
  } else {
    text << out.doc.dump(2) << '\n';
  }
  if (g.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream file(g.out);
    if (!file) throw InvalidArgument("cannot write " + g.out);
    file << text.str();
  }
}

std::string Bool(bool b) { return b ? "true" : "false"; }

int RunAxioms(const Global& g, const std::string& path, int limit) {
  const json descriptor = LoadJsonFile(path);
  const MatroidPtr m = ParseMatroid(descriptor);
  const AxiomReport report = VerifyMatroidAxioms(*m, limit);
  Output out;
  out.doc = {{"pass", report.ok()},
             {"failure", ToString(report.failure)},
             {"ground_size", m->ground_size()}};
  std::string paving = "";
  if (report.ok()) {
    out.doc["rank"] = Rank(*m);
    const bool p = IsPaving(*m, limit);
    out.doc["paving"] = p;
    paving = Bool(p);
  } else {
    out.doc["a"] = SetToJson(report.a);
    out.doc["b"] = SetToJson(report.b);
  }
  out.header = {"pass", "failure", "a", "b", "paving"};
  out.rows.push_back({Bool(report.ok()), ToString(report.failure),
                      report.ok() ? "" : SetCell(report.a),
                      report.ok() ? "" : SetCell(report.b), paving});
  Emit(g, out);
  return report.ok() ? kOk : kNegative;
}

Decider BuiltinDecider(const std::string& name, int budget) {
  if (name == "silent") return SilentDecider();
  if (name == "exhaustive") return ExhaustiveDecider();
  if (name == "budget") return BudgetDecider(budget);
  if (name == "probe") return RandomProbeDecider();
  throw InvalidArgument("unknown builtin decider \"" + name + "\"");
}

int RunAdversary(const Global& g, int n, int k, std::int64_t alpha,
                 const std::vector<std::string>& decider_cmd,
                 const std::string& builtin, int budget, int seeds) {
  if (seeds < 1) throw InvalidArgument("--seeds must be >= 1");
  if (decider_cmd.empty() == builtin.empty()) {
    throw InvalidArgument("give exactly one of --decider or --builtin");
  }
  const std::vector<ElementSet> family = EnumerateTargetSets(n, k, alpha);
  if (family.empty()) {
    throw EmptyTargetFamily("no " + std::to_string(k) + "-subset of [" +
                            std::to_string(n) + "] sums to " +
                            std::to_string(alpha));
  }
  if (budget < 0) budget = static_cast<int>(family.size()) - 1;
  const Decider decider = decider_cmd.empty()
                              ? BuiltinDecider(builtin, budget)
                              : ExternalDecider(decider_cmd);

  std::vector<AdversaryReport> reports(seeds);
  std::vector<std::exception_ptr> errors(seeds);
  const int jobs = std::max(1, std::min(g.jobs, seeds));
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < seeds; i += jobs) {
        try {
          reports[i] = AdversaryGame(decider, n, k, alpha, g.seed + i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Output out;
  out.header = {"seed", "queries", "defeated", "hidden_set"};
  json runs = json::array();
  int defeated = 0;
  std::size_t queries = 0;
  for (const AdversaryReport& r : reports) {
    const std::size_t q = r.empty_run.transcript.size();
    queries += q;
    defeated += r.defeated ? 1 : 0;
    runs.push_back({{"seed", r.seed},
                    {"queries", q},
                    {"defeated", r.defeated},
                    {"hidden_set", r.hidden ? SetToJson(*r.hidden) : json()}});
    out.rows.push_back({std::to_string(r.seed), std::to_string(q),
                        Bool(r.defeated), r.hidden ? SetCell(*r.hidden) : ""});
  }
  const double rate = static_cast<double>(defeated) / seeds;
  std::ostringstream rate_text;
  rate_text << rate;
  out.rows.push_back({"summary", std::to_string(queries), rate_text.str(),
                      "family_size=" + std::to_string(family.size())});
  out.doc = {{"n", n},
             {"k", k},
             {"alpha", alpha},
             {"runs", runs},
             {"summary",
              {{"defeat_rate", rate},
               {"family_size", family.size()},
               {"total_queries", queries}}}};
  Emit(g, out);
  return kOk;
}

int RunReduce(const Global& g, const std::string& path,
              const std::string& params_text) {
  const json descriptor = LoadJsonFile(path);
  const EmbInstance inst = ParseEmbInstance(descriptor);
  const MolParams p = ParseMolParams(params_text);
  const ReducedMolInstance r = ReduceEmbToMol(inst, p);
  const bool direct = BruteForceEmb(inst).has_value();
  const bool via = DecideEmbViaMol(inst, p, BruteForceMolSolver());
  Output out;
  out.doc = MolToJson(r.mol, p, descriptor.at("matroid"));
  out.doc["H"] = r.h;
  out.doc["k_rank"] = r.k_rank;
  out.doc["d"] = r.d;
  out.doc["eps"] = ToString(r.eps);
  out.doc["target_value"] = r.target_value();
  out.doc["emb"] = direct;
  out.doc["via_mol"] = via;
  out.doc["equiv"] = direct == via;
  out.header = {"params", "H", "k_rank", "d", "L", "eps", "emb", "via_mol",
                "equiv"};
  out.rows.push_back({ToString(p), std::to_string(r.h),
                      std::to_string(r.k_rank), std::to_string(r.d),
                      std::to_string(r.mol.bound), ToString(r.eps),
                      Bool(direct), Bool(via), Bool(direct == via)});
  Emit(g, out);
  return kOk;
}

int RunEmb(const Global& g, const std::string& path) {
  const json descriptor = LoadJsonFile(path);
  std::optional<ElementSet> found;
  std::string kind;
  if (descriptor.contains("k")) {
    kind = "emi";
    found = BruteForceEmi(ParseEmiInstance(descriptor));
  } else {
    kind = "emb";
    found = BruteForceEmb(ParseEmbInstance(descriptor));
  }
  Output out;
  out.doc = {{"kind", kind},
             {"found", found.has_value()},
             {"solution", found ? SetToJson(*found) : json()}};
  out.header = {"kind", "found", "solution"};
  out.rows.push_back(
      {kind, Bool(found.has_value()), found ? SetCell(*found) : ""});
  Emit(g, out);
  return kOk;
}

int RunSat(const Global& g, const std::string& path) {
  const SatInstance sat = ParseSatInstance(LoadJsonFile(path));
  const SatViaEmbResult result = DecideSatViaEmb(
      sat, [](const EmbInstance& inst) { return BruteForceEmb(inst).has_value(); });
  Output out;
  json trace = json::array();
  out.header = {"k", "alpha"};
  for (auto [k, alpha] : result.accepted) {
    trace.push_back({{"k", k}, {"alpha", alpha}});
    out.rows.push_back({std::to_string(k), std::to_string(alpha)});
  }
  out.doc = {{"satisfiable", result.satisfiable},
             {"empty_assignment", result.empty_assignment},
             {"trace", trace}};
  if (g.format == "csv") {
    // Trailing summary rows, as in the adversary table.
    out.rows.push_back({"satisfiable", Bool(result.satisfiable)});
    out.rows.push_back({"empty_assignment", Bool(result.empty_assignment)});
  }
  Emit(g, out);
  return kOk;
}

int RunKcm(const Global& g, const std::string& path,
           const std::string& eps_text, bool with_oracle,
           std::string kind) {
  const json descriptor = LoadJsonFile(path);
  const KcmInstance inst = ParseKcmInstance(descriptor);
  if (kind.empty()) kind = descriptor.value("kind", std::string("kcmb"));
  if (kind != "kcm" && kind != "kcmb") {
    throw InvalidArgument("kind must be kcm or kcmb");
  }
  const Rational eps = NormalizeEpsilon(ParseRational(eps_text));
  std::optional<KcmSolution> sol;
  std::optional<KcmSolution> opt;
  if (kind == "kcm") {
    sol = KcmViaKcmb(inst, EptasSolver(), eps);
    if (with_oracle) opt = BruteForceKcm(inst);
  } else {
    sol = KcmbEptas(inst, eps);
    if (with_oracle) opt = BruteForceKcmb(inst);
  }
  Output out;
  out.header = {"kind", "eps", "feasible", "solution", "cost", "size",
                "ratio_vs_bruteforce"};
  out.doc = {{"kind", kind}, {"eps", ToString(eps)},
             {"feasible", sol.has_value()}};
  std::string ratio_cell;
  if (sol) {
    out.doc["solution"] = SetToJson(sol->set);
    out.doc["cost"] = sol->cost;
    out.doc["size"] = Weight(sol->set, inst.size);
    if (opt) {
      const Rational ratio = opt->cost == 0
                                 ? Rational(sol->cost == 0 ? 1 : 0)
                                 : Rational(sol->cost) / opt->cost;
      ratio_cell = sol->cost > 0 && opt->cost == 0 ? "inf" : ToString(ratio);
      out.doc["opt"] = opt->cost;
      out.doc["ratio_vs_bruteforce"] = ratio_cell;
      out.doc["ratio_bound"] = ToString(1 + 5 * eps);
    }
  }
  out.rows.push_back({kind, ToString(eps), Bool(sol.has_value()),
                      sol ? SetCell(sol->set) : "",
                      sol ? std::to_string(sol->cost) : "",
                      sol ? std::to_string(Weight(sol->set, inst.size)) : "",
                      ratio_cell});
  Emit(g, out);
  return sol ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matkit: matroid oracle toolkit"};
  app.require_subcommand(1);
  // Subcommands copy this at creation, so global flags work after them too.
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "Base seed; run i uses seed + i");
  app.add_option("--jobs", g.jobs, "Worker threads (adversary seeds)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write output here instead of stdout");

  std::string file;
  int limit = 16;
  auto* axioms = app.add_subcommand("axioms", "Check the matroid axioms");
  axioms->add_option("matroid", file, "Matroid descriptor (JSON)")->required();
  axioms->add_option("--limit", limit, "Largest ground set to enumerate");

  int n = 0;
  int k = 0;
  std::int64_t alpha = 0;
  int seeds = 1;
  int budget = -1;
  std::string builtin;
  std::string decider_line;
  auto* adversary =
      app.add_subcommand("adversary", "Run the replay adversary over seeds");
  adversary->add_option("--n", n)->required();
  adversary->add_option("--k", k)->required();
  adversary->add_option("--alpha", alpha)->required();
  adversary->add_option("--seeds", seeds, "Number of seeds");
  adversary->add_option("--decider", decider_line,
                        "Decider command line, split on whitespace");
  adversary->add_option("--builtin", builtin,
                        "Built-in decider: silent, budget, probe, exhaustive");
  adversary->add_option("--budget", budget,
                        "Query budget of the budget decider (default |F|-1)");

  std::string params = "max,is,le";
  auto* reduce = app.add_subcommand("reduce", "Reduce EMB to a MOL problem");
  reduce->add_option("instance", file, "EMB instance (JSON)")->required();
  reduce->add_option("--params", params, "opt,feas,rel e.g. min,bases,ge");

  auto* emb = app.add_subcommand("emb", "Solve EMB or EMI by enumeration");
  emb->add_option("instance", file, "EMB or EMI instance (JSON)")->required();

  auto* sat = app.add_subcommand("sat", "Decide SAT through EMB instances");
  sat->add_option("instance", file, "SAT instance (JSON)")->required();

  std::string eps = "1/2";
  bool oracle = false;
  std::string kind;
  auto* kcm = app.add_subcommand("kcm", "Run the knapsack-cover EPTAS");
  kcm->add_option("instance", file, "KCM instance (JSON)")->required();
  kcm->add_option("--eps", eps, "Accuracy, e.g. 1/3 or 0.25");
  kcm->add_flag("--oracle", oracle, "Report the ratio to the exact optimum");
  kcm->add_option("--kind", kind, "kcm or kcmb (default: instance field)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  std::vector<std::string> decider_cmd;
  {
    std::istringstream words(decider_line);
    for (std::string w; words >> w;) decider_cmd.push_back(w);
  }
  try {
    if (*axioms) return RunAxioms(g, file, limit);
    if (*adversary) {
      return RunAdversary(g, n, k, alpha, decider_cmd, builtin, budget, seeds);
    }
    if (*reduce) return RunReduce(g, file, params);
    if (*emb) return RunEmb(g, file);
    if (*sat) return RunSat(g, file);
    if (*kcm) return RunKcm(g, file, eps, oracle, kind);
  } catch (const ProtocolError& e) {
    std::cerr << "ProtocolError: " << e.what() << '\n';
    return kProtocolError;
  } catch (const InvariantViolation& e) {
    // Replay divergence is the plug-in's fault when it runs out of process.
    std::cerr << "InvariantViolation: " << e.what() << '\n';
    return decider_cmd.empty() ? kInputError : kProtocolError;
  } catch (const EmptyTargetFamily& e) {
    std::cerr << "EmptyTargetFamily: " << e.what() << '\n';
    return kNegative;
  } catch (const TrivialParams& e) {
    std::cerr << "TrivialParams: " << e.what() << '\n';
    return kNegative;
  } catch (const Infeasible& e) {
    std::cerr << "Infeasible: " << e.what() << '\n';
    return kNegative;
  } catch (const GroundSetTooLarge& e) {
    std::cerr << "GroundSetTooLarge: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
