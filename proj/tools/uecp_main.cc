// Copyright 2026 The UECP Authors
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

// Command-line front end:
//
//   uecp generate  --users 60 --contents 20 --slots 24 --seed 7 -o inst.json
//   uecp generate  --partition 1,2,3 -o part.json
//   uecp solve     inst.json --algorithm cga --output result.json
//   uecp sweep     --param lambda --grid 0,0.5,1,2 --seeds 20 --output s.csv
//   uecp export-lp inst.json --output inst.lp
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 solver failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uecp/error.h"
#include "uecp/experiment.h"
#include "uecp/instance_io.h"
#include "uecp/instgen.h"
#include "uecp/lp_format.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitSolver = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> values;
  for (const std::string& s : SplitCommas(text)) {
    try {
      size_t used = 0;
      values.push_back(std::stoi(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("not an integer: " + s);
    }
  }
  if (values.empty()) throw UsageError("empty list");
  return values;
}

std::vector<double> ParseGrid(const std::string& text) {
  std::vector<double> values;
  for (const std::string& s : SplitCommas(text)) {
    try {
      size_t used = 0;
      values.push_back(std::stod(s, &used));
      if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw UsageError("not a number: " + s);
    }
  }
  if (values.empty()) throw UsageError("--grid must not be empty");
  return values;
}

// "20" means seeds 1..20, "3-7" a range, "1,4,9" a list.
std::vector<uint64_t> ParseSeeds(const std::string& text) {
  std::vector<uint64_t> seeds;
  const auto dash = text.find('-');
  if (text.find(',') == std::string::npos && dash != std::string::npos) {
    const auto lo = ParseIntList(text.substr(0, dash));
    const auto hi = ParseIntList(text.substr(dash + 1));
    for (int s = lo.front(); s <= hi.front(); ++s) seeds.push_back(s);
  } else if (text.find(',') == std::string::npos) {
    const int count = ParseIntList(text).front();
    for (int s = 1; s <= count; ++s) seeds.push_back(s);
  } else {
    for (int s : ParseIntList(text)) seeds.push_back(s);
  }
  if (seeds.empty()) throw UsageError("--seeds selects no seed");
  return seeds;
}

struct GenFlags {
  uecp::GenConfig cfg;
  std::string config_path;

  void Register(CLI::App* cmd) {
    cmd->add_option("--users", cfg.num_users, "number of users U");
    cmd->add_option("--contents", cfg.num_contents, "number of contents F");
    cmd->add_option("--slots", cfg.num_slots, "number of slots T");
    cmd->add_option("--gamma", cfg.zipf_gamma, "ZipF exponent");
    cmd->add_option("--rho", cfg.capacity_ratio, "capacity / total size");
    cmd->add_option("--lambda", cfg.aoi_weight, "AoI weight");
    cmd->add_option("--cs", cfg.cost_server, "server cost per data unit");
    cmd->add_option("--cb", cfg.cost_cache, "cache cost per data unit");
    cmd->add_option("--config", config_path, "generator config JSON");
  }

  // Flags given on the command line override the config file.
  uecp::GenConfig Resolve(CLI::App* cmd) const {
    if (config_path.empty()) return cfg;
    std::ifstream in(config_path);
    if (!in) throw uecp::Error(uecp::ErrorKind::kInvalidArgument,
                               "cannot open " + config_path);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw uecp::Error(uecp::ErrorKind::kInvalidArgument, e.what());
    }
    uecp::GenConfig merged = uecp::GenConfigFromJson(doc);
    auto given = [cmd](const char* flag) { return cmd->count(flag) > 0; };
    if (given("--users")) merged.num_users = cfg.num_users;
    if (given("--contents")) merged.num_contents = cfg.num_contents;
    if (given("--slots")) merged.num_slots = cfg.num_slots;
    if (given("--gamma")) merged.zipf_gamma = cfg.zipf_gamma;
    if (given("--rho")) merged.capacity_ratio = cfg.capacity_ratio;
    if (given("--lambda")) merged.aoi_weight = cfg.aoi_weight;
    if (given("--cs")) merged.cost_server = cfg.cost_server;
    if (given("--cb")) merged.cost_cache = cfg.cost_cache;
    if (given("--seed")) merged.seed = cfg.seed;
    return merged;
  }
};

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw uecp::Error(uecp::ErrorKind::kInvalidArgument,
                      "cannot write " + path);
  }
  out << text;
}

int ExitCodeFor(const uecp::Error& e) {
  switch (e.kind()) {
    case uecp::ErrorKind::kInvalidArgument:
    case uecp::ErrorKind::kDimensionMismatch:
    case uecp::ErrorKind::kInvalidColumn:
      return kExitData;
    case uecp::ErrorKind::kInfeasible:
    case uecp::ErrorKind::kSizeLimit:
    case uecp::ErrorKind::kNumerical:
      return kExitSolver;
  }
  return kExitSolver;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cache placement scheduling with age-of-information costs"};
  app.require_subcommand(1);

  // generate
  CLI::App* generate = app.add_subcommand("generate", "write an instance");
  GenFlags gen_flags;
  gen_flags.Register(generate);
  generate->add_option("--seed", gen_flags.cfg.seed, "RNG seed");
  std::string partition;
  generate->add_option("--partition", partition,
                       "comma-separated integers; emit the reduction instance");
  std::string generate_out;
  generate->add_option("-o,--output", generate_out, "instance JSON path")
      ->required();

  // solve
  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  std::string solve_in;
  solve->add_option("instance", solve_in, "instance JSON")->required();
  std::string algorithm_name = "cga";
  solve->add_option("--algorithm", algorithm_name, "cga | pba | rba | exact");
  uint64_t solve_seed = 1;
  solve->add_option("--seed", solve_seed, "seed for rba");
  std::string solve_out;
  solve->add_option("-o,--output", solve_out, "result JSON path");

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  GenFlags sweep_flags;
  sweep_flags.Register(sweep);
  std::string param_name, grid_text, seeds_text = "20";
  sweep->add_option("--param", param_name, "U | F | lambda")->required();
  sweep->add_option("--grid", grid_text, "comma-separated values")->required();
  sweep->add_option("--seeds", seeds_text, "N (1..N), A-B, or a list");
  std::string sweep_out;
  sweep->add_option("-o,--output", sweep_out, "CSV path (default stdout)");

  // export-lp
  CLI::App* export_lp =
      app.add_subcommand("export-lp", "write the integer program as LP text");
  std::string export_in, export_out;
  export_lp->add_option("instance", export_in, "instance JSON")->required();
  export_lp->add_option("-o,--output", export_out, "LP file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      uecp::Instance inst;
      if (!partition.empty()) {
        const std::vector<int> numbers = ParseIntList(partition);
        inst = uecp::ReducePartition(numbers).instance;
      } else {
        inst = uecp::Generate(gen_flags.Resolve(generate));
      }
      uecp::WriteJsonFile(generate_out, uecp::ToJson(inst));
      std::cout << "F=" << inst.num_contents() << " T=" << inst.num_slots
                << " S=" << inst.capacity
                << " total_demand=" << inst.total_requests() << '\n';
    } else if (*solve) {
      const auto algorithm = uecp::ParseAlgorithm(algorithm_name);
      if (!algorithm) throw UsageError("unknown algorithm " + algorithm_name);
      const uecp::Instance inst = uecp::ReadInstanceFile(solve_in);
      const uecp::RunReport report =
          uecp::RunAlgorithm(inst, *algorithm, solve_seed);
      std::cout << uecp::ToJson(report, false).dump(2) << '\n';
      if (!solve_out.empty()) {
        uecp::WriteJsonFile(solve_out, uecp::ToJson(report, true));
      }
    } else if (*sweep) {
      uecp::SweepSpec spec;
      const auto param = uecp::ParseSweepParam(param_name);
      if (!param) throw UsageError("unknown sweep parameter " + param_name);
      spec.param = *param;
      spec.grid = ParseGrid(grid_text);
      spec.seeds = ParseSeeds(seeds_text);
      spec.base = sweep_flags.Resolve(sweep);
      std::ostringstream csv;
      uecp::WriteSweepCsv(uecp::RunSweep(spec), csv);
      if (sweep_out.empty()) {
        std::cout << csv.str();
      } else {
        WriteText(sweep_out, csv.str());
      }
    } else if (*export_lp) {
      const uecp::Instance inst = uecp::ReadInstanceFile(export_in);
      std::ostringstream lp;
      uecp::WriteInstanceIlp(inst, lp);
      WriteText(export_out, lp.str());
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const uecp::Error& e) {
    std::cerr << uecp::ErrorKindName(e.kind()) << ": " << e.what() << '\n';
    return ExitCodeFor(e);
  }
  return 0;
}
