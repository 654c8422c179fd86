// Copyright 2026 The hypcap authors
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

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hypcap/config.hpp"
#include "hypcap/report.hpp"
#include "hypcap/scenarios.hpp"

namespace {

int cmd_run(const std::string& config_path, int depth, double p, long long seed,
            const std::string& out) {
  hypcap::KvConfig cfg = hypcap::KvConfig::parse_file(config_path);
  std::string name = cfg.require_str("scenario");
  hypcap::ScenarioOptions opt;
  opt.depth_override = depth > 0 ? depth : cfg.get_int("depth", -1);
  opt.p_override = p > 0 ? p : cfg.get_double("p", 0.0);
  opt.seed = seed >= 0 ? static_cast<std::uint64_t>(seed)
                       : cfg.get_u64("seed", 12345);
  opt.out_dir = !out.empty() ? out : cfg.get_str("out", "out");

  hypcap::ScenarioResult res = hypcap::run_scenario(name, opt);
  for (const auto& m : res.messages) std::cout << m << "\n";
  std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name << "\n";
  std::cout << "summary: " << res.csv_path << "\n";
  std::cout << "detail:  " << res.json_path << "\n";
  return res.pass ? 0 : 1;
}

int cmd_compare(const std::string& a, const std::string& b, double slack) {
  auto ra = hypcap::read_summary_csv(a);
  auto rb = hypcap::read_summary_csv(b);
  hypcap::CompareReport rep = hypcap::compare_summaries(ra, rb, slack);
  std::cout << hypcap::render_compare(rep);
  return rep.flagged_count == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic filling capacity experiments"};
  app.require_subcommand(1);

  std::string config_path;
  int depth = -1;
  double p = 0.0;
  long long seed = -1;
  std::string out;
  CLI::App* run = app.add_subcommand("run", "run a named scenario from a config");
  run->add_option("config", config_path, "key=value config file")->required();
  run->add_option("--depth", depth, "override the scenario depth");
  run->add_option("--p", p, "override the scenario exponent");
  run->add_option("--seed", seed, "override the random seed");
  run->add_option("--out", out, "override the output directory");

  std::string cmp_a, cmp_b;
  double slack = 1.5;
  CLI::App* cmp = app.add_subcommand("compare", "compare two summary CSVs");
  cmp->add_option("a", cmp_a, "first summary csv")->required();
  cmp->add_option("b", cmp_b, "second summary csv")->required();
  cmp->add_option("--slack", slack, "allowed value ratio band")
      ->default_val(1.5);

  CLI::App* list = app.add_subcommand("list-scenarios", "print scenario names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, depth, p, seed, out);
    if (cmp->parsed()) return cmd_compare(cmp_a, cmp_b, slack);
    if (list->parsed()) {
      for (const auto& n : hypcap::scenario_names()) std::cout << n << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
