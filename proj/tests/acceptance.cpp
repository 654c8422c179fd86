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

// Runs the numbered end-to-end checks, one scenario per criterion. With
// --criterion N only that one runs; otherwise all of them run in order.
// Every criterion prints exactly one [PASS]/[FAIL] line.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hypcap/core.hpp"
#include "hypcap/scenarios.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> names = hypcap::scenario_names();
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--verbose") {
      verbose = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N] [--verbose]\n");
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(names.size())) {
    std::fprintf(stderr, "criterion out of range: %d (have 1..%zu)\n", only, names.size());
    return 2;
  }

  const char* base = std::getenv("ACCEPTANCE_OUT");
  const std::string out_base = base && *base ? base : "acceptance-out";

  int failed = 0;
  for (int crit = 1; crit <= static_cast<int>(names.size()); ++crit) {
    if (only != 0 && crit != only) continue;
    const std::string& name = names[crit - 1];
    hypcap::ScenarioOptions opt;
    opt.out_dir = out_base + "/criterion-" + std::to_string(crit);
    bool pass = false;
    std::string note;
    try {
      const hypcap::ScenarioResult res = hypcap::run_scenario(name, opt);
      pass = res.pass;
      if (verbose || !pass) {
        for (const auto& m : res.messages) std::printf("    %s\n", m.c_str());
      }
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    std::printf("[%s] criterion %d: %s%s\n", pass ? "PASS" : "FAIL", crit, name.c_str(),
                note.c_str());
    std::fflush(stdout);
    if (!pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
