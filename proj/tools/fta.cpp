// Copyright 2026 The fta Authors
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

// fta: evaluate, transform and decide fuzzy tree recognizers from workspace files.
//
//   fta -f fixtures.fta eval F64 "f(x,x)"
//   fta -f fixtures.fta decide equal F64 F64

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fta/cli.hpp"
#include "fta/error.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy top-down tree recognizers"};
  std::vector<std::string> files;
  std::vector<std::string> command;
  fta::RunOptions opts;
  unsigned height_bound = 0;
  bool dump = false;

  app.add_option("-f,--file", files, "workspace file (repeatable)")
      ->required()
      ->allow_extra_args(false)
      ->check(CLI::ExistingFile);
  auto* hb = app.add_option("--height-bound", height_bound, "enumeration depth for bounded commands");
  app.add_option("--budget", opts.budget, "guard on the number of enumerated objects");
  app.add_option("--name", opts.result_name, "name of printed result recognizers");
  app.add_flag("--dump", dump, "print the loaded workspace and exit");
  app.add_option("command", command, "command and operands");
  app.positionals_at_end(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (hb->count()) opts.height_bound = height_bound;

  fta::Workspace ws;
  try {
    ws = fta::load(files);
  } catch (const fta::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (dump) {
    std::cout << fta::serialize(ws);
    return 0;
  }
  const auto res = fta::run_command(command, ws, opts);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
