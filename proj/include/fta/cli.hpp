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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fta/format.hpp"

namespace fta {

struct RunOptions {
  std::optional<unsigned> height_bound;
  std::size_t budget = 1'000'000;
  /// Name given to recognizers printed by transform-like commands.
  std::string result_name = "result";
};

struct CommandResult {
  int exit_code = 0;  // 0 yes/ok, 1 no, 2 error
  std::string out;
  std::string err;
};

/// Runs one command (`args[0]` plus its operands) against a loaded workspace.
/// Never throws; errors become exit code 2 with a message in `err`.
CommandResult run_command(const std::vector<std::string>& args, const Workspace& ws, const RunOptions& opts = {});

}  // namespace fta
