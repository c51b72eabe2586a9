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

#include <stdexcept>
#include <string>
#include <string_view>

namespace fta {

enum class Errc {
  MissingBound,
  NotALattice,
  CycleInOrder,
  TrivialLattice,
  EmptySequence,
  ForeignElement,
  InvalidTree,
  InvalidAutomaton,
  AlphabetMismatch,
  LatticeMismatch,
  ArityMismatch,
  NotAlphabetic,
  NotInjective,
  NotMeetMorphism,
  NonDistributiveLattice,
  ZeroNotIrreducible,
  TreeTooShort,
  NotAChain,
  NotNormalized,
  BudgetExceeded,
  ParseError,
  ValidationError,
  UnknownCommand,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fta
