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

#include "fta/error.hpp"

namespace fta {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MissingBound: return "MissingBound";
    case Errc::NotALattice: return "NotALattice";
    case Errc::CycleInOrder: return "CycleInOrder";
    case Errc::TrivialLattice: return "TrivialLattice";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::ForeignElement: return "ForeignElement";
    case Errc::InvalidTree: return "InvalidTree";
    case Errc::InvalidAutomaton: return "InvalidAutomaton";
    case Errc::AlphabetMismatch: return "AlphabetMismatch";
    case Errc::LatticeMismatch: return "LatticeMismatch";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotAlphabetic: return "NotAlphabetic";
    case Errc::NotInjective: return "NotInjective";
    case Errc::NotMeetMorphism: return "NotMeetMorphism";
    case Errc::NonDistributiveLattice: return "NonDistributiveLattice";
    case Errc::ZeroNotIrreducible: return "ZeroNotIrreducible";
    case Errc::TreeTooShort: return "TreeTooShort";
    case Errc::NotAChain: return "NotAChain";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownCommand: return "UnknownCommand";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace fta
