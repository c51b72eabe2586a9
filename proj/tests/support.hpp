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

// Shared fixtures and seeded generators for the test binaries.

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fta/fuzzy_rec.hpp"
#include "fta/error.hpp"
#include "fta/format.hpp"
#include "fta/lattice.hpp"
#include "fta/terms.hpp"

namespace fta::test {

inline constexpr std::uint64_t kSeed = 20260415;

/// The code of the Error thrown by fn, if any.
template <class Fn>
std::optional<Errc> error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

const Workspace& fixtures();

LatticePtr lattice(const std::string& name);
AlphabetPtr alphabet(const std::string& name);
const LDtRecognizer& ldt(const std::string& name);
const LNdtRecognizer& lndt(const std::string& name);
Elem el(const std::string& lattice_name, const std::string& element);
Tree tree(const std::string& text, const std::string& alphabet_name);
PathWord path(const std::string& text, const std::string& alphabet_name);

/// F64 with the final degrees c and d exchanged.
LDtRecognizer f64_swapped();

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  Elem element(const Lattice& l) { return l.elements()[below(l.size())]; }

  LDtRecognizer ldt(const LatticePtr& l, const AlphabetPtr& sigma, std::size_t max_states = 4);
  LNdtRecognizer lndt(const LatticePtr& l, const AlphabetPtr& sigma, std::size_t max_states = 4,
                      std::size_t max_tuples = 3);
  GeneralLNdtRecognizer general(const LatticePtr& l, const AlphabetPtr& sigma, std::size_t max_states = 3);
  Tree tree(const RankedAlphabet& sigma, unsigned max_height);
  /// A tree whose leftmost branch has exactly `h` nodes above its leaf.
  Tree tall_tree(const RankedAlphabet& sigma, unsigned h);
  Context context(const RankedAlphabet& sigma, unsigned max_depth);
  PathWord path(const RankedAlphabet& sigma, unsigned max_length);

 private:
  std::mt19937_64 rng_;
};

/// The usual random population: B2, M2 and the 4-chain over S3 = {f/2, g/1; x, y}.
std::vector<LatticePtr> population_lattices();

}  // namespace fta::test
