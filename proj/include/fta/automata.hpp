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

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fta/terms.hpp"

namespace fta {

using State = std::uint32_t;
using StateTuple = std::vector<State>;
/// Sorted, duplicate-free.
using StateSet = std::vector<State>;

StateSet make_state_set(std::vector<State> states);

/// "[a,b]" for a set and "(a,b)" for a tuple, using the given state names.
std::string set_name(std::span<const std::string> names, const StateSet& h);
std::string tuple_name(std::span<const std::string> parts);

/// A finite deterministic top-down Sigma-algebra: f_A(a) is an m-tuple of states.
class DtAlgebra {
 public:
  /// `ops[f][a]` is the tuple f_A(a).
  DtAlgebra(AlphabetPtr alphabet, std::vector<std::string> state_names, std::vector<std::vector<StateTuple>> ops);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& state_names() const noexcept { return names_; }
  const std::string& state_name(State a) const { return names_.at(a); }
  std::optional<State> find_state(std::string_view name) const;
  const StateTuple& op(SymbolId f, State a) const { return ops_[f][a]; }
  const std::vector<std::vector<StateTuple>>& ops() const noexcept { return ops_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<std::string> names_;
  std::vector<std::vector<StateTuple>> ops_;
};

/// A finite nondeterministic top-down Sigma-algebra: f(a) is a set of m-tuples.
class NdtAlgebra {
 public:
  /// `ops[f][a]` lists the tuples of f(a); they are stored sorted and deduplicated.
  NdtAlgebra(AlphabetPtr alphabet, std::vector<std::string> state_names,
             std::vector<std::vector<std::vector<StateTuple>>> ops);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& state_names() const noexcept { return names_; }
  const std::string& state_name(State a) const { return names_.at(a); }
  std::optional<State> find_state(std::string_view name) const;
  const std::vector<StateTuple>& op(SymbolId f, State a) const { return ops_[f][a]; }
  const std::vector<std::vector<std::vector<StateTuple>>>& ops() const noexcept { return ops_; }

  static NdtAlgebra from_dt(const DtAlgebra& a);

 private:
  AlphabetPtr alphabet_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<StateTuple>>> ops_;
};

/// A tree (or context) annotated with the state reached at every node.
struct RunTree {
  Tree::Kind kind = Tree::Kind::Leaf;
  std::uint32_t label = 0;
  State state = 0;
  std::vector<RunTree> kids;

  Tree erase() const;
};

/// Works on trees and contexts alike; the hole node records the state it receives.
RunTree run(const DtAlgebra& a, const Tree& t, State start);
std::set<std::pair<LeafId, State>> leaf_run(const DtAlgebra& a, const Tree& t, State start);

State path_state(const DtAlgebra& a, State start, std::span<const Letter> word);
StateSet ndt_path_states(const NdtAlgebra& a, const StateSet& h, std::span<const Letter> word);

/// The subset algebra restricted to subsets reachable from `subsets[start]`.
struct SubsetAlgebra {
  DtAlgebra algebra;
  std::vector<StateSet> subsets;  // indexed by the state of `algebra`
  State start = 0;

  std::optional<State> find(const StateSet& h) const;
};

SubsetAlgebra subset_algebra(const NdtAlgebra& a, const StateSet& start);
/// Every subset of the state set; limited to 12 states.
SubsetAlgebra full_subset_algebra(const NdtAlgebra& a);

/// A crisp DT recognizer (A, a0, alpha); final[x][a] says whether a is in alpha(x).
struct DtRecognizer {
  DtAlgebra algebra;
  State initial = 0;
  std::vector<std::vector<bool>> final;

  void validate() const;
  const AlphabetPtr& alphabet() const noexcept { return algebra.alphabet(); }
};

struct NdtRecognizer {
  NdtAlgebra algebra;
  StateSet initial;
  std::vector<std::vector<bool>> final;

  void validate() const;
  const AlphabetPtr& alphabet() const noexcept { return algebra.alphabet(); }
};

bool crisp_dt_accepts(const DtRecognizer& d, const Tree& t);
/// Same language, decided through the paths of t.
bool crisp_dt_accepts_by_paths(const DtRecognizer& d, const Tree& t);
bool crisp_ndt_accepts(const NdtRecognizer& n, const Tree& t);
bool crisp_ndt_nonempty(const NdtRecognizer& n);

}  // namespace fta
