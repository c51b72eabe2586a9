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

#include "fta/automata.hpp"

#include <algorithm>
#include <map>

#include "fta/error.hpp"

namespace fta {

StateSet make_state_set(std::vector<State> states) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  return states;
}

std::string set_name(std::span<const std::string> names, const StateSet& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ',';
    s += names[h[i]];
  }
  return s + "]";
}

std::string tuple_name(std::span<const std::string> parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + ")";
}

namespace {

void check_names(const std::vector<std::string>& names) {
  if (names.empty()) throw Error(Errc::InvalidAutomaton, "an algebra needs at least one state");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw Error(Errc::InvalidAutomaton, "duplicate state '" + n + "'");
}

void check_tuple(const RankedAlphabet& sigma, SymbolId f, const StateTuple& tuple, std::size_t n) {
  if (tuple.size() != sigma.arity(f)) {
    throw Error(Errc::InvalidAutomaton, "transition of '" + sigma.symbol_name(f) + "' has " +
                                            std::to_string(tuple.size()) + " targets, expected " +
                                            std::to_string(sigma.arity(f)));
  }
  for (State b : tuple)
    if (b >= n) throw Error(Errc::InvalidAutomaton, "transition target out of range");
}

std::optional<State> find_name(const std::vector<std::string>& names, std::string_view name) {
  for (State a = 0; a < names.size(); ++a)
    if (names[a] == name) return a;
  return std::nullopt;
}

}  // namespace

DtAlgebra::DtAlgebra(AlphabetPtr alphabet, std::vector<std::string> state_names,
                     std::vector<std::vector<StateTuple>> ops)
    : alphabet_(std::move(alphabet)), names_(std::move(state_names)), ops_(std::move(ops)) {
  check_names(names_);
  if (ops_.size() != alphabet_->symbol_count()) {
    throw Error(Errc::InvalidAutomaton, "transition table must cover every symbol");
  }
  for (SymbolId f = 0; f < ops_.size(); ++f) {
    if (ops_[f].size() != names_.size()) {
      throw Error(Errc::InvalidAutomaton,
                  "transitions of '" + alphabet_->symbol_name(f) + "' are not defined for every state");
    }
    for (const auto& tuple : ops_[f]) check_tuple(*alphabet_, f, tuple, names_.size());
  }
}

std::optional<State> DtAlgebra::find_state(std::string_view name) const { return find_name(names_, name); }

NdtAlgebra::NdtAlgebra(AlphabetPtr alphabet, std::vector<std::string> state_names,
                       std::vector<std::vector<std::vector<StateTuple>>> ops)
    : alphabet_(std::move(alphabet)), names_(std::move(state_names)), ops_(std::move(ops)) {
  check_names(names_);
  if (ops_.size() != alphabet_->symbol_count()) {
    throw Error(Errc::InvalidAutomaton, "transition table must cover every symbol");
  }
  for (SymbolId f = 0; f < ops_.size(); ++f) {
    if (ops_[f].size() != names_.size()) {
      throw Error(Errc::InvalidAutomaton,
                  "transitions of '" + alphabet_->symbol_name(f) + "' are not defined for every state");
    }
    for (auto& tuples : ops_[f]) {
      for (const auto& tuple : tuples) check_tuple(*alphabet_, f, tuple, names_.size());
      std::sort(tuples.begin(), tuples.end());
      tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    }
  }
}

std::optional<State> NdtAlgebra::find_state(std::string_view name) const { return find_name(names_, name); }

NdtAlgebra NdtAlgebra::from_dt(const DtAlgebra& a) {
  std::vector<std::vector<std::vector<StateTuple>>> ops(a.ops().size());
  for (SymbolId f = 0; f < ops.size(); ++f)
    for (const auto& tuple : a.ops()[f]) ops[f].push_back({tuple});
  return NdtAlgebra(a.alphabet(), a.state_names(), std::move(ops));
}

Tree RunTree::erase() const {
  Tree t{kind, label, {}};
  for (const auto& k : kids) t.kids.push_back(k.erase());
  return t;
}

RunTree run(const DtAlgebra& a, const Tree& t, State start) {
  RunTree r{t.kind, t.label, start, {}};
  if (t.is_node()) {
    const auto& next = a.op(t.label, start);
    r.kids.reserve(t.kids.size());
    for (std::size_t i = 0; i < t.kids.size(); ++i) r.kids.push_back(run(a, t.kids[i], next[i]));
  }
  return r;
}

namespace {

void collect_leaf_run(const DtAlgebra& a, const Tree& t, State s, std::set<std::pair<LeafId, State>>& out) {
  if (t.is_leaf()) {
    out.emplace(t.label, s);
    return;
  }
  if (!t.is_node()) return;
  const auto& next = a.op(t.label, s);
  for (std::size_t i = 0; i < t.kids.size(); ++i) collect_leaf_run(a, t.kids[i], next[i], out);
}

}  // namespace

std::set<std::pair<LeafId, State>> leaf_run(const DtAlgebra& a, const Tree& t, State start) {
  std::set<std::pair<LeafId, State>> out;
  collect_leaf_run(a, t, start, out);
  return out;
}

State path_state(const DtAlgebra& a, State start, std::span<const Letter> word) {
  State s = start;
  for (const auto& l : word) s = a.op(l.symbol, s).at(l.index - 1);
  return s;
}

StateSet ndt_path_states(const NdtAlgebra& a, const StateSet& h, std::span<const Letter> word) {
  StateSet cur = h;
  for (const auto& l : word) {
    std::vector<State> next;
    for (State s : cur)
      for (const auto& tuple : a.op(l.symbol, s)) next.push_back(tuple.at(l.index - 1));
    cur = make_state_set(std::move(next));
  }
  return cur;
}

std::optional<State> SubsetAlgebra::find(const StateSet& h) const {
  auto it = std::find(subsets.begin(), subsets.end(), h);
  if (it == subsets.end()) return std::nullopt;
  return static_cast<State>(it - subsets.begin());
}

namespace {

StateSet subset_successor(const NdtAlgebra& a, const StateSet& h, SymbolId f, unsigned i) {
  std::vector<State> out;
  for (State s : h)
    for (const auto& tuple : a.op(f, s)) out.push_back(tuple[i]);
  return make_state_set(std::move(out));
}

SubsetAlgebra build_subset_algebra(const NdtAlgebra& a, std::vector<StateSet> seeds) {
  const auto& sigma = *a.alphabet();
  std::vector<StateSet> subsets;
  std::map<StateSet, State> index;
  auto intern = [&](const StateSet& h) {
    auto [it, fresh] = index.emplace(h, static_cast<State>(subsets.size()));
    if (fresh) subsets.push_back(h);
    return it->second;
  };
  for (const auto& h : seeds) intern(h);
  std::vector<std::vector<StateTuple>> ops(sigma.symbol_count());
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    for (SymbolId f = 0; f < sigma.symbol_count(); ++f) {
      StateTuple tuple;
      for (unsigned i = 0; i < sigma.arity(f); ++i) {
        StateSet next = subset_successor(a, subsets[k], f, i);
        tuple.push_back(intern(next));
      }
      ops[f].push_back(std::move(tuple));
    }
  }
  std::vector<std::string> names;
  names.reserve(subsets.size());
  for (const auto& h : subsets) names.push_back(set_name(a.state_names(), h));
  return SubsetAlgebra{DtAlgebra(a.alphabet(), std::move(names), std::move(ops)), std::move(subsets), 0};
}

}  // namespace

SubsetAlgebra subset_algebra(const NdtAlgebra& a, const StateSet& start) {
  for (State s : start)
    if (s >= a.state_count()) throw Error(Errc::InvalidAutomaton, "start set names an unknown state");
  return build_subset_algebra(a, {make_state_set(start)});
}

SubsetAlgebra full_subset_algebra(const NdtAlgebra& a) {
  const std::size_t n = a.state_count();
  if (n > 12) throw Error(Errc::InvalidArgument, "full subset algebra is limited to 12 states");
  std::vector<StateSet> all;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    StateSet h;
    for (State s = 0; s < n; ++s)
      if (mask & (1u << s)) h.push_back(s);
    all.push_back(std::move(h));
  }
  return build_subset_algebra(a, std::move(all));
}

namespace {

void check_final(const std::vector<std::vector<bool>>& final, const RankedAlphabet& sigma, std::size_t n) {
  if (final.size() != sigma.leaf_count()) {
    throw Error(Errc::InvalidAutomaton, "final assignment must cover every leaf");
  }
  for (const auto& row : final)
    if (row.size() != n) throw Error(Errc::InvalidAutomaton, "final assignment must cover every state");
}

}  // namespace

void DtRecognizer::validate() const {
  if (initial >= algebra.state_count()) throw Error(Errc::InvalidAutomaton, "initial state out of range");
  check_final(final, *algebra.alphabet(), algebra.state_count());
}

void NdtRecognizer::validate() const {
  for (State s : initial)
    if (s >= algebra.state_count()) throw Error(Errc::InvalidAutomaton, "initial state out of range");
  if (!std::is_sorted(initial.begin(), initial.end()) ||
      std::adjacent_find(initial.begin(), initial.end()) != initial.end()) {
    throw Error(Errc::InvalidAutomaton, "initial set must be sorted and duplicate-free");
  }
  check_final(final, *algebra.alphabet(), algebra.state_count());
}

bool crisp_dt_accepts(const DtRecognizer& d, const Tree& t) {
  validate_tree(t, *d.alphabet());
  for (const auto& [x, s] : leaf_run(d.algebra, t, d.initial))
    if (!d.final[x][s]) return false;
  return true;
}

bool crisp_dt_accepts_by_paths(const DtRecognizer& d, const Tree& t) {
  validate_tree(t, *d.alphabet());
  for (const auto& r : delta(t))
    if (!d.final[r.leaf][path_state(d.algebra, d.initial, r.word)]) return false;
  return true;
}

namespace {

std::vector<bool> accepting_states(const NdtRecognizer& n, const Tree& t) {
  const std::size_t count = n.algebra.state_count();
  if (t.is_leaf()) return n.final[t.label];
  std::vector<std::vector<bool>> kids;
  kids.reserve(t.kids.size());
  for (const auto& k : t.kids) kids.push_back(accepting_states(n, k));
  std::vector<bool> out(count, false);
  for (State a = 0; a < count; ++a) {
    for (const auto& tuple : n.algebra.op(t.label, a)) {
      bool ok = true;
      for (std::size_t i = 0; i < tuple.size() && ok; ++i) ok = kids[i][tuple[i]];
      if (ok) {
        out[a] = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

bool crisp_ndt_accepts(const NdtRecognizer& n, const Tree& t) {
  validate_tree(t, *n.alphabet());
  const auto acc = accepting_states(n, t);
  return std::any_of(n.initial.begin(), n.initial.end(), [&](State s) { return acc[s]; });
}

bool crisp_ndt_nonempty(const NdtRecognizer& n) {
  const std::size_t count = n.algebra.state_count();
  const auto& sigma = *n.alphabet();
  std::vector<bool> productive(count, false);
  for (const auto& row : n.final)
    for (State a = 0; a < count; ++a)
      if (row[a]) productive[a] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (State a = 0; a < count; ++a) {
      if (productive[a]) continue;
      for (SymbolId f = 0; f < sigma.symbol_count() && !productive[a]; ++f) {
        for (const auto& tuple : n.algebra.op(f, a)) {
          if (std::all_of(tuple.begin(), tuple.end(), [&](State b) { return productive[b]; })) {
            productive[a] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
  return std::any_of(n.initial.begin(), n.initial.end(), [&](State s) { return productive[s]; });
}

}  // namespace fta
