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

#include "support.hpp"

#include <stdexcept>

namespace fta::test {

const Workspace& fixtures() {
  static const Workspace ws = [] {
    const std::vector<std::string> files{std::string(FTA_TEST_DATA) + "/fixtures.fta"};
    return load(files);
  }();
  return ws;
}

LatticePtr lattice(const std::string& name) { return fixtures().lattices.at(name); }
AlphabetPtr alphabet(const std::string& name) { return fixtures().alphabets.at(name); }
const LDtRecognizer& ldt(const std::string& name) { return fixtures().ldt.at(name); }
const LNdtRecognizer& lndt(const std::string& name) { return fixtures().lndt.at(name); }
Elem el(const std::string& l, const std::string& e) { return lattice(l)->at(e); }
Tree tree(const std::string& text, const std::string& a) { return parse_tree(text, *alphabet(a)); }
PathWord path(const std::string& text, const std::string& a) { return parse_path(text, *alphabet(a)); }

LDtRecognizer f64_swapped() {
  LDtRecognizer g = ldt("F64");
  const Lattice& l = *g.lattice;
  for (auto& row : g.omega)
    for (auto& v : row) {
      if (v == l.at("c")) {
        v = l.at("d");
      } else if (v == l.at("d")) {
        v = l.at("c");
      }
    }
  return g;
}

std::vector<LatticePtr> population_lattices() { return {lattice("B2"), lattice("M2"), lattice("C4")}; }

LDtRecognizer Gen::ldt(const LatticePtr& l, const AlphabetPtr& sigma, std::size_t max_states) {
  const std::size_t n = 1 + below(max_states);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  std::vector<std::vector<StateTuple>> ops(sigma->symbol_count());
  for (SymbolId f = 0; f < sigma->symbol_count(); ++f)
    for (std::size_t a = 0; a < n; ++a) {
      StateTuple t;
      for (unsigned i = 0; i < sigma->arity(f); ++i) t.push_back(static_cast<State>(below(n)));
      ops[f].push_back(std::move(t));
    }
  FinalTable omega(sigma->leaf_count());
  for (auto& row : omega)
    for (std::size_t a = 0; a < n; ++a) row.push_back(element(*l));
  return LDtRecognizer{l, DtAlgebra(sigma, names, std::move(ops)), static_cast<State>(below(n)), std::move(omega)};
}

LNdtRecognizer Gen::lndt(const LatticePtr& l, const AlphabetPtr& sigma, std::size_t max_states,
                         std::size_t max_tuples) {
  const std::size_t n = 1 + below(max_states);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  std::vector<std::vector<std::vector<StateTuple>>> ops(sigma->symbol_count());
  for (SymbolId f = 0; f < sigma->symbol_count(); ++f)
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<StateTuple> tuples;
      const std::size_t k = below(max_tuples + 1);
      for (std::size_t j = 0; j < k; ++j) {
        StateTuple t;
        for (unsigned i = 0; i < sigma->arity(f); ++i) t.push_back(static_cast<State>(below(n)));
        tuples.push_back(std::move(t));
      }
      ops[f].push_back(std::move(tuples));
    }
  std::vector<State> initial;
  for (std::size_t a = 0; a < n; ++a)
    if (chance(0.5)) initial.push_back(static_cast<State>(a));
  if (initial.empty() && chance(0.8)) initial.push_back(static_cast<State>(below(n)));
  FinalTable omega(sigma->leaf_count());
  for (auto& row : omega)
    for (std::size_t a = 0; a < n; ++a) row.push_back(element(*l));
  return LNdtRecognizer{l, NdtAlgebra(sigma, names, std::move(ops)), make_state_set(initial), std::move(omega)};
}

GeneralLNdtRecognizer Gen::general(const LatticePtr& l, const AlphabetPtr& sigma, std::size_t max_states) {
  const std::size_t n = 1 + below(max_states);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  auto ng = GeneralLNdtRecognizer::zero(l, sigma, names);
  for (SymbolId f = 0; f < sigma->symbol_count(); ++f)
    for (std::size_t a = 0; a < n; ++a)
      for (int k = 0; k < 3; ++k) {
        StateTuple t;
        for (unsigned i = 0; i < sigma->arity(f); ++i) t.push_back(static_cast<State>(below(n)));
        ng.set_gamma(f, static_cast<State>(a), t, element(*l));
      }
  for (auto& v : ng.iota) v = element(*l);
  for (auto& row : ng.omega)
    for (auto& v : row) v = element(*l);
  return ng;
}

Tree Gen::tree(const RankedAlphabet& sigma, unsigned max_height) {
  if (max_height == 0 || chance(0.3)) return Tree::leaf(static_cast<LeafId>(below(sigma.leaf_count())));
  const auto f = static_cast<SymbolId>(below(sigma.symbol_count()));
  std::vector<Tree> kids;
  for (unsigned i = 0; i < sigma.arity(f); ++i) kids.push_back(tree(sigma, max_height - 1));
  return Tree::node(f, std::move(kids));
}

Tree Gen::tall_tree(const RankedAlphabet& sigma, unsigned h) {
  if (h == 0) return Tree::leaf(static_cast<LeafId>(below(sigma.leaf_count())));
  const auto f = static_cast<SymbolId>(below(sigma.symbol_count()));
  std::vector<Tree> kids{tall_tree(sigma, h - 1)};
  for (unsigned i = 1; i < sigma.arity(f); ++i) kids.push_back(tree(sigma, 2));
  return Tree::node(f, std::move(kids));
}

Context Gen::context(const RankedAlphabet& sigma, unsigned max_depth) {
  const unsigned depth = static_cast<unsigned>(below(max_depth + 1));
  Tree body = Tree::hole();
  for (unsigned k = 0; k < depth; ++k) {
    const auto f = static_cast<SymbolId>(below(sigma.symbol_count()));
    const unsigned m = sigma.arity(f);
    const unsigned at = static_cast<unsigned>(below(m));
    std::vector<Tree> kids;
    for (unsigned i = 0; i < m; ++i) kids.push_back(i == at ? body : tree(sigma, 1));
    body = Tree::node(f, std::move(kids));
  }
  return Context(std::move(body));
}

PathWord Gen::path(const RankedAlphabet& sigma, unsigned max_length) {
  const auto letters = path_alphabet(sigma);
  PathWord r;
  const std::size_t len = below(max_length + 1);
  for (std::size_t i = 0; i < len; ++i) r.word.push_back(letters[below(letters.size())]);
  r.leaf = static_cast<LeafId>(below(sigma.leaf_count()));
  return r;
}

}  // namespace fta::test
