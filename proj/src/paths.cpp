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

#include "fta/paths.hpp"

#include <algorithm>

#include "fta/error.hpp"

namespace fta {

AlphabetPtr unary_alphabet(const RankedAlphabet& sigma) {
  std::vector<RankedAlphabet::Symbol> symbols;
  for (const auto& l : path_alphabet(sigma)) symbols.push_back({to_string(l, sigma), 1});
  return std::make_shared<const RankedAlphabet>(sigma.label() + "^u", std::move(symbols), sigma.leaves());
}

LDtRecognizer to_unary(const LDtRecognizer& f) {
  const auto& sigma = *f.alphabet();
  auto gamma = unary_alphabet(sigma);
  std::vector<std::vector<StateTuple>> ops;
  for (const auto& l : path_alphabet(sigma)) {
    std::vector<StateTuple> row;
    for (State a = 0; a < f.state_count(); ++a) row.push_back({f.algebra.op(l.symbol, a)[l.index - 1]});
    ops.push_back(std::move(row));
  }
  return LDtRecognizer{f.lattice, DtAlgebra(gamma, f.algebra.state_names(), std::move(ops)), f.initial, f.omega};
}

LDtRecognizer from_unary(const LDtRecognizer& g, const AlphabetPtr& sigma) {
  const auto gamma = unary_alphabet(*sigma);
  if (!(*g.alphabet() == *gamma)) {
    throw Error(Errc::AlphabetMismatch,
                "recognizer alphabet '" + g.alphabet()->label() + "' is not the path alphabet of '" +
                    sigma->label() + "'");
  }
  const auto letters = path_alphabet(*sigma);
  std::vector<std::vector<StateTuple>> ops(sigma->symbol_count(), std::vector<StateTuple>(g.state_count()));
  for (SymbolId k = 0; k < letters.size(); ++k)
    for (State b = 0; b < g.state_count(); ++b) ops[letters[k].symbol][b].push_back(g.algebra.op(k, b)[0]);
  return LDtRecognizer{g.lattice, DtAlgebra(sigma, g.algebra.state_names(), std::move(ops)), g.initial, g.omega};
}

Tree path_to_unary_tree(const PathWord& r, const RankedAlphabet& sigma) {
  const auto letters = path_alphabet(sigma);
  Tree t = Tree::leaf(r.leaf);
  for (auto it = r.word.rbegin(); it != r.word.rend(); ++it) {
    const auto k = static_cast<SymbolId>(std::find(letters.begin(), letters.end(), *it) - letters.begin());
    if (k == letters.size()) throw Error(Errc::InvalidTree, "path letter outside the path alphabet");
    t = Tree::node(k, {std::move(t)});
  }
  return t;
}

namespace {

void check_path(const PathWord& r, const RankedAlphabet& sigma) {
  if (r.leaf >= sigma.leaf_count()) throw Error(Errc::InvalidTree, "path ends in an unknown leaf");
  for (const auto& l : r.word)
    if (l.symbol >= sigma.symbol_count() || l.index < 1 || l.index > sigma.arity(l.symbol)) {
      throw Error(Errc::InvalidTree, "path letter outside the path alphabet");
    }
}

}  // namespace

Elem lambda_dt(const LDtRecognizer& f, const PathWord& r) {
  check_path(r, *f.alphabet());
  return f.omega[r.leaf][path_state(f.algebra, f.initial, r.word)];
}

Elem eval_tdei(const LDtRecognizer& f, const Tree& t) {
  validate_tree(t, *f.alphabet());
  Elem v = f.lattice->top();
  for (const auto& r : delta(t)) v = f.lattice->meet(v, lambda_dt(f, r));
  return v;
}

}  // namespace fta
