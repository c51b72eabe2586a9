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

#include "fta/chain.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fta/decide.hpp"
#include "fta/error.hpp"
#include "fta/paths.hpp"

namespace fta {

void require_chain(const Lattice& lattice) {
  if (!lattice.classify().is_chain) throw Error(Errc::NotAChain, "lattice '" + lattice.label() + "' is not a chain");
}

StateMaxTable max_values(const LNdtRecognizer& nf) {
  nf.validate();
  const Lattice& l = *nf.lattice;
  require_chain(l);
  const auto& sigma = *nf.alphabet();
  const std::size_t n = nf.state_count();

  StateMaxTable t;
  t.m.assign(n, l.bottom());
  t.witness.assign(n, Tree::leaf(0));
  for (State a = 0; a < n; ++a)
    for (LeafId x = 0; x < sigma.leaf_count(); ++x)
      if (x == 0 || l.less(t.m[a], nf.omega[x][a])) {
        t.m[a] = nf.omega[x][a];
        t.witness[a] = Tree::leaf(x);
      }

  // Each round reads only the previous round, so a witness built in round k
  // has height <= k and attains exactly M_k.
  const std::size_t cap = n * omega_values(l, nf.omega).size();
  while (true) {
    auto next = t;
    for (State a = 0; a < n; ++a)
      for (SymbolId f = 0; f < sigma.symbol_count(); ++f)
        for (const auto& tuple : nf.algebra.op(f, a)) {
          Elem c = l.top();
          for (State b : tuple) c = l.meet(c, t.m[b]);
          if (l.less(next.m[a], c)) {
            next.m[a] = c;
            std::vector<Tree> kids;
            for (State b : tuple) kids.push_back(t.witness[b]);
            next.witness[a] = Tree::node(f, std::move(kids));
          }
        }
    if (next.m == t.m) break;
    next.iterations = t.iterations + 1;
    t = std::move(next);
    if (t.iterations > cap) throw std::logic_error("max_values: iteration cap exceeded");
  }
  return t;
}

StateMaxTable max_values(const LDtRecognizer& f) { return max_values(dt_to_ndt(f)); }

bool is_normalized_ndt(const LNdtRecognizer& nf) {
  const auto mt = max_values(nf);
  for (const auto& per_symbol : nf.algebra.ops())
    for (const auto& tuples : per_symbol)
      for (const auto& tuple : tuples)
        for (State b : tuple)
          if (mt.m[b] != mt.m[tuple[0]]) return false;
  return true;
}

bool is_normalized_dt(const LDtRecognizer& f) { return is_normalized_ndt(dt_to_ndt(f)); }

LNdtRecognizer normalize_ndt(const LNdtRecognizer& nf) {
  const auto mt = max_values(nf);
  const Lattice& l = *nf.lattice;
  const auto& sigma = *nf.alphabet();

  std::vector<std::pair<State, Elem>> pairs;
  std::map<std::pair<State, Elem>, State> index;
  auto intern = [&](State a, Elem d) {
    auto [it, fresh] = index.emplace(std::make_pair(a, d), static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(a, d);
    return it->second;
  };
  StateSet initial;
  for (State a : nf.initial) initial.push_back(intern(a, mt.m[a]));
  // An algebra needs a state; with I empty it is unreachable.
  if (pairs.empty()) intern(0, l.bottom());

  std::vector<std::vector<std::vector<StateTuple>>> ops(sigma.symbol_count());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, d] = pairs[k];
    for (SymbolId f = 0; f < sigma.symbol_count(); ++f) {
      std::vector<StateTuple> tuples;
      for (const auto& tuple : nf.algebra.op(f, a)) {
        Elem c = l.top();
        for (State b : tuple) c = l.meet(c, mt.m[b]);
        const Elem e = l.meet(d, c);
        StateTuple out;
        for (State b : tuple) out.push_back(intern(b, e));
        tuples.push_back(std::move(out));
      }
      ops[f].push_back(std::move(tuples));
    }
  }

  std::vector<std::string> names;
  for (const auto& [a, d] : pairs) {
    const std::string parts[] = {nf.algebra.state_name(a), l.name(d)};
    names.push_back(tuple_name(parts));
  }
  FinalTable omega(sigma.leaf_count());
  for (LeafId x = 0; x < sigma.leaf_count(); ++x)
    for (const auto& [a, d] : pairs) omega[x].push_back(l.meet(nf.omega[x][a], d));
  return LNdtRecognizer{nf.lattice, NdtAlgebra(nf.alphabet(), std::move(names), std::move(ops)),
                        make_state_set(std::move(initial)), std::move(omega)};
}

LDtRecognizer ndt_to_dt(const LNdtRecognizer& nf) {
  if (nf.initial.size() != 1) throw Error(Errc::InvalidAutomaton, "initial set is not a singleton");
  std::vector<std::vector<StateTuple>> ops(nf.algebra.ops().size());
  for (SymbolId f = 0; f < ops.size(); ++f)
    for (const auto& tuples : nf.algebra.ops()[f]) {
      if (tuples.size() != 1) throw Error(Errc::InvalidAutomaton, "transition set is not a singleton");
      ops[f].push_back(tuples[0]);
    }
  return LDtRecognizer{nf.lattice, DtAlgebra(nf.alphabet(), nf.algebra.state_names(), std::move(ops)),
                       nf.initial[0], nf.omega};
}

LDtRecognizer normalize_dt(const LDtRecognizer& f) {
  const auto g = normalize_ndt(dt_to_ndt(f));
  // A deterministic input yields one tuple per state and symbol, and one initial state.
  return ndt_to_dt(g);
}

namespace {

Elem max_omega(const LNdtRecognizer& nf, LeafId x, const StateSet& h) {
  Elem v = nf.lattice->bottom();
  for (State b : h) v = nf.lattice->join(v, nf.omega[x][b]);
  return v;
}

}  // namespace

Elem lambda_ndt(const LNdtRecognizer& nf, const PathWord& r) {
  require_chain(*nf.lattice);
  if (r.leaf >= nf.alphabet()->leaf_count()) throw Error(Errc::InvalidTree, "path ends in an unknown leaf");
  return max_omega(nf, r.leaf, ndt_path_states(nf.algebra, nf.initial, r.word));
}

LDtRecognizer subset_recognizer(const LNdtRecognizer& nf) {
  nf.validate();
  require_chain(*nf.lattice);
  auto sa = subset_algebra(nf.algebra, nf.initial);
  FinalTable omega(nf.alphabet()->leaf_count());
  for (LeafId x = 0; x < omega.size(); ++x)
    for (const auto& h : sa.subsets) omega[x].push_back(max_omega(nf, x, h));
  return LDtRecognizer{nf.lattice, std::move(sa.algebra), sa.start, std::move(omega)};
}

LDtRecognizer path_closure_recognizer(const LNdtRecognizer& nf) { return subset_recognizer(normalize_ndt(nf)); }

bool is_dt_recognizable(const LNdtRecognizer& nf) {
  const auto g = normalize_ndt(nf);
  return ndt_equivalent(dt_to_ndt(subset_recognizer(g)), g);
}

namespace {

// Some tree containing the path w x; off-path children are the first leaf.
Tree any_tree_with_path(const RankedAlphabet& sigma, std::span<const Letter> w, LeafId x) {
  if (w.empty()) return Tree::leaf(x);
  std::vector<Tree> kids(sigma.arity(w[0].symbol), Tree::leaf(0));
  kids[w[0].index - 1] = any_tree_with_path(sigma, w.subspan(1), x);
  return Tree::node(w[0].symbol, std::move(kids));
}

Tree witness_from(const LNdtRecognizer& nf, const StateMaxTable& mt, State a, std::span<const Letter> w, LeafId x) {
  if (w.empty()) return Tree::leaf(x);
  const Letter l = w[0];
  const auto u = w.subspan(1);
  const auto& tuples = nf.algebra.op(l.symbol, a);
  if (tuples.empty()) return any_tree_with_path(*nf.alphabet(), w, x);
  const Lattice& lat = *nf.lattice;
  std::size_t best = 0;
  Elem best_value = lat.bottom();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const Elem v = max_omega(nf, x, ndt_path_states(nf.algebra, {tuples[k][l.index - 1]}, u));
    if (k == 0 || lat.less(best_value, v)) {
      best = k;
      best_value = v;
    }
  }
  const auto& tuple = tuples[best];
  std::vector<Tree> kids;
  for (std::size_t j = 0; j < tuple.size(); ++j)
    kids.push_back(j == l.index - 1 ? witness_from(nf, mt, tuple[j], u, x) : mt.witness[tuple[j]]);
  return Tree::node(l.symbol, std::move(kids));
}

}  // namespace

Tree witness_tree(const LNdtRecognizer& nf, const PathWord& r) {
  if (!is_normalized_ndt(nf)) throw Error(Errc::NotNormalized, "witness_tree needs a normalized recognizer");
  const auto& sigma = *nf.alphabet();
  if (r.leaf >= sigma.leaf_count()) throw Error(Errc::InvalidTree, "path ends in an unknown leaf");
  for (const auto& l : r.word)
    if (l.symbol >= sigma.symbol_count() || l.index < 1 || l.index > sigma.arity(l.symbol)) {
      throw Error(Errc::InvalidTree, "path letter outside the path alphabet");
    }
  if (nf.initial.empty()) return any_tree_with_path(sigma, r.word, r.leaf);
  const auto mt = max_values(nf);
  const Lattice& l = *nf.lattice;
  State best = nf.initial[0];
  Elem best_value = l.bottom();
  for (State b : nf.initial) {
    const Elem v = max_omega(nf, r.leaf, ndt_path_states(nf.algebra, {b}, r.word));
    if (b == nf.initial[0] || l.less(best_value, v)) {
      best = b;
      best_value = v;
    }
  }
  return witness_from(nf, mt, best, r.word, r.leaf);
}

Elem tde_normalized_dt(const LDtRecognizer& f, const PathWord& r) {
  require_chain(*f.lattice);
  if (!is_normalized_dt(f)) throw Error(Errc::NotNormalized, "recognizer is not normalized");
  return lambda_dt(f, r);
}

}  // namespace fta
