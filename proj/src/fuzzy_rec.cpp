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

#include "fta/fuzzy_rec.hpp"

#include <algorithm>
#include <map>

#include "fta/error.hpp"

namespace fta {

namespace {

void check_omega(const Lattice& lattice, const FinalTable& omega, const RankedAlphabet& sigma, std::size_t n) {
  if (omega.size() != sigma.leaf_count()) throw Error(Errc::InvalidAutomaton, "omega must cover every leaf");
  for (const auto& row : omega) {
    if (row.size() != n) throw Error(Errc::InvalidAutomaton, "omega must cover every state");
    for (Elem e : row) lattice.check(e);
  }
}

// Enumerates A^m in lexicographic order; `tuple` is advanced in place.
bool next_tuple(std::vector<State>& tuple, std::size_t n) {
  std::size_t i = tuple.size();
  while (i > 0) {
    if (++tuple[i - 1] < n) return true;
    tuple[--i] = 0;
  }
  return false;
}

}  // namespace

void LDtRecognizer::validate() const {
  if (!lattice) throw Error(Errc::InvalidAutomaton, "recognizer has no lattice");
  if (initial >= algebra.state_count()) throw Error(Errc::InvalidAutomaton, "initial state out of range");
  check_omega(*lattice, omega, *algebra.alphabet(), algebra.state_count());
}

void LNdtRecognizer::validate() const {
  if (!lattice) throw Error(Errc::InvalidAutomaton, "recognizer has no lattice");
  for (State s : initial)
    if (s >= algebra.state_count()) throw Error(Errc::InvalidAutomaton, "initial state out of range");
  if (initial != make_state_set(initial)) {
    throw Error(Errc::InvalidAutomaton, "initial set must be sorted and duplicate-free");
  }
  check_omega(*lattice, omega, *algebra.alphabet(), algebra.state_count());
}

GeneralLNdtRecognizer GeneralLNdtRecognizer::zero(LatticePtr lattice, AlphabetPtr alphabet,
                                                  std::vector<std::string> states) {
  GeneralLNdtRecognizer g;
  const std::size_t n = states.size();
  g.gamma.resize(alphabet->symbol_count());
  for (SymbolId f = 0; f < alphabet->symbol_count(); ++f) {
    std::size_t size = n;
    for (unsigned i = 0; i < alphabet->arity(f); ++i) size *= n;
    g.gamma[f].assign(size, lattice->bottom());
  }
  g.iota.assign(n, lattice->bottom());
  g.omega.assign(alphabet->leaf_count(), std::vector<Elem>(n, lattice->bottom()));
  g.lattice = std::move(lattice);
  g.alphabet = std::move(alphabet);
  g.states = std::move(states);
  return g;
}

std::size_t GeneralLNdtRecognizer::gamma_index(State a, std::span<const State> kids) const {
  std::size_t idx = a;
  for (State b : kids) idx = idx * states.size() + b;
  return idx;
}

Elem GeneralLNdtRecognizer::gamma_at(SymbolId f, State a, std::span<const State> kids) const {
  return gamma.at(f).at(gamma_index(a, kids));
}

void GeneralLNdtRecognizer::set_gamma(SymbolId f, State a, std::span<const State> kids, Elem c) {
  lattice->check(c);
  if (kids.size() != alphabet->arity(f)) throw Error(Errc::ArityMismatch, "gamma tuple has the wrong arity");
  gamma.at(f).at(gamma_index(a, kids)) = c;
}

void GeneralLNdtRecognizer::validate() const {
  if (!lattice || !alphabet) throw Error(Errc::InvalidAutomaton, "recognizer has no lattice or alphabet");
  const std::size_t n = states.size();
  if (n == 0) throw Error(Errc::InvalidAutomaton, "an algebra needs at least one state");
  if (gamma.size() != alphabet->symbol_count()) throw Error(Errc::InvalidAutomaton, "gamma must cover every symbol");
  for (SymbolId f = 0; f < gamma.size(); ++f) {
    std::size_t size = n;
    for (unsigned i = 0; i < alphabet->arity(f); ++i) size *= n;
    if (gamma[f].size() != size) throw Error(Errc::InvalidAutomaton, "gamma table has the wrong size");
    for (Elem e : gamma[f]) lattice->check(e);
  }
  if (iota.size() != n) throw Error(Errc::InvalidAutomaton, "iota must cover every state");
  for (Elem e : iota) lattice->check(e);
  check_omega(*lattice, omega, *alphabet, n);
}

std::vector<Elem> omega_values(const Lattice& lattice, const FinalTable& omega) {
  std::vector<Elem> r;
  for (const auto& row : omega) r.insert(r.end(), row.begin(), row.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  for (Elem e : r) lattice.check(e);
  return r;
}

std::vector<Elem> d_omega(const LDtRecognizer& f) {
  const auto r = omega_values(*f.lattice, f.omega);
  return f.lattice->meet_closure(r);
}

namespace {

Elem eval_dt_at(const LDtRecognizer& f, const Tree& t, State a) {
  if (t.is_leaf()) return f.omega[t.label][a];
  const auto& next = f.algebra.op(t.label, a);
  Elem v = f.lattice->top();
  for (std::size_t i = 0; i < t.kids.size(); ++i) v = f.lattice->meet(v, eval_dt_at(f, t.kids[i], next[i]));
  return v;
}

}  // namespace

Elem eval_dt(const LDtRecognizer& f, const Tree& t, std::optional<State> from) {
  validate_tree(t, *f.alphabet());
  const State a = from.value_or(f.initial);
  if (a >= f.state_count()) throw Error(Errc::InvalidArgument, "start state out of range");
  return eval_dt_at(f, t, a);
}

Elem eval_dt_by_paths(const LDtRecognizer& f, const Tree& t) {
  validate_tree(t, *f.alphabet());
  Elem v = f.lattice->top();
  for (const auto& r : delta(t)) v = f.lattice->meet(v, f.omega[r.leaf][path_state(f.algebra, f.initial, r.word)]);
  return v;
}

namespace {

void context_walk(const LDtRecognizer& f, const Tree& t, State a, Elem& value, State& end) {
  switch (t.kind) {
    case Tree::Kind::Leaf: value = f.lattice->meet(value, f.omega[t.label][a]); return;
    case Tree::Kind::Hole: end = a; return;
    case Tree::Kind::Node: {
      const auto& next = f.algebra.op(t.label, a);
      for (std::size_t i = 0; i < t.kids.size(); ++i) context_walk(f, t.kids[i], next[i], value, end);
      return;
    }
    case Tree::Kind::Var: throw Error(Errc::InvalidTree, "variables cannot be evaluated");
  }
}

}  // namespace

ContextValue eval_dt_context(const LDtRecognizer& f, State a, const Context& p) {
  if (a >= f.state_count()) throw Error(Errc::InvalidArgument, "start state out of range");
  p.validate(*f.alphabet());
  ContextValue cv{f.lattice->top(), a};
  context_walk(f, p.body(), a, cv.value, cv.end);
  return cv;
}

namespace {

std::vector<Elem> ndt_vector(const LNdtRecognizer& nf, const Tree& t) {
  if (t.is_leaf()) {
    std::vector<Elem> v(nf.state_count());
    for (State a = 0; a < v.size(); ++a) v[a] = nf.omega[t.label][a];
    return v;
  }
  std::vector<std::vector<Elem>> kids;
  kids.reserve(t.kids.size());
  for (const auto& k : t.kids) kids.push_back(ndt_vector(nf, k));
  const Lattice& l = *nf.lattice;
  std::vector<Elem> v(nf.state_count(), l.bottom());
  for (State a = 0; a < v.size(); ++a) {
    for (const auto& tuple : nf.algebra.op(t.label, a)) {
      Elem m = l.top();
      for (std::size_t i = 0; i < tuple.size(); ++i) m = l.meet(m, kids[i][tuple[i]]);
      v[a] = l.join(v[a], m);
    }
  }
  return v;
}

}  // namespace

std::vector<Elem> eval_ndt_states(const LNdtRecognizer& nf, const Tree& t) {
  validate_tree(t, *nf.alphabet());
  return ndt_vector(nf, t);
}

Elem eval_ndt_from(const LNdtRecognizer& nf, const Tree& t, const StateSet& h) {
  const auto v = eval_ndt_states(nf, t);
  Elem out = nf.lattice->bottom();
  for (State a : h) out = nf.lattice->join(out, v.at(a));
  return out;
}

Elem eval_ndt(const LNdtRecognizer& nf, const Tree& t) { return eval_ndt_from(nf, t, nf.initial); }

void require_distributive(const Lattice& lattice) {
  if (!lattice.classify().is_distributive) {
    throw Error(Errc::NonDistributiveLattice, "lattice '" + lattice.label() + "' is not distributive");
  }
}

namespace {

std::vector<Elem> general_vector(const GeneralLNdtRecognizer& ng, const Tree& t) {
  const std::size_t n = ng.states.size();
  const Lattice& l = *ng.lattice;
  std::vector<Elem> v(n, l.bottom());
  if (t.is_leaf()) {
    for (State a = 0; a < n; ++a) v[a] = ng.omega[t.label][a];
    return v;
  }
  std::vector<std::vector<Elem>> kids;
  for (const auto& k : t.kids) kids.push_back(general_vector(ng, k));
  std::vector<State> tuple(t.kids.size(), 0);
  for (State a = 0; a < n; ++a) {
    std::fill(tuple.begin(), tuple.end(), 0);
    do {
      Elem m = ng.gamma_at(t.label, a, tuple);
      for (std::size_t i = 0; i < tuple.size(); ++i) m = l.meet(m, kids[i][tuple[i]]);
      v[a] = l.join(v[a], m);
    } while (next_tuple(tuple, n));
  }
  return v;
}

}  // namespace

Elem eval_general_ndt(const GeneralLNdtRecognizer& ng, const Tree& t) {
  require_distributive(*ng.lattice);
  validate_tree(t, *ng.alphabet);
  const auto v = general_vector(ng, t);
  Elem out = ng.lattice->bottom();
  for (State a = 0; a < v.size(); ++a) out = ng.lattice->join(out, ng.lattice->meet(ng.iota[a], v[a]));
  return out;
}

LNdtRecognizer general_to_simple(const GeneralLNdtRecognizer& ng) {
  ng.validate();
  const Lattice& l = *ng.lattice;
  require_distributive(l);
  const auto& sigma = *ng.alphabet;
  const std::size_t n = ng.states.size();

  // Second components are meets of iota and gamma values, so only the part of
  // A x D reachable from the initial pairs (a, iota(a)) is built.
  std::vector<std::pair<State, Elem>> pairs;
  std::map<std::pair<State, Elem>, State> index;
  auto intern = [&](State a, Elem d) {
    auto [it, fresh] = index.emplace(std::make_pair(a, d), static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(a, d);
    return it->second;
  };
  StateSet initial;
  for (State a = 0; a < n; ++a) initial.push_back(intern(a, ng.iota[a]));

  std::vector<std::vector<std::vector<StateTuple>>> ops(sigma.symbol_count());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, d] = pairs[k];
    for (SymbolId f = 0; f < sigma.symbol_count(); ++f) {
      std::vector<StateTuple> tuples;
      std::vector<State> kids(sigma.arity(f), 0);
      do {
        const Elem e = l.meet(d, ng.gamma_at(f, a, kids));
        // A zero-degree branch contributes 0 to the join and is dropped.
        if (e == l.bottom()) continue;
        StateTuple tuple;
        for (State b : kids) tuple.push_back(intern(b, e));
        tuples.push_back(std::move(tuple));
      } while (next_tuple(kids, n));
      ops[f].push_back(std::move(tuples));
    }
  }

  std::vector<std::string> names;
  FinalTable omega(sigma.leaf_count());
  for (const auto& [a, d] : pairs) {
    const std::string parts[] = {ng.states[a], l.name(d)};
    names.push_back(tuple_name(parts));
  }
  for (LeafId x = 0; x < sigma.leaf_count(); ++x)
    for (const auto& [a, d] : pairs) omega[x].push_back(l.meet(ng.omega[x][a], d));

  LNdtRecognizer out{ng.lattice, NdtAlgebra(ng.alphabet, std::move(names), std::move(ops)),
                     make_state_set(std::move(initial)), std::move(omega)};
  out.validate();
  return out;
}

GeneralLNdtRecognizer simple_to_general(const LNdtRecognizer& nf) {
  auto g = GeneralLNdtRecognizer::zero(nf.lattice, nf.alphabet(), nf.algebra.state_names());
  const Lattice& l = *nf.lattice;
  for (SymbolId f = 0; f < nf.alphabet()->symbol_count(); ++f)
    for (State a = 0; a < nf.state_count(); ++a)
      for (const auto& tuple : nf.algebra.op(f, a)) g.set_gamma(f, a, tuple, l.top());
  for (State a : nf.initial) g.iota[a] = l.top();
  g.omega = nf.omega;
  return g;
}

LNdtRecognizer dt_to_ndt(const LDtRecognizer& f) {
  return LNdtRecognizer{f.lattice, NdtAlgebra::from_dt(f.algebra), StateSet{f.initial}, f.omega};
}

}  // namespace fta
