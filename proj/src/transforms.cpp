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

#include "fta/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fta/error.hpp"

namespace fta {

namespace {

std::string fresh_name(std::set<std::string>& used, std::string base) {
  while (!used.insert(base).second) base += '\'';
  return base;
}

void require_compatible(const LatticePtr& l1, const AlphabetPtr& a1, const LatticePtr& l2, const AlphabetPtr& a2) {
  require_same_alphabet(*a1, *a2);
  require_same_lattice(*l1, *l2);
}

// Adds a state with value 0 everywhere when some transition set or the
// initial set is empty; the state replaces every empty choice.
LNdtRecognizer complete_with_zero(const LNdtRecognizer& nf) {
  const auto& sigma = *nf.alphabet();
  const std::size_t n = nf.state_count();
  bool needed = nf.initial.empty();
  for (SymbolId f = 0; f < sigma.symbol_count() && !needed; ++f)
    for (State a = 0; a < n && !needed; ++a) needed = nf.algebra.op(f, a).empty();
  if (!needed) return nf;

  const auto z = static_cast<State>(n);
  std::set<std::string> used(nf.algebra.state_names().begin(), nf.algebra.state_names().end());
  auto names = nf.algebra.state_names();
  names.push_back(fresh_name(used, "zero"));
  auto ops = nf.algebra.ops();
  for (SymbolId f = 0; f < sigma.symbol_count(); ++f) {
    const StateTuple zeros(sigma.arity(f), z);
    for (auto& tuples : ops[f])
      if (tuples.empty()) tuples.push_back(zeros);
    ops[f].push_back({zeros});
  }
  auto omega = nf.omega;
  for (auto& row : omega) row.push_back(nf.lattice->bottom());
  StateSet initial = nf.initial.empty() ? StateSet{z} : nf.initial;
  return LNdtRecognizer{nf.lattice, NdtAlgebra(nf.alphabet(), std::move(names), std::move(ops)), std::move(initial),
                        std::move(omega)};
}

std::vector<std::string> pair_names(const std::vector<std::string>& left, const std::vector<std::string>& right) {
  std::vector<std::string> names;
  for (const auto& a : left)
    for (const auto& b : right) {
      const std::string parts[] = {a, b};
      names.push_back(tuple_name(parts));
    }
  return names;
}

}  // namespace

Paired<LNdtRecognizer> parallel_product_ndt(const LNdtRecognizer& nf_in, const LNdtRecognizer& ng_in) {
  require_compatible(nf_in.lattice, nf_in.alphabet(), ng_in.lattice, ng_in.alphabet());
  const LNdtRecognizer nf = complete_with_zero(nf_in);
  const LNdtRecognizer ng = complete_with_zero(ng_in);
  const auto& sigma = *nf.alphabet();
  const std::size_t na = nf.state_count();
  const std::size_t nb = ng.state_count();
  auto lattice = std::make_shared<const Lattice>(Lattice::product(*nf.lattice, *ng.lattice));

  std::vector<std::vector<std::vector<StateTuple>>> ops(sigma.symbol_count());
  for (SymbolId f = 0; f < sigma.symbol_count(); ++f) {
    for (State a = 0; a < na; ++a) {
      for (State b = 0; b < nb; ++b) {
        std::vector<StateTuple> tuples;
        for (const auto& ta : nf.algebra.op(f, a))
          for (const auto& tb : ng.algebra.op(f, b)) {
            StateTuple t(ta.size());
            for (std::size_t i = 0; i < ta.size(); ++i) t[i] = static_cast<State>(ta[i] * nb + tb[i]);
            tuples.push_back(std::move(t));
          }
        ops[f].push_back(std::move(tuples));
      }
    }
  }
  FinalTable omega(sigma.leaf_count());
  for (LeafId x = 0; x < sigma.leaf_count(); ++x)
    for (State a = 0; a < na; ++a)
      for (State b = 0; b < nb; ++b) omega[x].push_back(lattice->pair(nf.omega[x][a], ng.omega[x][b]));
  StateSet initial;
  for (State a : nf.initial)
    for (State b : ng.initial) initial.push_back(static_cast<State>(a * nb + b));

  LNdtRecognizer product{lattice,
                         NdtAlgebra(nf.alphabet(), pair_names(nf.algebra.state_names(), ng.algebra.state_names()),
                                    std::move(ops)),
                         make_state_set(std::move(initial)), std::move(omega)};
  return Paired<LNdtRecognizer>{std::move(product), nf.lattice, na, nb};
}

namespace {

// The product algebra A x B with state (a, b) at index a * |B| + b.
DtAlgebra product_algebra(const DtAlgebra& x, const DtAlgebra& y) {
  const auto& sigma = *x.alphabet();
  const std::size_t nb = y.state_count();
  std::vector<std::vector<StateTuple>> ops(sigma.symbol_count());
  for (SymbolId f = 0; f < sigma.symbol_count(); ++f)
    for (State a = 0; a < x.state_count(); ++a)
      for (State b = 0; b < nb; ++b) {
        const auto& ta = x.op(f, a);
        const auto& tb = y.op(f, b);
        StateTuple t(ta.size());
        for (std::size_t i = 0; i < ta.size(); ++i) t[i] = static_cast<State>(ta[i] * nb + tb[i]);
        ops[f].push_back(std::move(t));
      }
  return DtAlgebra(x.alphabet(), pair_names(x.state_names(), y.state_names()), std::move(ops));
}

}  // namespace

Paired<LDtRecognizer> dt_product(const LDtRecognizer& f, const LDtRecognizer& g) {
  require_compatible(f.lattice, f.alphabet(), g.lattice, g.alphabet());
  auto lattice = std::make_shared<const Lattice>(Lattice::product(*f.lattice, *g.lattice));
  const std::size_t nb = g.state_count();
  FinalTable omega(f.alphabet()->leaf_count());
  for (LeafId x = 0; x < omega.size(); ++x)
    for (State a = 0; a < f.state_count(); ++a)
      for (State b = 0; b < nb; ++b) omega[x].push_back(lattice->pair(f.omega[x][a], g.omega[x][b]));
  LDtRecognizer h{lattice, product_algebra(f.algebra, g.algebra), static_cast<State>(f.initial * nb + g.initial),
                  std::move(omega)};
  return Paired<LDtRecognizer>{std::move(h), f.lattice, f.state_count(), nb};
}

LDtRecognizer intersect_dt(const LDtRecognizer& f, const LDtRecognizer& g) {
  require_compatible(f.lattice, f.alphabet(), g.lattice, g.alphabet());
  const Lattice& l = *f.lattice;
  const std::size_t nb = g.state_count();
  FinalTable omega(f.alphabet()->leaf_count());
  for (LeafId x = 0; x < omega.size(); ++x)
    for (State a = 0; a < f.state_count(); ++a)
      for (State b = 0; b < nb; ++b) omega[x].push_back(l.meet(f.omega[x][a], g.omega[x][b]));
  return LDtRecognizer{f.lattice, product_algebra(f.algebra, g.algebra),
                       static_cast<State>(f.initial * nb + g.initial), std::move(omega)};
}

LDtRecognizer top_concat(SymbolId f, std::span<const LDtRecognizer> parts) {
  if (parts.empty()) throw Error(Errc::ArityMismatch, "top-concatenation needs at least one factor");
  const auto& alphabet = parts[0].alphabet();
  const auto& lattice = parts[0].lattice;
  if (f >= alphabet->symbol_count()) throw Error(Errc::InvalidArgument, "unknown symbol");
  if (parts.size() != alphabet->arity(f)) {
    throw Error(Errc::ArityMismatch, "'" + alphabet->symbol_name(f) + "' has arity " +
                                         std::to_string(alphabet->arity(f)) + " but " +
                                         std::to_string(parts.size()) + " languages were given");
  }
  for (const auto& p : parts) require_compatible(lattice, alphabet, p.lattice, p.alphabet());

  const auto& sigma = *alphabet;
  std::vector<std::size_t> offset;
  std::size_t total = 1;
  std::vector<std::string> names{"top"};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offset.push_back(total);
    total += parts[i].state_count();
    for (const auto& s : parts[i].algebra.state_names()) {
      const std::string tag[] = {std::to_string(i + 1), s};
      names.push_back(tuple_name(tag));
    }
  }
  const auto sink = static_cast<State>(total);
  std::set<std::string> used(names.begin() + 1, names.end());
  names[0] = fresh_name(used, "top");
  names.push_back(fresh_name(used, "sink"));

  std::vector<std::vector<StateTuple>> ops(sigma.symbol_count());
  FinalTable omega(sigma.leaf_count(), std::vector<Elem>(total + 1, lattice->bottom()));
  for (SymbolId g = 0; g < sigma.symbol_count(); ++g) {
    const StateTuple to_sink(sigma.arity(g), sink);
    if (g == f) {
      StateTuple starts;
      for (std::size_t i = 0; i < parts.size(); ++i) starts.push_back(static_cast<State>(offset[i] + parts[i].initial));
      ops[g].push_back(starts);
    } else {
      ops[g].push_back(to_sink);
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (State a = 0; a < parts[i].state_count(); ++a) {
        StateTuple t = parts[i].algebra.op(g, a);
        for (auto& s : t) s = static_cast<State>(s + offset[i]);
        ops[g].push_back(std::move(t));
      }
    ops[g].push_back(to_sink);
  }
  for (LeafId x = 0; x < sigma.leaf_count(); ++x)
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (State a = 0; a < parts[i].state_count(); ++a) omega[x][offset[i] + a] = parts[i].omega[x][a];
  return LDtRecognizer{lattice, DtAlgebra(alphabet, std::move(names), std::move(ops)), 0, std::move(omega)};
}

LDtRecognizer context_quotient(const LDtRecognizer& f, const Context& p) {
  const auto cv = eval_dt_context(f, f.initial, p);
  LDtRecognizer g = f;
  g.initial = cv.end;
  for (auto& row : g.omega)
    for (auto& e : row) e = f.lattice->meet(e, cv.value);
  return g;
}

namespace {

void collect_context_subtrees(const Tree& t, std::vector<Tree>& out) {
  if (t.kind == Tree::Kind::Hole) return;
  if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  for (const auto& k : t.kids) collect_context_subtrees(k, out);
}

}  // namespace

LDtRecognizer context_embed(const LDtRecognizer& f, const Context& p) {
  const auto& sigma = *f.alphabet();
  const Lattice& l = *f.lattice;
  const std::size_t n = f.state_count();
  p.validate(sigma);

  // States: A, then the distinct subtrees of p(a0) other than a0 itself, then the sink.
  std::vector<Tree> subs;
  collect_context_subtrees(p.body(), subs);
  auto state_of = [&](const Tree& r) -> State {
    if (r.kind == Tree::Kind::Hole) return f.initial;
    return static_cast<State>(n + (std::find(subs.begin(), subs.end(), r) - subs.begin()));
  };
  const auto sink = static_cast<State>(n + subs.size());

  std::vector<std::string> names = f.algebra.state_names();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& r : subs) names.push_back(fresh_name(used, "p." + to_string(r, sigma)));
  names.push_back(fresh_name(used, "sink"));

  std::vector<std::vector<StateTuple>> ops(sigma.symbol_count());
  for (SymbolId g = 0; g < sigma.symbol_count(); ++g) {
    const StateTuple to_sink(sigma.arity(g), sink);
    ops[g] = f.algebra.ops()[g];
    for (const auto& r : subs) {
      if (r.is_node() && r.label == g) {
        StateTuple t;
        for (const auto& k : r.kids) t.push_back(state_of(k));
        ops[g].push_back(std::move(t));
      } else {
        ops[g].push_back(to_sink);
      }
    }
    ops[g].push_back(to_sink);
  }
  FinalTable omega(sigma.leaf_count());
  for (LeafId x = 0; x < sigma.leaf_count(); ++x) {
    omega[x] = f.omega[x];
    for (const auto& r : subs) omega[x].push_back(r.is_leaf() && r.label == x ? l.top() : l.bottom());
    omega[x].push_back(l.bottom());
  }
  return LDtRecognizer{f.lattice, DtAlgebra(f.alphabet(), std::move(names), std::move(ops)), state_of(p.body()),
                       std::move(omega)};
}

namespace {

// Leaf-run of a homomorphism image pattern: variable hits and the meet of omega over real leaves.
void walk_pattern(const LDtRecognizer& f, const Tree& t, State a, std::vector<std::vector<State>>& var_states,
                  Elem& value) {
  switch (t.kind) {
    case Tree::Kind::Var: var_states[t.label - 1].push_back(a); return;
    case Tree::Kind::Leaf: value = f.lattice->meet(value, f.omega[t.label][a]); return;
    case Tree::Kind::Node: {
      const auto& next = f.algebra.op(t.label, a);
      for (std::size_t i = 0; i < t.kids.size(); ++i) walk_pattern(f, t.kids[i], next[i], var_states, value);
      return;
    }
    case Tree::Kind::Hole: throw Error(Errc::InvalidTree, "unexpected hole in homomorphism image");
  }
}

}  // namespace

LDtRecognizer inverse_hom(const LDtRecognizer& f, const TreeHomomorphism& h) {
  require_same_alphabet(*f.alphabet(), *h.target());
  const auto& sigma = *h.source();
  const Lattice& l = *f.lattice;

  using Key = std::pair<StateSet, Elem>;
  std::vector<Key> states;
  std::map<Key, State> index;
  auto intern = [&](const Key& k) {
    auto [it, fresh] = index.emplace(k, static_cast<State>(states.size()));
    if (fresh) states.push_back(k);
    return it->second;
  };
  intern(Key{StateSet{f.initial}, l.top()});

  std::vector<std::vector<StateTuple>> ops(sigma.symbol_count());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto [hset, d] = states[k];
    for (SymbolId g = 0; g < sigma.symbol_count(); ++g) {
      const unsigned m = sigma.arity(g);
      std::vector<std::vector<State>> var_states(m);
      Elem df = l.top();
      for (State a : hset) walk_pattern(f, h.symbol_image(g), a, var_states, df);
      const Elem e = l.meet(d, df);
      StateTuple t;
      for (unsigned i = 0; i < m; ++i) t.push_back(intern(Key{make_state_set(std::move(var_states[i])), e}));
      ops[g].push_back(std::move(t));
    }
  }

  std::vector<std::string> names;
  for (const auto& [hset, d] : states) {
    const std::string parts[] = {set_name(f.algebra.state_names(), hset), l.name(d)};
    names.push_back(tuple_name(parts));
  }
  FinalTable omega(sigma.leaf_count());
  for (LeafId x = 0; x < sigma.leaf_count(); ++x)
    for (const auto& [hset, d] : states) {
      Elem v = d;
      for (State a : hset) v = l.meet(v, eval_dt(f, h.leaf_image(x), a));
      omega[x].push_back(v);
    }
  return LDtRecognizer{f.lattice, DtAlgebra(h.source(), std::move(names), std::move(ops)), 0, std::move(omega)};
}

LDtRecognizer alphabetic_image(const LDtRecognizer& f, const TreeHomomorphism& h) {
  require_same_alphabet(*f.alphabet(), *h.source());
  if (!h.is_alphabetic()) throw Error(Errc::NotAlphabetic, "homomorphism is not alphabetic");
  if (!h.is_injective_alphabetic()) throw Error(Errc::NotInjective, "homomorphism is not injective");
  const auto& src = *h.source();
  const auto& omega_sigma = *h.target();
  const Lattice& l = *f.lattice;
  const std::size_t n = f.state_count();
  const auto dagger = static_cast<State>(n);

  std::vector<std::string> names = f.algebra.state_names();
  std::set<std::string> used(names.begin(), names.end());
  names.push_back(fresh_name(used, "dagger"));

  std::vector<std::vector<StateTuple>> ops(omega_sigma.symbol_count());
  for (SymbolId g = 0; g < omega_sigma.symbol_count(); ++g) {
    const StateTuple to_dagger(omega_sigma.arity(g), dagger);
    std::optional<SymbolId> pre;
    for (SymbolId s = 0; s < src.symbol_count(); ++s)
      if (h.symbol_image(s).label == g) pre = s;
    for (State a = 0; a < n; ++a) ops[g].push_back(pre ? f.algebra.op(*pre, a) : to_dagger);
    ops[g].push_back(to_dagger);
  }
  FinalTable omega(omega_sigma.leaf_count(), std::vector<Elem>(n + 1, l.bottom()));
  for (LeafId x = 0; x < src.leaf_count(); ++x) {
    const LeafId y = h.leaf_image(x).label;
    for (State a = 0; a < n; ++a) omega[y][a] = f.omega[x][a];
  }
  return LDtRecognizer{f.lattice, DtAlgebra(h.target(), std::move(names), std::move(ops)), f.initial,
                       std::move(omega)};
}

LDtRecognizer scalar(const LDtRecognizer& f, Elem c) {
  f.lattice->check(c);
  LDtRecognizer g = f;
  for (auto& row : g.omega)
    for (auto& e : row) e = f.lattice->meet(c, e);
  return g;
}

namespace {

template <class Pred>
DtRecognizer crisp_from(const LDtRecognizer& f, Pred keep) {
  std::vector<std::vector<bool>> final(f.omega.size());
  for (std::size_t x = 0; x < f.omega.size(); ++x)
    for (Elem e : f.omega[x]) final[x].push_back(keep(e));
  return DtRecognizer{f.algebra, f.initial, std::move(final)};
}

}  // namespace

DtRecognizer cut(const LDtRecognizer& f, Elem c) {
  f.lattice->check(c);
  return crisp_from(f, [&](Elem e) { return f.lattice->leq(c, e); });
}

LDtRecognizer characteristic(const DtRecognizer& t, const LatticePtr& lattice) {
  FinalTable omega(t.final.size());
  for (std::size_t x = 0; x < t.final.size(); ++x)
    for (bool b : t.final[x]) omega[x].push_back(b ? lattice->top() : lattice->bottom());
  return LDtRecognizer{lattice, t.algebra, t.initial, std::move(omega)};
}

LNdtRecognizer characteristic(const NdtRecognizer& t, const LatticePtr& lattice) {
  FinalTable omega(t.final.size());
  for (std::size_t x = 0; x < t.final.size(); ++x)
    for (bool b : t.final[x]) omega[x].push_back(b ? lattice->top() : lattice->bottom());
  return LNdtRecognizer{lattice, t.algebra, t.initial, std::move(omega)};
}

DtRecognizer support_dt(const LDtRecognizer& f) {
  if (!f.lattice->classify().zero_meet_irreducible) {
    throw Error(Errc::ZeroNotIrreducible,
                "0 is not meet-irreducible in '" + f.lattice->label() + "'; the support need not be DT-recognizable");
  }
  return crisp_from(f, [&](Elem e) { return e != f.lattice->bottom(); });
}

DtRecognizer crisp_part(const LDtRecognizer& f) {
  return crisp_from(f, [&](Elem e) { return e == f.lattice->top(); });
}

LDtRecognizer lattice_map(const LDtRecognizer& f, const LatticeMorphism& psi) {
  if (!psi.source || !psi.target) throw Error(Errc::ValidationError, "morphism lacks a source or target");
  require_same_lattice(*f.lattice, *psi.source);
  psi.validate_meet_morphism();
  LDtRecognizer g{psi.target, f.algebra, f.initial, f.omega};
  for (auto& row : g.omega)
    for (auto& e : row) e = psi(e);
  return g;
}

LDtRecognizer constant_dt(const LatticePtr& lattice, const AlphabetPtr& alphabet, Elem c) {
  lattice->check(c);
  std::vector<std::vector<StateTuple>> ops(alphabet->symbol_count());
  for (SymbolId f = 0; f < alphabet->symbol_count(); ++f) ops[f].push_back(StateTuple(alphabet->arity(f), 0));
  FinalTable omega(alphabet->leaf_count(), std::vector<Elem>{c});
  return LDtRecognizer{lattice, DtAlgebra(alphabet, {"q"}, std::move(ops)), 0, std::move(omega)};
}

}  // namespace fta
