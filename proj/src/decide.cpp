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

#include "fta/decide.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "fta/error.hpp"

namespace fta {

namespace {

using Vec = std::vector<Elem>;

Vec leaf_vector(const LNdtRecognizer& nf, LeafId x) { return nf.omega[x]; }

Vec combine(const LNdtRecognizer& nf, SymbolId f, std::span<const Vec* const> kids) {
  const Lattice& l = *nf.lattice;
  Vec v(nf.state_count(), l.bottom());
  for (State a = 0; a < v.size(); ++a) {
    for (const auto& tuple : nf.algebra.op(f, a)) {
      Elem m = l.top();
      for (std::size_t i = 0; i < tuple.size(); ++i) m = l.meet(m, (*kids[i])[tuple[i]]);
      v[a] = l.join(v[a], m);
    }
  }
  return v;
}

[[noreturn]] void over_budget(std::size_t budget) {
  throw Error(Errc::BudgetExceeded, "value-vector enumeration exceeded the budget of " + std::to_string(budget));
}

// Calls visit(choice) for every tuple in which positions < j draw from `before`,
// position j from `at`, and positions > j from `after`, for every j.
template <class Visit>
void for_each_frontier_tuple(unsigned m, std::span<const std::size_t> before, std::span<const std::size_t> at,
                             std::span<const std::size_t> after, Visit visit) {
  std::vector<std::size_t> choice(m);
  for (unsigned j = 0; j < m; ++j) {
    std::vector<std::span<const std::size_t>> pools(m);
    bool empty = false;
    for (unsigned i = 0; i < m; ++i) {
      pools[i] = i < j ? before : (i == j ? at : after);
      empty = empty || pools[i].empty();
    }
    if (empty) continue;
    std::vector<std::size_t> pos(m, 0);
    while (true) {
      for (unsigned i = 0; i < m; ++i) choice[i] = pools[i][pos[i]];
      visit(choice, j);
      unsigned i = m;
      while (i > 0 && ++pos[i - 1] == pools[i - 1].size()) pos[--i] = 0;
      if (i == 0) break;
    }
  }
}

}  // namespace

ValueVectors::ValueVectors(const LNdtRecognizer& nf, std::size_t budget) {
  nf.validate();
  const auto& sigma = *nf.alphabet();
  std::map<Vec, std::size_t> index;
  const std::size_t work_cap = budget > std::numeric_limits<std::size_t>::max() / 64 ? budget : budget * 64;
  std::size_t work = 0;

  auto intern = [&](Vec v, unsigned h, Origin origin) {
    if (index.count(v)) return;
    if (vectors_.size() >= budget) over_budget(budget);
    index.emplace(v, vectors_.size());
    vectors_.push_back(std::move(v));
    heights_.push_back(h);
    origins_.push_back(std::move(origin));
  };

  for (LeafId x = 0; x < sigma.leaf_count(); ++x) intern(leaf_vector(nf, x), 0, Origin{true, x, {}});

  std::size_t old_end = 0;
  std::size_t cur_end = vectors_.size();
  unsigned h = 0;
  while (old_end < cur_end) {
    ++h;
    std::vector<std::size_t> old_pool(old_end);
    std::vector<std::size_t> new_pool;
    std::vector<std::size_t> all_pool(cur_end);
    for (std::size_t i = 0; i < cur_end; ++i) all_pool[i] = i;
    for (std::size_t i = 0; i < old_end; ++i) old_pool[i] = i;
    for (std::size_t i = old_end; i < cur_end; ++i) new_pool.push_back(i);

    for (SymbolId f = 0; f < sigma.symbol_count(); ++f) {
      const unsigned m = sigma.arity(f);
      std::vector<const Vec*> kids(m);
      for_each_frontier_tuple(m, old_pool, new_pool, all_pool, [&](const std::vector<std::size_t>& choice, unsigned) {
        if (++work > work_cap) over_budget(budget);
        for (unsigned i = 0; i < m; ++i) kids[i] = &vectors_[choice[i]];
        intern(combine(nf, f, kids), h, Origin{false, f, choice});
      });
    }
    old_end = cur_end;
    cur_end = vectors_.size();
  }
}

Tree ValueVectors::witness(std::size_t i) const {
  const Origin& o = origins_.at(i);
  if (o.leaf) return Tree::leaf(o.label);
  std::vector<Tree> kids;
  for (std::size_t k : o.kids) kids.push_back(witness(k));
  return Tree::node(o.label, std::move(kids));
}

HeightLayers::HeightLayers(const LNdtRecognizer& nf, unsigned max_height, std::size_t budget) {
  nf.validate();
  const auto& sigma = *nf.alphabet();
  std::size_t total = 0;
  const std::size_t work_cap = budget > std::numeric_limits<std::size_t>::max() / 64 ? budget : budget * 64;
  std::size_t work = 0;

  auto finish_layer = [&](std::map<Vec, Origin>& found) {
    Layer layer;
    for (auto& [v, o] : found) {
      layer.vectors.push_back(v);
      layer.origins.push_back(std::move(o));
    }
    total += layer.vectors.size();
    if (total > budget) over_budget(budget);
    layers_.push_back(std::move(layer));
  };

  {
    std::map<Vec, Origin> found;
    for (LeafId x = 0; x < sigma.leaf_count(); ++x) found.emplace(leaf_vector(nf, x), Origin{x, {}});
    finish_layer(found);
  }

  // Every vector seen at height <= h - 1, with a reference to one attaining tree.
  std::map<Vec, std::pair<unsigned, std::size_t>> seen;
  for (unsigned h = 1; h <= max_height; ++h) {
    const Layer& prev = layers_[h - 1];
    for (std::size_t i = 0; i < prev.vectors.size(); ++i) seen.emplace(prev.vectors[i], std::make_pair(h - 1, i));

    // Pool entries are indices into `refs`.
    std::vector<std::pair<unsigned, std::size_t>> refs;
    std::vector<const Vec*> vecs;
    std::vector<std::size_t> not_prev, in_prev, all;
    for (const auto& [v, ref] : seen) {
      const bool is_prev = std::binary_search(prev.vectors.begin(), prev.vectors.end(), v);
      const std::size_t k = refs.size();
      refs.push_back(ref);
      vecs.push_back(&v);
      all.push_back(k);
      (is_prev ? in_prev : not_prev).push_back(k);
    }
    // Children drawn from the previous layer must use their height h - 1 occurrence.
    std::vector<std::pair<unsigned, std::size_t>> prev_refs(refs.size());
    for (std::size_t k : in_prev) {
      auto it = std::lower_bound(prev.vectors.begin(), prev.vectors.end(), *vecs[k]);
      prev_refs[k] = {h - 1, static_cast<std::size_t>(it - prev.vectors.begin())};
    }

    std::map<Vec, Origin> found;
    for (SymbolId f = 0; f < sigma.symbol_count(); ++f) {
      const unsigned m = sigma.arity(f);
      std::vector<const Vec*> kids(m);
      for_each_frontier_tuple(m, not_prev, in_prev, all, [&](const std::vector<std::size_t>& choice, unsigned j) {
        if (++work > work_cap) over_budget(budget);
        for (unsigned i = 0; i < m; ++i) kids[i] = vecs[choice[i]];
        Vec v = combine(nf, f, kids);
        if (found.count(v)) return;
        Origin o{f, {}};
        for (unsigned i = 0; i < m; ++i) o.kids.push_back(i == j ? prev_refs[choice[i]] : refs[choice[i]]);
        found.emplace(std::move(v), std::move(o));
      });
    }
    finish_layer(found);
  }
}

Tree HeightLayers::witness(unsigned h, std::size_t i) const {
  const Origin& o = layers_.at(h).origins.at(i);
  if (h == 0) return Tree::leaf(o.label);
  std::vector<Tree> kids;
  for (const auto& [kh, ki] : o.kids) kids.push_back(witness(kh, ki));
  return Tree::node(o.label, std::move(kids));
}

unsigned dt_height_bound(const LDtRecognizer& f) {
  const auto ell = static_cast<unsigned>(d_omega(f).size());
  return (ell + 1) * static_cast<unsigned>(f.state_count());
}

Tree PumpDecomposition::reassemble(unsigned k) const {
  Tree t = s;
  for (unsigned i = 0; i < k; ++i) t = q.fill(t);
  return p.fill(t);
}

namespace {

const Tree& subtree_at(const Tree& t, std::span<const unsigned> path, std::size_t depth) {
  const Tree* cur = &t;
  for (std::size_t i = 0; i < depth; ++i) cur = &cur->kids[path[i]];
  return *cur;
}

Tree punch(const Tree& t, std::span<const unsigned> path) {
  if (path.empty()) return Tree::hole();
  Tree out = t;
  out.kids[path[0]] = punch(t.kids[path[0]], path.subspan(1));
  return out;
}

// The context from the node at depth `from` to the node at depth `to` along `path`.
Context slice(const Tree& t, std::span<const unsigned> path, std::size_t from, std::size_t to) {
  return Context(punch(subtree_at(t, path, from), path.subspan(from, to - from)));
}

}  // namespace

PumpDecomposition pump_decompose(const LDtRecognizer& f, const Tree& t) {
  validate_tree(t, *f.alphabet());
  const auto ell = static_cast<unsigned>(d_omega(f).size());
  const unsigned bound = dt_height_bound(f);
  const unsigned ht = height(t);
  if (ht < bound + 1) {
    throw Error(Errc::TreeTooShort, "tree height " + std::to_string(ht) + " is below the pumping bound " +
                                        std::to_string(bound + 1));
  }

  std::vector<unsigned> path;
  std::vector<State> states{f.initial};
  for (const Tree* cur = &t; cur->is_node();) {
    unsigned best = 0;
    for (unsigned i = 1; i < cur->kids.size(); ++i)
      if (height(cur->kids[i]) > height(cur->kids[best])) best = i;
    states.push_back(f.algebra.op(cur->label, states.back())[best]);
    path.push_back(best);
    cur = &cur->kids[best];
  }

  // Among the lowest bound + 1 nodes of the path some state occurs l + 2 times.
  const std::size_t lo = ht - bound;
  std::map<State, std::vector<std::size_t>> positions;
  std::vector<std::size_t> depths;
  for (std::size_t d = lo; d <= ht && depths.empty(); ++d) {
    auto& p = positions[states[d]];
    p.push_back(d);
    if (p.size() == ell + 2) depths = p;
  }
  if (depths.empty()) throw std::logic_error("pump_decompose: no repeated state on the path");

  // V_i = Phi(p0.q1...qi) is non-increasing in D_omega u {1}, so two neighbours agree.
  std::vector<Elem> v;
  for (std::size_t d : depths) v.push_back(eval_dt_context(f, f.initial, slice(t, path, 0, d)).value);
  std::size_t i = 1;
  while (i < v.size() && v[i - 1] != v[i]) ++i;
  if (i == v.size()) throw std::logic_error("pump_decompose: context values never stabilise");

  PumpDecomposition out{slice(t, path, 0, depths[i - 1]), slice(t, path, depths[i - 1], depths[i]),
                        subtree_at(t, path, depths[i])};
  const Elem target = eval_dt(f, t);
  for (unsigned k = 0; k <= 3; ++k)
    if (eval_dt(f, out.reassemble(k)) != target) throw std::logic_error("pump_decompose: pumping changed the value");
  return out;
}

std::vector<RangeEntry> range_dt_witnesses(const LDtRecognizer& f, std::size_t budget) {
  const ValueVectors vv(dt_to_ndt(f), budget);
  std::map<Elem, std::size_t> first;
  for (std::size_t i = 0; i < vv.size(); ++i) first.emplace(vv.vector(i)[f.initial], i);
  std::vector<RangeEntry> out;
  for (const auto& [e, i] : first) out.push_back(RangeEntry{e, vv.witness(i)});
  return out;
}

std::vector<Elem> range_dt(const LDtRecognizer& f, std::size_t budget) {
  std::vector<Elem> out;
  for (const auto& r : range_dt_witnesses(f, budget)) out.push_back(r.value);
  return out;
}

bool is_empty_support(const LDtRecognizer& f, std::size_t budget) {
  const auto r = range_dt(f, budget);
  return r.size() == 1 && r[0] == f.lattice->bottom();
}

bool is_finite_support(const LDtRecognizer& f, std::size_t budget) {
  if (is_empty_support(f, budget)) return true;
  const unsigned n = dt_height_bound(f) + 1;
  const HeightLayers layers(dt_to_ndt(f), 2 * n - 1, budget);
  for (unsigned h = n; h <= 2 * n - 1; ++h)
    for (const auto& v : layers.exact(h))
      if (v[f.initial] != f.lattice->bottom()) return false;
  return true;
}

bool is_constant(const LDtRecognizer& f, std::size_t budget) { return range_dt(f, budget).size() == 1; }

bool is_crisp(const LDtRecognizer& f, std::size_t budget) {
  const auto r = range_dt(f, budget);
  return std::all_of(r.begin(), r.end(),
                     [&](Elem e) { return e == f.lattice->bottom() || e == f.lattice->top(); });
}

namespace {

// Both recognizers side by side: states of `a` first, then those of `b`.
LNdtRecognizer disjoint_union(const LNdtRecognizer& a, const LNdtRecognizer& b) {
  require_same_alphabet(*a.alphabet(), *b.alphabet());
  require_same_lattice(*a.lattice, *b.lattice);
  const auto& sigma = *a.alphabet();
  const auto shift = static_cast<State>(a.state_count());
  std::vector<std::string> names;
  for (const auto& s : a.algebra.state_names()) names.push_back("1:" + s);
  for (const auto& s : b.algebra.state_names()) names.push_back("2:" + s);
  auto ops = a.algebra.ops();
  for (SymbolId f = 0; f < sigma.symbol_count(); ++f)
    for (auto tuples : b.algebra.ops()[f]) {
      for (auto& t : tuples)
        for (auto& s : t) s += shift;
      ops[f].push_back(std::move(tuples));
    }
  FinalTable omega = a.omega;
  for (LeafId x = 0; x < sigma.leaf_count(); ++x) omega[x].insert(omega[x].end(), b.omega[x].begin(), b.omega[x].end());
  StateSet initial = a.initial;
  for (State s : b.initial) initial.push_back(s + shift);
  return LNdtRecognizer{a.lattice, NdtAlgebra(a.alphabet(), std::move(names), std::move(ops)),
                        make_state_set(std::move(initial)), std::move(omega)};
}

Elem join_over(const Lattice& l, const Vec& v, const StateSet& h, State shift) {
  Elem out = l.bottom();
  for (State s : h) out = l.join(out, v[s + shift]);
  return out;
}

}  // namespace

DtComparison dt_compare(const LDtRecognizer& f, const LDtRecognizer& g, std::size_t budget) {
  f.validate();
  g.validate();
  const LNdtRecognizer both = disjoint_union(dt_to_ndt(f), dt_to_ndt(g));
  const ValueVectors vv(both, budget);
  const Lattice& l = *f.lattice;
  const State gi = static_cast<State>(f.state_count()) + g.initial;
  DtComparison out;
  for (std::size_t i = 0; i < vv.size(); ++i) {
    const Elem a = vv.vector(i)[f.initial];
    const Elem b = vv.vector(i)[gi];
    if (out.included && !l.leq(a, b)) {
      out.included = false;
      out.not_included = vv.witness(i);
    }
    if (out.equivalent && a != b) {
      out.equivalent = false;
      out.not_equal = vv.witness(i);
    }
    if (out.disjoint && l.meet(a, b) != l.bottom()) {
      out.disjoint = false;
      out.not_disjoint = vv.witness(i);
    }
  }
  return out;
}

NdtEquivalence ndt_compare(const LNdtRecognizer& nf, const LNdtRecognizer& ng, std::size_t budget) {
  nf.validate();
  ng.validate();
  require_distributive(*nf.lattice);
  const LNdtRecognizer both = disjoint_union(nf, ng);
  const ValueVectors vv(both, budget);
  const Lattice& l = *nf.lattice;
  const auto shift = static_cast<State>(nf.state_count());
  for (std::size_t i = 0; i < vv.size(); ++i) {
    if (join_over(l, vv.vector(i), nf.initial, 0) != join_over(l, vv.vector(i), ng.initial, shift)) {
      return NdtEquivalence{false, vv.witness(i)};
    }
  }
  return NdtEquivalence{true, std::nullopt};
}

bool ndt_equivalent(const LNdtRecognizer& nf, const LNdtRecognizer& ng, std::size_t budget) {
  return ndt_compare(nf, ng, budget).equivalent;
}

std::uint64_t ndt_height_bound(const LNdtRecognizer& nf, const LNdtRecognizer& ng) {
  auto generated = [](const LNdtRecognizer& r) {
    auto gens = omega_values(*r.lattice, r.omega);
    gens.push_back(r.lattice->bottom());
    gens.push_back(r.lattice->top());
    return r.lattice->sublattice_closure(gens).size();
  };
  const std::uint64_t h = generated(nf) * generated(ng);
  const std::uint64_t n = nf.state_count() * ng.state_count();
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / h) return std::numeric_limits<std::uint64_t>::max();
    out *= h;
  }
  return out;
}

NdtRecognizer level_set_ndt(const LDtRecognizer& f, Elem d) {
  f.validate();
  const Lattice& l = *f.lattice;
  l.check(d);
  const auto& sigma = *f.alphabet();
  const auto dset = d_omega(f);
  const std::size_t k = dset.size();
  const std::size_t n = f.state_count();
  auto pos = [&](Elem c) {
    return static_cast<std::size_t>(std::lower_bound(dset.begin(), dset.end(), c) - dset.begin());
  };
  auto state = [&](State a, std::size_t ci) { return static_cast<State>(a * k + ci); };

  std::vector<std::string> names;
  for (State a = 0; a < n; ++a)
    for (Elem c : dset) {
      const std::string parts[] = {f.algebra.state_name(a), l.name(c)};
      names.push_back(tuple_name(parts));
    }

  std::vector<std::vector<std::vector<StateTuple>>> ops(sigma.symbol_count());
  for (SymbolId g = 0; g < sigma.symbol_count(); ++g) {
    const unsigned m = sigma.arity(g);
    ops[g].resize(n * k);
    for (State a = 0; a < n; ++a) {
      const auto& next = f.algebra.op(g, a);
      std::vector<std::size_t> choice(m, 0);
      while (true) {
        Elem c = l.top();
        for (unsigned i = 0; i < m; ++i) c = l.meet(c, dset[choice[i]]);
        StateTuple t;
        for (unsigned i = 0; i < m; ++i) t.push_back(state(next[i], choice[i]));
        ops[g][state(a, pos(c))].push_back(std::move(t));
        unsigned i = m;
        while (i > 0 && ++choice[i - 1] == k) choice[--i] = 0;
        if (i == 0) break;
      }
    }
  }
  std::vector<std::vector<bool>> final(sigma.leaf_count(), std::vector<bool>(n * k, false));
  for (LeafId x = 0; x < sigma.leaf_count(); ++x)
    for (State a = 0; a < n; ++a) final[x][state(a, pos(f.omega[x][a]))] = true;
  StateSet initial;
  if (std::binary_search(dset.begin(), dset.end(), d)) initial.push_back(state(f.initial, pos(d)));
  NdtRecognizer out{NdtAlgebra(f.alphabet(), std::move(names), std::move(ops)), std::move(initial), std::move(final)};
  out.validate();
  return out;
}

bool level_preimage_nonempty(const LDtRecognizer& f, std::span<const Elem> e) {
  const auto dset = d_omega(f);
  for (Elem d : e) {
    f.lattice->check(d);
    if (std::binary_search(dset.begin(), dset.end(), d) && crisp_ndt_nonempty(level_set_ndt(f, d))) return true;
  }
  return false;
}

}  // namespace fta
