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

#include "fta/oracle.hpp"

#include <algorithm>
#include <string>

#include "fta/error.hpp"

namespace fta::oracle {

namespace {

// Meet and join recomputed from the order relation alone.
class RefOps {
 public:
  explicit RefOps(const Lattice& l) : l_(l), elems_(l.elements()) {}

  Elem meet(Elem a, Elem b) const {
    for (Elem c : elems_) {
      if (!l_.leq(c, a) || !l_.leq(c, b)) continue;
      bool greatest = true;
      for (Elem d : elems_)
        if (l_.leq(d, a) && l_.leq(d, b) && !l_.leq(d, c)) greatest = false;
      if (greatest) return c;
    }
    throw std::logic_error("RefOps: no meet");
  }

  Elem join(Elem a, Elem b) const {
    for (Elem c : elems_) {
      if (!l_.leq(a, c) || !l_.leq(b, c)) continue;
      bool least = true;
      for (Elem d : elems_)
        if (l_.leq(a, d) && l_.leq(b, d) && !l_.leq(c, d)) least = false;
      if (least) return c;
    }
    throw std::logic_error("RefOps: no join");
  }

  Elem bottom() const {
    for (Elem c : elems_)
      if (std::all_of(elems_.begin(), elems_.end(), [&](Elem d) { return l_.leq(c, d); })) return c;
    throw std::logic_error("RefOps: no bottom");
  }

  Elem top() const {
    for (Elem c : elems_)
      if (std::all_of(elems_.begin(), elems_.end(), [&](Elem d) { return l_.leq(d, c); })) return c;
    throw std::logic_error("RefOps: no top");
  }

 private:
  const Lattice& l_;
  std::vector<Elem> elems_;
};

void check_same(const FiniteFuzzyLanguage& a, const FiniteFuzzyLanguage& b) {
  require_same_lattice(*a.lattice(), *b.lattice());
  require_same_alphabet(*a.alphabet(), *b.alphabet());
}

void collect_leaf_positions(Tree& t, LeafId x, std::vector<Tree*>& out) {
  if (t.is_leaf()) {
    if (t.label == x) out.push_back(&t);
    return;
  }
  for (auto& k : t.kids) collect_leaf_positions(k, x, out);
}

}  // namespace

std::vector<Tree> enum_trees(const RankedAlphabet& alphabet, unsigned h, std::size_t budget) {
  std::vector<Tree> level;
  for (LeafId x = 0; x < alphabet.leaf_count(); ++x) level.push_back(Tree::leaf(x));
  for (unsigned k = 0; k < h; ++k) {
    std::vector<Tree> next;
    for (LeafId x = 0; x < alphabet.leaf_count(); ++x) next.push_back(Tree::leaf(x));
    for (SymbolId f = 0; f < alphabet.symbol_count(); ++f) {
      const unsigned m = alphabet.arity(f);
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        if (next.size() >= budget) throw Error(Errc::BudgetExceeded, "tree enumeration exceeds the budget");
        std::vector<Tree> kids;
        for (std::size_t i : pick) kids.push_back(level[i]);
        next.push_back(Tree::node(f, std::move(kids)));
        std::size_t i = m;
        while (i > 0 && ++pick[i - 1] == level.size()) pick[--i] = 0;
        if (i == 0) break;
      }
    }
    level = std::move(next);
  }
  return level;
}

FiniteFuzzyLanguage::FiniteFuzzyLanguage(LatticePtr lattice, AlphabetPtr alphabet)
    : lattice_(std::move(lattice)), alphabet_(std::move(alphabet)) {}

Elem FiniteFuzzyLanguage::operator()(const Tree& t) const {
  const auto it = support_.find(t);
  return it == support_.end() ? lattice_->bottom() : it->second;
}

void FiniteFuzzyLanguage::set(const Tree& t, Elem v) {
  lattice_->check(v);
  if (v == lattice_->bottom()) {
    support_.erase(t);
  } else {
    support_[t] = v;
  }
}

void FiniteFuzzyLanguage::raise(const Tree& t, Elem v) { set(t, RefOps(*lattice_).join((*this)(t), v)); }

FiniteFuzzyLanguage FiniteFuzzyLanguage::truncated(unsigned h) const {
  FiniteFuzzyLanguage out(lattice_, alphabet_);
  for (const auto& [t, v] : support_)
    if (height(t) <= h) out.support_.emplace(t, v);
  return out;
}

FiniteFuzzyLanguage characteristic(LatticePtr lattice, AlphabetPtr alphabet, const std::vector<Tree>& trees) {
  FiniteFuzzyLanguage out(lattice, alphabet);
  for (const auto& t : trees) {
    validate_tree(t, *alphabet);
    out.set(t, lattice->top());
  }
  return out;
}

FiniteFuzzyLanguage lang_union(const FiniteFuzzyLanguage& a, const FiniteFuzzyLanguage& b) {
  check_same(a, b);
  FiniteFuzzyLanguage out = a;
  for (const auto& [t, v] : b.support()) out.raise(t, v);
  return out;
}

FiniteFuzzyLanguage lang_intersection(const FiniteFuzzyLanguage& a, const FiniteFuzzyLanguage& b) {
  check_same(a, b);
  const RefOps ops(*a.lattice());
  FiniteFuzzyLanguage out(a.lattice(), a.alphabet());
  for (const auto& [t, v] : a.support()) out.set(t, ops.meet(v, b(t)));
  return out;
}

FiniteFuzzyLanguage lang_scalar(Elem c, const FiniteFuzzyLanguage& a) {
  a.lattice()->check(c);
  const RefOps ops(*a.lattice());
  FiniteFuzzyLanguage out(a.lattice(), a.alphabet());
  for (const auto& [t, v] : a.support()) out.set(t, ops.meet(c, v));
  return out;
}

FiniteFuzzyLanguage lang_map(const LatticeMorphism& psi, const FiniteFuzzyLanguage& a) {
  require_same_lattice(*psi.source, *a.lattice());
  FiniteFuzzyLanguage out(psi.target, a.alphabet());
  for (const auto& [t, v] : a.support()) out.set(t, psi.image.at(v.id));
  return out;
}

Elem PathLanguage::operator()(const PathWord& r) const {
  const auto it = values.find(r);
  return it == values.end() ? fallback : it->second;
}

PathLanguage tde_bounded(const FiniteFuzzyLanguage& phi) {
  const RefOps ops(*phi.lattice());
  PathLanguage out{phi.lattice(), {}, ops.bottom()};
  for (const auto& [t, v] : phi.support())
    for (const auto& r : delta(t)) {
      auto [it, fresh] = out.values.emplace(r, v);
      if (!fresh) it->second = ops.join(it->second, v);
    }
  return out;
}

Elem tdei_exact(const PathLanguage& lambda, const Tree& t) {
  const RefOps ops(*lambda.lattice);
  Elem v = ops.top();
  for (const auto& r : delta(t)) v = ops.meet(v, lambda(r));
  return v;
}

FiniteFuzzyLanguage big_delta_bounded(const FiniteFuzzyLanguage& phi, unsigned h) {
  const auto lambda = tde_bounded(phi);
  FiniteFuzzyLanguage out(phi.lattice(), phi.alphabet());
  for (const auto& t : enum_trees(*phi.alphabet(), h)) out.set(t, tdei_exact(lambda, t));
  return out;
}

bool is_path_closed_bounded(const FiniteFuzzyLanguage& phi, unsigned h) {
  return big_delta_bounded(phi, h) == phi.truncated(h);
}

FiniteFuzzyLanguage x_product(const FiniteFuzzyLanguage& phi, const FiniteFuzzyLanguage& psi, LeafId x) {
  check_same(phi, psi);
  if (x >= phi.alphabet()->leaf_count()) throw Error(Errc::InvalidArgument, "unknown leaf");
  const RefOps ops(*phi.lattice());
  std::vector<std::pair<Tree, Elem>> choices(phi.support().begin(), phi.support().end());
  FiniteFuzzyLanguage out(phi.lattice(), phi.alphabet());
  for (const auto& [s, w] : psi.support()) {
    Tree skeleton = s;
    std::vector<Tree*> holes;
    collect_leaf_positions(skeleton, x, holes);
    if (holes.empty()) {
      out.raise(s, w);
      continue;
    }
    if (choices.empty()) continue;
    std::vector<std::size_t> pick(holes.size(), 0);
    while (true) {
      Tree t = skeleton;
      std::vector<Tree*> slots;
      collect_leaf_positions(t, x, slots);
      Elem v = w;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        v = ops.meet(v, choices[pick[i]].second);
        *slots[i] = choices[pick[i]].first;
      }
      out.raise(t, v);
      std::size_t i = pick.size();
      while (i > 0 && ++pick[i - 1] == choices.size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

XIteration x_iteration(const FiniteFuzzyLanguage& phi, LeafId x, unsigned k_max, unsigned max_height) {
  FiniteFuzzyLanguage cur(phi.lattice(), phi.alphabet());
  cur.set(Tree::leaf(x), RefOps(*phi.lattice()).top());
  XIteration out{cur, 0, false};
  for (unsigned k = 0; k < k_max; ++k) {
    auto next = lang_union(x_product(out.language, phi, x), out.language).truncated(max_height);
    out.rounds = k + 1;
    if (next == out.language) {
      out.stabilized = true;
      break;
    }
    out.language = std::move(next);
  }
  return out;
}

Elem subalgebra_closure_value(const FiniteFuzzyLanguage& phi, const Tree& t) {
  const RefOps ops(*phi.lattice());
  if (t.is_leaf()) return phi(t);
  Elem m = ops.top();
  for (const auto& k : t.kids) m = ops.meet(m, subalgebra_closure_value(phi, k));
  return ops.join(phi(t), m);
}

LNdtRecognizer finite_language_ndt(const FiniteFuzzyLanguage& phi) {
  const auto& sigma = *phi.alphabet();
  const Elem zero = phi.lattice()->bottom();
  std::vector<std::pair<Tree, Elem>> states;
  std::map<std::pair<Tree, Elem>, State> index;
  auto intern = [&](const Tree& s, Elem v) {
    auto [it, fresh] = index.emplace(std::make_pair(s, v), static_cast<State>(states.size()));
    if (fresh) states.emplace_back(s, v);
    return it->second;
  };
  std::vector<State> initial;
  for (const auto& [t, v] : phi.support()) initial.push_back(intern(t, v));
  // The empty language still needs one (unreachable) state.
  if (states.empty()) intern(Tree::leaf(0), zero);

  std::vector<std::vector<std::vector<StateTuple>>> ops(sigma.symbol_count());
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto [s, v] = states[k];
    for (SymbolId f = 0; f < sigma.symbol_count(); ++f) {
      std::vector<StateTuple> tuples;
      if (s.is_node() && s.label == f) {
        StateTuple tuple;
        for (const auto& kid : s.kids) tuple.push_back(intern(kid, v));
        tuples.push_back(std::move(tuple));
      }
      ops[f].push_back(std::move(tuples));
    }
  }
  std::vector<std::string> names;
  FinalTable omega(sigma.leaf_count());
  for (std::size_t k = 0; k < states.size(); ++k) {
    names.push_back("q" + std::to_string(k));
    for (LeafId x = 0; x < sigma.leaf_count(); ++x) {
      const bool hit = states[k].first.is_leaf() && states[k].first.label == x;
      omega[x].push_back(hit ? states[k].second : zero);
    }
  }
  return LNdtRecognizer{phi.lattice(), NdtAlgebra(phi.alphabet(), std::move(names), std::move(ops)),
                        make_state_set(std::move(initial)), std::move(omega)};
}

namespace {

Elem dt_ref(const LDtRecognizer& f, const RefOps& ops, State a, const Tree& t) {
  if (t.is_leaf()) return f.omega.at(t.label).at(a);
  const auto& next = f.algebra.op(t.label, a);
  Elem v = ops.top();
  for (std::size_t i = 0; i < t.kids.size(); ++i) v = ops.meet(v, dt_ref(f, ops, next.at(i), t.kids[i]));
  return v;
}

std::vector<Elem> ndt_ref(const LNdtRecognizer& nf, const RefOps& ops, const Tree& t) {
  const std::size_t n = nf.state_count();
  std::vector<Elem> v(n, ops.bottom());
  if (t.is_leaf()) {
    for (State a = 0; a < n; ++a) v[a] = nf.omega.at(t.label).at(a);
    return v;
  }
  std::vector<std::vector<Elem>> kids;
  for (const auto& k : t.kids) kids.push_back(ndt_ref(nf, ops, k));
  for (State a = 0; a < n; ++a)
    for (const auto& tuple : nf.algebra.op(t.label, a)) {
      Elem m = ops.top();
      for (std::size_t i = 0; i < tuple.size(); ++i) m = ops.meet(m, kids[i][tuple[i]]);
      v[a] = ops.join(v[a], m);
    }
  return v;
}

std::vector<Elem> general_ref(const GeneralLNdtRecognizer& ng, const RefOps& ops, const Tree& t) {
  const std::size_t n = ng.states.size();
  std::vector<Elem> v(n, ops.bottom());
  if (t.is_leaf()) {
    for (State a = 0; a < n; ++a) v[a] = ng.omega.at(t.label).at(a);
    return v;
  }
  std::vector<std::vector<Elem>> kids;
  for (const auto& k : t.kids) kids.push_back(general_ref(ng, ops, k));
  const std::size_t m = t.kids.size();
  for (State a = 0; a < n; ++a) {
    std::vector<State> tuple(m, 0);
    while (true) {
      Elem c = ng.gamma_at(t.label, a, tuple);
      for (std::size_t i = 0; i < m; ++i) c = ops.meet(c, kids[i][tuple[i]]);
      v[a] = ops.join(v[a], c);
      std::size_t i = m;
      while (i > 0 && ++tuple[i - 1] == n) tuple[--i] = 0;
      if (i == 0) break;
    }
  }
  return v;
}

bool crisp_dt_ref(const DtRecognizer& d, State a, const Tree& t) {
  if (t.is_leaf()) return d.final.at(t.label).at(a);
  const auto& next = d.algebra.op(t.label, a);
  for (std::size_t i = 0; i < t.kids.size(); ++i)
    if (!crisp_dt_ref(d, next.at(i), t.kids[i])) return false;
  return true;
}

bool crisp_ndt_ref(const NdtRecognizer& n, State a, const Tree& t) {
  if (t.is_leaf()) return n.final.at(t.label).at(a);
  for (const auto& tuple : n.algebra.op(t.label, a)) {
    bool all = true;
    for (std::size_t i = 0; i < tuple.size() && all; ++i) all = crisp_ndt_ref(n, tuple[i], t.kids[i]);
    if (all) return true;
  }
  return false;
}

}  // namespace

Elem eval_reference(const LDtRecognizer& f, const Tree& t) {
  validate_tree(t, *f.alphabet());
  return dt_ref(f, RefOps(*f.lattice), f.initial, t);
}

Elem eval_reference(const LNdtRecognizer& nf, const Tree& t) {
  validate_tree(t, *nf.alphabet());
  const RefOps ops(*nf.lattice);
  const auto v = ndt_ref(nf, ops, t);
  Elem out = ops.bottom();
  for (State a : nf.initial) out = ops.join(out, v[a]);
  return out;
}

Elem eval_reference(const GeneralLNdtRecognizer& ng, const Tree& t) {
  validate_tree(t, *ng.alphabet);
  const RefOps ops(*ng.lattice);
  const auto v = general_ref(ng, ops, t);
  Elem out = ops.bottom();
  for (State a = 0; a < v.size(); ++a) out = ops.join(out, ops.meet(ng.iota[a], v[a]));
  return out;
}

bool eval_reference(const DtRecognizer& d, const Tree& t) {
  validate_tree(t, *d.algebra.alphabet());
  return crisp_dt_ref(d, d.initial, t);
}

bool eval_reference(const NdtRecognizer& n, const Tree& t) {
  validate_tree(t, *n.algebra.alphabet());
  return std::any_of(n.initial.begin(), n.initial.end(), [&](State a) { return crisp_ndt_ref(n, a, t); });
}

}  // namespace fta::oracle
