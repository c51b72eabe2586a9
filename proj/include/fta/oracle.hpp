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

// Brute-force reference semantics. Nothing here calls the production
// evaluators in fuzzy_rec or automata.

#include <cstddef>
#include <map>
#include <vector>

#include "fta/automata.hpp"
#include "fta/fuzzy_rec.hpp"
#include "fta/lattice.hpp"
#include "fta/terms.hpp"

namespace fta::oracle {

inline constexpr std::size_t kDefaultTreeBudget = 2'000'000;

/// All trees of height <= h: leaves first, then f(t1..tm) over the trees of
/// height <= h-1 in lexicographic order. Throws BudgetExceeded past `budget`.
std::vector<Tree> enum_trees(const RankedAlphabet& alphabet, unsigned h, std::size_t budget = kDefaultTreeBudget);

/// A fuzzy tree language with finite support. Zero values are never stored.
class FiniteFuzzyLanguage {
 public:
  FiniteFuzzyLanguage(LatticePtr lattice, AlphabetPtr alphabet);

  const LatticePtr& lattice() const noexcept { return lattice_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const std::map<Tree, Elem>& support() const noexcept { return support_; }

  Elem operator()(const Tree& t) const;
  void set(const Tree& t, Elem v);
  /// Joins v into the value at t.
  void raise(const Tree& t, Elem v);

  /// Keeps only trees of height <= h.
  FiniteFuzzyLanguage truncated(unsigned h) const;

  friend bool operator==(const FiniteFuzzyLanguage& a, const FiniteFuzzyLanguage& b) {
    return a.support_ == b.support_;
  }

 private:
  LatticePtr lattice_;
  AlphabetPtr alphabet_;
  std::map<Tree, Elem> support_;
};

/// The characteristic function of a finite set of trees.
FiniteFuzzyLanguage characteristic(LatticePtr lattice, AlphabetPtr alphabet, const std::vector<Tree>& trees);

FiniteFuzzyLanguage lang_union(const FiniteFuzzyLanguage& a, const FiniteFuzzyLanguage& b);
FiniteFuzzyLanguage lang_intersection(const FiniteFuzzyLanguage& a, const FiniteFuzzyLanguage& b);
FiniteFuzzyLanguage lang_scalar(Elem c, const FiniteFuzzyLanguage& a);
FiniteFuzzyLanguage lang_map(const LatticeMorphism& psi, const FiniteFuzzyLanguage& a);

/// A fuzzy path language given by a finite table and a value for every other path.
struct PathLanguage {
  LatticePtr lattice;
  std::map<PathWord, Elem> values;
  Elem fallback;

  Elem operator()(const PathWord& r) const;
};

/// delta~ of a finite-support language; exact because the join is finite.
PathLanguage tde_bounded(const FiniteFuzzyLanguage& phi);
/// The meet of lambda over the paths of t.
Elem tdei_exact(const PathLanguage& lambda, const Tree& t);
/// Delta~(phi) on all trees of height <= h.
FiniteFuzzyLanguage big_delta_bounded(const FiniteFuzzyLanguage& phi, unsigned h);
/// Whether Delta~(phi) and phi agree on trees of height <= h.
bool is_path_closed_bounded(const FiniteFuzzyLanguage& phi, unsigned h);

/// (phi ._x psi), with the join taken over supp(psi).
FiniteFuzzyLanguage x_product(const FiniteFuzzyLanguage& phi, const FiniteFuzzyLanguage& psi, LeafId x);

struct XIteration {
  FiniteFuzzyLanguage language;
  unsigned rounds = 0;
  bool stabilized = false;
};

/// phi^{k,x} for k <= k_max, restricted to trees of height <= max_height.
/// Stabilized when a round adds nothing within the window.
XIteration x_iteration(const FiniteFuzzyLanguage& phi, LeafId x, unsigned k_max, unsigned max_height);

/// The value at t of the least fuzzy subalgebra containing phi.
Elem subalgebra_closure_value(const FiniteFuzzyLanguage& phi, const Tree& t);

/// An L-NDT recognizer with one branch per support tree.
LNdtRecognizer finite_language_ndt(const FiniteFuzzyLanguage& phi);

Elem eval_reference(const LDtRecognizer& f, const Tree& t);
Elem eval_reference(const LNdtRecognizer& nf, const Tree& t);
Elem eval_reference(const GeneralLNdtRecognizer& ng, const Tree& t);
bool eval_reference(const DtRecognizer& d, const Tree& t);
bool eval_reference(const NdtRecognizer& n, const Tree& t);

/// Values of the recognizer on every tree of height <= h, via eval_reference.
template <class R>
FiniteFuzzyLanguage tabulate(const R& r, unsigned h, std::size_t budget = kDefaultTreeBudget) {
  FiniteFuzzyLanguage out(r.lattice, r.alphabet());
  for (const auto& t : enum_trees(*r.alphabet(), h, budget)) out.set(t, eval_reference(r, t));
  return out;
}

}  // namespace fta::oracle
