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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fta/automata.hpp"
#include "fta/fuzzy_rec.hpp"
#include "fta/terms.hpp"

namespace fta {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// The attainable value vectors (Phi_{NF,a}(t))_a of an L-NDT recognizer,
/// computed bottom-up to a fixpoint. Vectors are discovered in order of the
/// least height of a tree attaining them, and each carries such a tree.
class ValueVectors {
 public:
  explicit ValueVectors(const LNdtRecognizer& nf, std::size_t budget = kDefaultBudget);

  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<Elem>& vector(std::size_t i) const { return vectors_.at(i); }
  unsigned height(std::size_t i) const { return heights_.at(i); }
  Tree witness(std::size_t i) const;

 private:
  struct Origin {
    bool leaf = true;
    std::uint32_t label = 0;
    std::vector<std::size_t> kids;
  };

  std::vector<std::vector<Elem>> vectors_;
  std::vector<unsigned> heights_;
  std::vector<Origin> origins_;
};

/// The vectors attainable by trees of each exact height 0..max_height.
class HeightLayers {
 public:
  HeightLayers(const LNdtRecognizer& nf, unsigned max_height, std::size_t budget = kDefaultBudget);

  unsigned max_height() const noexcept { return static_cast<unsigned>(layers_.size()) - 1; }
  /// Sorted.
  const std::vector<std::vector<Elem>>& exact(unsigned h) const { return layers_.at(h).vectors; }
  /// A tree of height exactly h attaining exact(h)[i]. Its size may be exponential in h.
  Tree witness(unsigned h, std::size_t i) const;

 private:
  struct Origin {
    std::uint32_t label = 0;
    std::vector<std::pair<unsigned, std::size_t>> kids;  // (height, index)
  };
  struct Layer {
    std::vector<std::vector<Elem>> vectors;
    std::vector<Origin> origins;
  };

  std::vector<Layer> layers_;
};

/// (l + 1) * n with l = |D_omega| and n the number of states.
unsigned dt_height_bound(const LDtRecognizer& f);

struct PumpDecomposition {
  Context p;
  Context q;
  Tree s;

  /// p . q^k . s
  Tree reassemble(unsigned k) const;
};

/// Splits t = p.q.s with depth(q) >= 1 so that every p.q^k.s has the value of t.
/// q lies within the lowest dt_height_bound(f) + 1 nodes of a longest path.
PumpDecomposition pump_decompose(const LDtRecognizer& f, const Tree& t);

struct RangeEntry {
  Elem value;
  Tree witness;  // a lowest tree with this value
};

std::vector<RangeEntry> range_dt_witnesses(const LDtRecognizer& f, std::size_t budget = kDefaultBudget);
/// ran(Phi_F), sorted by id.
std::vector<Elem> range_dt(const LDtRecognizer& f, std::size_t budget = kDefaultBudget);

bool is_empty_support(const LDtRecognizer& f, std::size_t budget = kDefaultBudget);
/// Infinite support iff some tree with height in [N, 2N - 1], N = dt_height_bound(f) + 1, has a nonzero value.
bool is_finite_support(const LDtRecognizer& f, std::size_t budget = kDefaultBudget);
bool is_constant(const LDtRecognizer& f, std::size_t budget = kDefaultBudget);
bool is_crisp(const LDtRecognizer& f, std::size_t budget = kDefaultBudget);

struct DtComparison {
  bool included = true;
  bool equivalent = true;
  bool disjoint = true;
  std::optional<Tree> not_included;  // Phi_F(t) not <= Phi_G(t)
  std::optional<Tree> not_equal;
  std::optional<Tree> not_disjoint;  // Phi_F(t) ^ Phi_G(t) > 0
};

DtComparison dt_compare(const LDtRecognizer& f, const LDtRecognizer& g, std::size_t budget = kDefaultBudget);

struct NdtEquivalence {
  bool equivalent = true;
  std::optional<Tree> counterexample;
};

NdtEquivalence ndt_compare(const LNdtRecognizer& nf, const LNdtRecognizer& ng, std::size_t budget = kDefaultBudget);
bool ndt_equivalent(const LNdtRecognizer& nf, const LNdtRecognizer& ng, std::size_t budget = kDefaultBudget);

/// h^n for the parallel product, with h = |D_F| * |D_G| where D is the
/// sublattice generated by the final values and the bounds. Saturates at UINT64_MAX.
std::uint64_t ndt_height_bound(const LNdtRecognizer& nf, const LNdtRecognizer& ng);

/// Crisp NDT recognizer of Phi_F^{-1}(d) on states A x D_omega. Outside
/// D_omega the initial set is empty.
NdtRecognizer level_set_ndt(const LDtRecognizer& f, Elem d);
bool level_preimage_nonempty(const LDtRecognizer& f, std::span<const Elem> e);

}  // namespace fta
