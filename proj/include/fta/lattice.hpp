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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fta {

/// An element of a finite lattice, as an index into its carrier.
/// Elements of different lattices must never be compared.
struct Elem {
  std::uint32_t id = 0;

  friend auto operator<=>(const Elem&, const Elem&) = default;
};

struct LatticeClass {
  bool is_chain = false;
  bool is_distributive = false;
  bool zero_meet_irreducible = false;

  friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
};

/// A finite, nontrivial bounded lattice with tabulated order, meet and join.
///
/// Instances are immutable once built; all construction paths go through
/// from_order(), which derives the operation tables from the order and
/// rejects anything that is not a bounded lattice.
class Lattice {
 public:
  /// Builds a lattice from element names and a set of strict relations
  /// `lo < hi` (covering pairs or any generating subset of the order).
  static Lattice from_order(std::string label, std::vector<std::string> names,
                            std::span<const std::pair<std::size_t, std::size_t>> less);

  /// Total order in declaration order; names[0] is the bottom.
  static Lattice chain(std::string label, std::vector<std::string> names);

  /// The two-element chain {0,1}.
  static Lattice boolean(std::string label = "B2");

  /// Componentwise order on L x K. Element names are "(l,k)".
  static Lattice product(const Lattice& left, const Lattice& right);

  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return names_.size(); }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  bool leq(Elem a, Elem b) const;
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const;
  Elem join(Elem a, Elem b) const;

  Elem meet_all(std::span<const Elem> xs) const;
  Elem join_all(std::span<const Elem> xs) const;

  /// Smallest meet-closed superset of `gens`, sorted by id.
  std::vector<Elem> meet_closure(std::span<const Elem> gens) const;
  /// Smallest superset of `gens` closed under meet and join, sorted by id.
  /// The empty set generates the empty set.
  std::vector<Elem> sublattice_closure(std::span<const Elem> gens) const;

  LatticeClass classify() const;

  const std::string& name(Elem e) const;
  std::optional<Elem> find(std::string_view name) const;
  /// Like find(), but throws ForeignElement for unknown names.
  Elem at(std::string_view name) const;
  void check(Elem e) const;
  bool contains(Elem e) const noexcept { return e.id < names_.size(); }

  std::vector<Elem> elements() const;
  /// Covering pairs (lo, hi) of the order, in a deterministic order.
  std::vector<std::pair<Elem, Elem>> covers() const;

  /// Product bookkeeping; only meaningful for lattices built by product().
  bool is_product() const noexcept { return right_size_ != 0; }
  Elem pair(Elem left, Elem right) const;
  Elem first(Elem e) const;
  Elem second(Elem e) const;

  /// Structural equality: same names in the same order with the same order relation.
  friend bool operator==(const Lattice& a, const Lattice& b);

 private:
  Lattice() = default;

  std::size_t idx(Elem a, Elem b) const { return a.id * names_.size() + b.id; }

  std::string label_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  Elem bottom_;
  Elem top_;
  std::size_t right_size_ = 0;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Throws LatticeMismatch unless both lattices are structurally equal.
void require_same_lattice(const Lattice& a, const Lattice& b);

/// A map between the carriers of two lattices.
struct LatticeMorphism {
  LatticePtr source;
  LatticePtr target;
  std::vector<Elem> image;  // indexed by source element id

  Elem operator()(Elem e) const;
  /// psi(a ^ b) == psi(a) ^ psi(b) for all pairs.
  bool preserves_meets() const;
  /// Throws NotMeetMorphism (or ValidationError for malformed tables).
  void validate_meet_morphism() const;
};

LatticeMorphism identity_morphism(const LatticePtr& lattice);
LatticeMorphism projection(const LatticePtr& product, const LatticePtr& factor, bool first);

}  // namespace fta
