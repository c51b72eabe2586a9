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

#include "fta/lattice.hpp"

#include <algorithm>
#include <set>

#include "fta/error.hpp"

namespace fta {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

}  // namespace

Lattice Lattice::from_order(std::string label, std::vector<std::string> names,
                            std::span<const std::pair<std::size_t, std::size_t>> less) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(Errc::MissingBound, "lattice '" + label + "' has no elements");
  {
    std::set<std::string> seen;
    for (const auto& nm : names) {
      if (!seen.insert(nm).second) {
        throw Error(Errc::ValidationError, "duplicate element '" + nm + "' in lattice '" + label + "'");
      }
    }
  }

  Lattice lat;
  lat.label_ = std::move(label);
  lat.names_ = std::move(names);
  auto& leq = lat.leq_;
  leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [lo, hi] : less) {
    if (lo >= n || hi >= n) throw Error(Errc::ForeignElement, "order pair out of range");
    if (lo == hi) throw Error(Errc::CycleInOrder, "element '" + lat.names_[lo] + "' below itself");
    leq[lo * n + hi] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(Errc::CycleInOrder, "'" + lat.names_[i] + "' and '" + lat.names_[j] + "' lie on a cycle");
      }

  std::uint32_t bottom = kNone;
  std::uint32_t top = kNone;
  for (std::uint32_t i = 0; i < n; ++i) {
    bool below_all = true;
    bool above_all = true;
    for (std::size_t j = 0; j < n; ++j) {
      below_all = below_all && leq[i * n + j];
      above_all = above_all && leq[j * n + i];
    }
    if (below_all) bottom = i;
    if (above_all) top = i;
  }
  if (bottom == kNone) throw Error(Errc::MissingBound, "lattice '" + lat.label_ + "' has no least element");
  if (top == kNone) throw Error(Errc::MissingBound, "lattice '" + lat.label_ + "' has no greatest element");
  if (bottom == top) throw Error(Errc::TrivialLattice, "lattice '" + lat.label_ + "' has 0 = 1");
  lat.bottom_ = Elem{bottom};
  lat.top_ = Elem{top};

  lat.meet_.assign(n * n, kNone);
  lat.join_.assign(n * n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t glb = kNone;
      std::uint32_t lub = kNone;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (leq[c * n + a] && leq[c * n + b] && (glb == kNone || leq[glb * n + c])) {
          glb = c;
        }
        if (leq[a * n + c] && leq[b * n + c] && (lub == kNone || leq[c * n + lub])) {
          lub = c;
        }
      }
      // The candidates found by the scan must dominate (resp. be dominated by) every bound.
      for (std::uint32_t c = 0; c < n; ++c) {
        if (leq[c * n + a] && leq[c * n + b] && !leq[c * n + glb]) glb = kNone;
        if (leq[a * n + c] && leq[b * n + c] && lub != kNone && !leq[lub * n + c]) lub = kNone;
        if (glb == kNone) break;
      }
      if (glb == kNone || lub == kNone) {
        throw Error(Errc::NotALattice, "'" + lat.names_[a] + "' and '" + lat.names_[b] +
                                           "' have no " + (glb == kNone ? "greatest lower" : "least upper") +
                                           " bound");
      }
      lat.meet_[a * n + b] = glb;
      lat.join_[a * n + b] = lub;
    }
  }
  return lat;
}

Lattice Lattice::chain(std::string label, std::vector<std::string> names) {
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) less.emplace_back(i, i + 1);
  return from_order(std::move(label), std::move(names), less);
}

Lattice Lattice::boolean(std::string label) { return chain(std::move(label), {"0", "1"}); }

Lattice Lattice::product(const Lattice& left, const Lattice& right) {
  const std::size_t m = right.size();
  std::vector<std::string> names;
  names.reserve(left.size() * m);
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) names.push_back("(" + left.names_[i] + "," + right.names_[j] + ")");
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (auto [lo, hi] : left.covers())
    for (std::size_t j = 0; j < m; ++j) less.emplace_back(lo.id * m + j, hi.id * m + j);
  for (auto [lo, hi] : right.covers())
    for (std::size_t i = 0; i < left.size(); ++i) less.emplace_back(i * m + lo.id, i * m + hi.id);
  Lattice lat = from_order(left.label_ + "x" + right.label_, std::move(names), less);
  lat.right_size_ = m;
  return lat;
}

bool Lattice::leq(Elem a, Elem b) const {
  check(a);
  check(b);
  return leq_[idx(a, b)] != 0;
}

Elem Lattice::meet(Elem a, Elem b) const {
  check(a);
  check(b);
  return Elem{meet_[idx(a, b)]};
}

Elem Lattice::join(Elem a, Elem b) const {
  check(a);
  check(b);
  return Elem{join_[idx(a, b)]};
}

Elem Lattice::meet_all(std::span<const Elem> xs) const {
  if (xs.empty()) throw Error(Errc::EmptySequence, "meet of an empty sequence");
  Elem acc = xs.front();
  check(acc);
  for (Elem e : xs.subspan(1)) acc = meet(acc, e);
  return acc;
}

Elem Lattice::join_all(std::span<const Elem> xs) const {
  if (xs.empty()) throw Error(Errc::EmptySequence, "join of an empty sequence");
  Elem acc = xs.front();
  check(acc);
  for (Elem e : xs.subspan(1)) acc = join(acc, e);
  return acc;
}

namespace {

template <typename Step>
std::vector<Elem> close_under(const Lattice& lat, std::span<const Elem> gens, Step step) {
  std::vector<bool> in(lat.size(), false);
  std::vector<Elem> members;
  for (Elem e : gens) {
    lat.check(e);
    if (!in[e.id]) {
      in[e.id] = true;
      members.push_back(e);
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        step(members[i], members[j], [&](Elem r) {
          if (!in[r.id]) {
            in[r.id] = true;
            members.push_back(r);
            grew = true;
          }
        });
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<Elem> Lattice::meet_closure(std::span<const Elem> gens) const {
  return close_under(*this, gens, [this](Elem a, Elem b, auto add) { add(meet(a, b)); });
}

std::vector<Elem> Lattice::sublattice_closure(std::span<const Elem> gens) const {
  return close_under(*this, gens, [this](Elem a, Elem b, auto add) {
    add(meet(a, b));
    add(join(a, b));
  });
}

LatticeClass Lattice::classify() const {
  LatticeClass cls{true, true, true};
  const auto all = elements();
  for (Elem a : all)
    for (Elem b : all) {
      if (!leq(a, b) && !leq(b, a)) cls.is_chain = false;
      if (a != bottom_ && b != bottom_ && meet(a, b) == bottom_) cls.zero_meet_irreducible = false;
    }
  for (Elem a : all)
    for (Elem b : all)
      for (Elem c : all)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
          cls.is_distributive = false;
          return cls;
        }
  return cls;
}

const std::string& Lattice::name(Elem e) const {
  check(e);
  return names_[e.id];
}

std::optional<Elem> Lattice::find(std::string_view nm) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i)
    if (names_[i] == nm) return Elem{i};
  return std::nullopt;
}

Elem Lattice::at(std::string_view nm) const {
  if (auto e = find(nm)) return *e;
  throw Error(Errc::ForeignElement, "'" + std::string(nm) + "' is not an element of lattice '" + label_ + "'");
}

void Lattice::check(Elem e) const {
  if (!contains(e)) {
    throw Error(Errc::ForeignElement, "element id " + std::to_string(e.id) + " outside lattice '" + label_ + "'");
  }
}

std::vector<Elem> Lattice::elements() const {
  std::vector<Elem> out(size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Elem{i};
  return out;
}

std::vector<std::pair<Elem, Elem>> Lattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  const auto all = elements();
  for (Elem lo : all)
    for (Elem hi : all) {
      if (!less(lo, hi)) continue;
      bool covering = true;
      for (Elem mid : all)
        if (less(lo, mid) && less(mid, hi)) {
          covering = false;
          break;
        }
      if (covering) out.emplace_back(lo, hi);
    }
  return out;
}

Elem Lattice::pair(Elem left, Elem right) const {
  if (!is_product()) throw Error(Errc::LatticeMismatch, "'" + label_ + "' is not a product lattice");
  Elem e{static_cast<std::uint32_t>(left.id * right_size_ + right.id)};
  check(e);
  return e;
}

Elem Lattice::first(Elem e) const {
  if (!is_product()) throw Error(Errc::LatticeMismatch, "'" + label_ + "' is not a product lattice");
  check(e);
  return Elem{static_cast<std::uint32_t>(e.id / right_size_)};
}

Elem Lattice::second(Elem e) const {
  if (!is_product()) throw Error(Errc::LatticeMismatch, "'" + label_ + "' is not a product lattice");
  check(e);
  return Elem{static_cast<std::uint32_t>(e.id % right_size_)};
}

bool operator==(const Lattice& a, const Lattice& b) {
  return a.names_ == b.names_ && a.leq_ == b.leq_;
}

void require_same_lattice(const Lattice& a, const Lattice& b) {
  if (!(a == b)) {
    throw Error(Errc::LatticeMismatch, "lattices '" + a.label() + "' and '" + b.label() + "' differ");
  }
}

Elem LatticeMorphism::operator()(Elem e) const {
  source->check(e);
  return image.at(e.id);
}

bool LatticeMorphism::preserves_meets() const {
  for (Elem a : source->elements())
    for (Elem b : source->elements())
      if ((*this)(source->meet(a, b)) != target->meet((*this)(a), (*this)(b))) return false;
  return true;
}

void LatticeMorphism::validate_meet_morphism() const {
  if (!source || !target) throw Error(Errc::ValidationError, "morphism without source or target");
  if (image.size() != source->size()) {
    throw Error(Errc::ValidationError, "morphism table has " + std::to_string(image.size()) +
                                           " entries, source has " + std::to_string(source->size()));
  }
  for (Elem e : image) target->check(e);
  for (Elem a : source->elements())
    for (Elem b : source->elements()) {
      if ((*this)(source->meet(a, b)) != target->meet((*this)(a), (*this)(b))) {
        throw Error(Errc::NotMeetMorphism, "psi(" + source->name(a) + " ^ " + source->name(b) +
                                               ") differs from psi(" + source->name(a) + ") ^ psi(" +
                                               source->name(b) + ")");
      }
    }
}

LatticeMorphism identity_morphism(const LatticePtr& lattice) {
  return LatticeMorphism{lattice, lattice, lattice->elements()};
}

LatticeMorphism projection(const LatticePtr& product, const LatticePtr& factor, bool first) {
  LatticeMorphism m{product, factor, {}};
  for (Elem e : product->elements()) m.image.push_back(first ? product->first(e) : product->second(e));
  return m;
}

}  // namespace fta
