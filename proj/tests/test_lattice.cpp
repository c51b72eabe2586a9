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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "fta/lattice.hpp"
#include "support.hpp"

using namespace fta;
using namespace fta::test;

namespace {

// Fixpoint closure written without meet_closure, for cross-checking.
std::set<std::uint32_t> closure_by_fixpoint(const Lattice& l, std::set<std::uint32_t> s, bool joins) {
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = s;
    for (auto a : snapshot)
      for (auto b : snapshot) {
        grew |= s.insert(l.meet(Elem{a}, Elem{b}).id).second;
        if (joins) grew |= s.insert(l.join(Elem{a}, Elem{b}).id).second;
      }
  }
  return s;
}

std::set<std::uint32_t> ids(const std::vector<Elem>& v) {
  std::set<std::uint32_t> out;
  for (Elem e : v) out.insert(e.id);
  return out;
}

}  // namespace

TEST_CASE("validated lattices have the expected bounds") {
  const auto b2 = lattice("B2");
  CHECK(b2->meet(b2->at("0"), b2->at("1")) == b2->at("0"));
  const auto m2 = lattice("M2");
  CHECK(m2->meet(m2->at("c"), m2->at("d")) == m2->at("0"));
  CHECK(m2->join(m2->at("c"), m2->at("d")) == m2->at("1"));
}

TEST_CASE("malformed orders are rejected") {
  const std::pair<std::size_t, std::size_t> no_top[] = {{0, 1}, {0, 2}};
  CHECK(error_of([&] { Lattice::from_order("P", {"0", "a", "b"}, no_top); }) == Errc::MissingBound);
  const std::pair<std::size_t, std::size_t> cycle[] = {{0, 1}, {1, 2}, {2, 1}};
  CHECK(error_of([&] { Lattice::from_order("P", {"0", "a", "1"}, cycle); }) == Errc::CycleInOrder);
  // 0 < a,b < c,d < 1: {a,b} has two minimal upper bounds.
  const std::pair<std::size_t, std::size_t> bowtie[] = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  CHECK(error_of([&] { Lattice::from_order("P", {"0", "a", "b", "c", "d", "1"}, bowtie); }) == Errc::NotALattice);
  CHECK(error_of([&] { Lattice::chain("T", {"0"}); }) == Errc::TrivialLattice);
}

TEST_CASE("meet_all and join_all") {
  const auto m2 = lattice("M2");
  const Elem xs[] = {m2->at("c"), m2->at("d"), m2->at("1")};
  CHECK(m2->meet_all(xs) == m2->at("0"));
  const auto b2 = lattice("B2");
  const Elem ones[] = {b2->at("1"), b2->at("1")};
  CHECK(b2->meet_all(ones) == b2->at("1"));
  const auto c4 = lattice("C4");
  const Elem qs[] = {c4->at("1/4"), c4->at("1/2")};
  CHECK(c4->join_all(qs) == c4->at("1/2"));
  CHECK(error_of([&] { m2->meet_all({}); }) == Errc::EmptySequence);
  const Elem foreign[] = {Elem{17}};
  CHECK(error_of([&] { m2->meet_all(foreign); }) == Errc::ForeignElement);
}

TEST_CASE("product lattices are componentwise") {
  const auto b2 = lattice("B2");
  const auto bb = Lattice::product(*b2, *b2);
  CHECK(bb.size() == 4);
  const Elem one = b2->at("1"), zero = b2->at("0");
  CHECK(bb.meet(bb.pair(one, zero), bb.pair(zero, one)) == bb.pair(zero, zero));
  const auto m2 = lattice("M2");
  const auto mb = Lattice::product(*m2, *b2);
  CHECK(mb.join(mb.pair(m2->at("c"), zero), mb.pair(m2->at("d"), zero)) == mb.pair(m2->at("1"), zero));
  CHECK(mb.bottom() == mb.pair(m2->bottom(), zero));
  CHECK(mb.top() == mb.pair(m2->top(), one));
}

TEST_CASE("meet and sublattice closures") {
  const auto m2 = lattice("M2");
  const Elem cd[] = {m2->at("c"), m2->at("d")};
  CHECK(ids(m2->meet_closure(cd)) == std::set<std::uint32_t>{m2->at("0").id, m2->at("c").id, m2->at("d").id});
  CHECK(ids(m2->meet_closure(cd)) == closure_by_fixpoint(*m2, ids({cd[0], cd[1]}), false));
  const Elem one[] = {m2->at("1")};
  CHECK(m2->meet_closure(one) == std::vector<Elem>{m2->at("1")});
  CHECK(ids(m2->sublattice_closure(cd)).size() == 4);
  CHECK(ids(m2->sublattice_closure(cd)) == closure_by_fixpoint(*m2, ids({cd[0], cd[1]}), true));
  CHECK(m2->sublattice_closure({}).empty());
  const auto b2 = lattice("B2");
  const Elem zero[] = {b2->at("0")};
  CHECK(b2->sublattice_closure(zero) == std::vector<Elem>{b2->at("0")});
  const auto c4 = lattice("C4");
  const Elem qs[] = {c4->at("1/4"), c4->at("1")};
  CHECK(c4->meet_closure(qs) == std::vector<Elem>{qs[0], qs[1]});
}

TEST_CASE("classification") {
  // The diamond with two atoms is distributive; M3 and N5 are not.
  CHECK(lattice("M2")->classify() == LatticeClass{false, true, false});
  CHECK(lattice("M3")->classify().is_distributive == false);
  CHECK(lattice("N5")->classify().is_distributive == false);
  CHECK(lattice("B2")->classify() == LatticeClass{true, true, true});
  CHECK(lattice("C3")->classify() == LatticeClass{true, true, true});
}

TEST_CASE("lattice laws hold exhaustively on every fixture lattice") {
  for (const auto& [name, l] : fixtures().lattices) {
    CAPTURE(name);
    for (Elem a : l->elements())
      for (Elem b : l->elements()) {
        const Elem m = l->meet(a, b);
        CHECK(l->leq(m, a));
        CHECK(l->leq(m, b));
        for (Elem c : l->elements())
          if (l->leq(c, a) && l->leq(c, b)) CHECK(l->leq(c, m));
        CHECK(l->meet(a, l->join(a, b)) == a);
        CHECK(l->join(a, l->meet(a, b)) == a);
      }
  }
}

TEST_CASE("closures are extensive, monotone and idempotent") {
  Gen gen;
  for (const auto& l : {lattice("M2"), lattice("N5"), lattice("C4")}) {
    for (int k = 0; k < 50; ++k) {
      std::vector<Elem> s, t;
      for (Elem e : l->elements()) {
        if (gen.chance(0.4)) s.push_back(e);
      }
      t = s;
      t.push_back(gen.element(*l));
      for (bool joins : {false, true}) {
        auto close = [&](const std::vector<Elem>& v) { return joins ? l->sublattice_closure(v) : l->meet_closure(v); };
        const auto cs = ids(close(s));
        for (Elem e : s) CHECK(cs.count(e.id));
        const auto ct = ids(close(t));
        CHECK(std::includes(ct.begin(), ct.end(), cs.begin(), cs.end()));
        CHECK(close(close(s)) == close(s));
      }
    }
  }
}

TEST_CASE("meet morphisms") {
  const auto m2 = lattice("M2");
  CHECK(identity_morphism(m2).preserves_meets());
  const auto& collapse = fixtures().morphisms.at("collapse");
  CHECK(collapse.preserves_meets());
  const auto b2 = lattice("B2");
  LatticeMorphism join_like{m2, b2, {b2->at("0"), b2->at("1"), b2->at("1"), b2->at("1")}};
  CHECK_FALSE(join_like.preserves_meets());
  CHECK(error_of([&] { join_like.validate_meet_morphism(); }) == Errc::NotMeetMorphism);
  const auto prod = std::make_shared<const Lattice>(Lattice::product(*m2, *b2));
  CHECK(projection(prod, m2, true).preserves_meets());
  CHECK(projection(prod, b2, false).preserves_meets());
}
