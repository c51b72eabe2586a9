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

#include "doctest.h"
#include "fta/automata.hpp"
#include "fta/oracle.hpp"
#include "support.hpp"

using namespace fta;
using namespace fta::test;

namespace {

const DtAlgebra& a85() { return ldt("F85").algebra; }

State st(const DtAlgebra& a, const char* name) { return *a.find_state(name); }

DtRecognizer random_crisp_dt(Gen& gen, const AlphabetPtr& sigma) {
  const auto f = gen.ldt(lattice("B2"), sigma);
  std::vector<std::vector<bool>> final(sigma->leaf_count(), std::vector<bool>(f.state_count()));
  for (auto& row : final)
    for (std::size_t a = 0; a < row.size(); ++a) row[a] = gen.chance(0.6);
  return DtRecognizer{f.algebra, f.initial, final};
}

NdtRecognizer random_crisp_ndt(Gen& gen, const AlphabetPtr& sigma) {
  const auto nf = gen.lndt(lattice("B2"), sigma);
  std::vector<std::vector<bool>> final(sigma->leaf_count(), std::vector<bool>(nf.state_count()));
  for (auto& row : final)
    for (std::size_t a = 0; a < row.size(); ++a) row[a] = gen.chance(0.5);
  return NdtRecognizer{nf.algebra, nf.initial, final};
}

}  // namespace

TEST_CASE("runs and leaf runs") {
  const auto& a = a85();
  const State a0 = st(a, "a0"), sa = st(a, "a"), sb = st(a, "b");
  CHECK(leaf_run(a, tree("f(x,x)", "S1"), a0) == std::set<std::pair<LeafId, State>>{{0, sa}, {0, sb}});
  const RunTree r = run(a, tree("x", "S1"), sa);
  CHECK(r.kind == Tree::Kind::Leaf);
  CHECK(r.state == sa);
  CHECK(leaf_run(a, tree("f(f(x,x),x)", "S1"), a0) == std::set<std::pair<LeafId, State>>{{0, sb}});
}

TEST_CASE("path states") {
  const auto& a = a85();
  const State a0 = st(a, "a0");
  CHECK(path_state(a, a0, {}) == a0);
  CHECK(path_state(a, a0, path("f.1 x", "S1").word) == st(a, "a"));
  CHECK(path_state(a, a0, path("f.2 f.1 x", "S1").word) == st(a, "b"));
}

TEST_CASE("nondeterministic path states and the subset algebra") {
  const auto s1 = alphabet("S1");
  // f(a0) = {(a,a), (b,b)}; a and b have no transitions.
  const NdtAlgebra n(s1, {"a0", "a", "b"}, {{{{1, 1}, {2, 2}}, {}, {}}});
  const StateSet start{0};
  CHECK(ndt_path_states(n, start, {}) == start);
  CHECK(ndt_path_states(n, start, path("f.1 x", "S1").word) == StateSet{1, 2});
  CHECK(ndt_path_states(n, StateSet{1}, path("f.1 x", "S1").word).empty());

  const auto sa = subset_algebra(n, start);
  const State top = sa.start;
  const auto& kids = sa.algebra.op(0, top);
  CHECK(sa.subsets[kids[0]] == StateSet{1, 2});
  CHECK(sa.subsets[kids[1]] == StateSet{1, 2});
  const auto empty = full_subset_algebra(n);
  const State e = *empty.find(StateSet{});
  CHECK(empty.subsets[empty.algebra.op(0, e)[0]].empty());
}

TEST_CASE("subset path states agree with nondeterministic path states") {
  Gen gen;
  const auto s3 = alphabet("S3");
  for (int k = 0; k < 200; ++k) {
    const auto nf = gen.lndt(lattice("B2"), s3, 4);
    StateSet h;
    for (State a = 0; a < nf.state_count(); ++a)
      if (gen.chance(0.5)) h.push_back(a);
    const auto sa = subset_algebra(nf.algebra, h);
    const auto full = full_subset_algebra(nf.algebra);
    for (int j = 0; j < 10; ++j) {
      const auto w = gen.path(*s3, 6).word;
      const auto expect = ndt_path_states(nf.algebra, h, w);
      CHECK(sa.subsets[path_state(sa.algebra, sa.start, w)] == expect);
      CHECK(full.subsets[path_state(full.algebra, *full.find(h), w)] == expect);
    }
  }
}

TEST_CASE("run shape and the monoid action") {
  Gen gen;
  const auto s3 = alphabet("S3");
  for (int k = 0; k < 200; ++k) {
    const auto f = gen.ldt(lattice("B2"), s3);
    const Tree t = gen.tree(*s3, 4);
    const State a = static_cast<State>(gen.below(f.state_count()));
    CHECK(run(f.algebra, t, a).erase() == t);
    const auto u = gen.path(*s3, 3).word, v = gen.path(*s3, 3).word;
    auto uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(path_state(f.algebra, a, uv) == path_state(f.algebra, path_state(f.algebra, a, u), v));
  }
}

TEST_CASE("crisp acceptance") {
  const auto& fxy = fixtures().dt.at("Fxy");
  CHECK(crisp_dt_accepts(fxy, tree("f(x,y)", "S2")));
  CHECK_FALSE(crisp_dt_accepts(fxy, tree("f(y,x)", "S2")));
  CHECK_FALSE(crisp_dt_accepts(fxy, tree("f(f(x,y),y)", "S2")));
  for (const auto& t : oracle::enum_trees(*alphabet("S2"), 2)) {
    CHECK(crisp_dt_accepts(fxy, t) == (t == tree("f(x,y)", "S2")));
  }

  DtRecognizer none = fxy;
  for (auto& row : none.final) row.assign(row.size(), false);
  CHECK_FALSE(crisp_dt_accepts(none, tree("f(x,y)", "S2")));

  NdtRecognizer empty_init{NdtAlgebra::from_dt(fxy.algebra), {}, fxy.final};
  CHECK_FALSE(crisp_ndt_accepts(empty_init, tree("f(x,y)", "S2")));
}

TEST_CASE("crisp semantics agree with the oracle and with each other") {
  Gen gen;
  const auto s3 = alphabet("S3");
  const auto trees = oracle::enum_trees(*s3, 2);
  for (int k = 0; k < 60; ++k) {
    const auto d = random_crisp_dt(gen, s3);
    const auto n = random_crisp_ndt(gen, s3);
    bool some = false;
    for (const auto& t : trees) {
      CHECK(crisp_dt_accepts(d, t) == crisp_dt_accepts_by_paths(d, t));
      CHECK(crisp_dt_accepts(d, t) == oracle::eval_reference(d, t));
      const bool in = crisp_ndt_accepts(n, t);
      CHECK(in == oracle::eval_reference(n, t));
      some |= in;
    }
    if (some) CHECK(crisp_ndt_nonempty(n));
  }
}

TEST_CASE("nonemptiness of crisp NDT recognizers") {
  const auto s1 = alphabet("S1");
  const NdtAlgebra loop(s1, {"q"}, {{{{0, 0}}}});
  CHECK(crisp_ndt_nonempty(NdtRecognizer{loop, {0}, {{true}}}));
  CHECK_FALSE(crisp_ndt_nonempty(NdtRecognizer{loop, {0}, {{false}}}));
  // q loops forever without a final state; p is final but unreachable from q.
  const NdtAlgebra two(s1, {"q", "p"}, {{{{0, 0}}, {}}});
  CHECK_FALSE(crisp_ndt_nonempty(NdtRecognizer{two, {0}, {{false, true}}}));
  CHECK_FALSE(crisp_ndt_nonempty(NdtRecognizer{two, {}, {{true, true}}}));
}
