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
#include "fta/oracle.hpp"
#include "fta/terms.hpp"
#include "support.hpp"

using namespace fta;
using namespace fta::test;

namespace {

std::set<std::string> path_strings(const Tree& t, const RankedAlphabet& sigma) {
  std::set<std::string> out;
  for (const auto& r : delta(t)) out.insert(to_string(r, sigma));
  return out;
}

std::set<std::string> tree_strings(const std::vector<Tree>& ts, const RankedAlphabet& sigma) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(to_string(t, sigma));
  return out;
}

AlphabetPtr target_alphabet() {
  return std::make_shared<const RankedAlphabet>(
      "T", std::vector<RankedAlphabet::Symbol>{{"g", 2}, {"h", 1}}, std::vector<std::string>{"u", "v"});
}

}  // namespace

TEST_CASE("ranked alphabets reject malformed declarations") {
  using Sym = RankedAlphabet::Symbol;
  CHECK(error_of([] { RankedAlphabet("A", {Sym{"f", 0}}, {"x"}); }).has_value());
  CHECK(error_of([] { RankedAlphabet("A", {Sym{"f", 2}}, {}); }).has_value());
  CHECK(error_of([] { RankedAlphabet("A", {Sym{"f", 2}}, {"f"}); }).has_value());
  CHECK(error_of([] { RankedAlphabet("A", {Sym{"f", 2}, Sym{"f", 1}}, {"x"}); }).has_value());
}

TEST_CASE("tree metrics") {
  const auto& s3 = *alphabet("S3");
  const Tree t = tree("f(g(f(x,x)),y)", "S3");
  CHECK(metrics(t, s3).height == 3);
  CHECK(metrics(t, s3).root == "f");
  const auto leaf = metrics(tree("x", "S3"), s3);
  CHECK(leaf.height == 0);
  CHECK(leaf.leaf_set == std::set<LeafId>{0});
  CHECK(metrics(tree("f(x,y)", "S3"), s3).subtrees ==
        std::set<Tree>{tree("f(x,y)", "S3"), tree("x", "S3"), tree("y", "S3")});
  CHECK(error_of([&] { parse_tree("f(x)", s3); }).has_value());
  CHECK(error_of([&] { parse_tree("f(x,z)", s3); }).has_value());
}

TEST_CASE("delta extracts the paths of a tree") {
  const auto& s3 = *alphabet("S3");
  CHECK(path_strings(tree("f(g(f(x,x)),y)", "S3"), s3) ==
        std::set<std::string>{"f.1 g.1 f.1 x", "f.1 g.1 f.2 x", "f.2 y"});
  CHECK(path_strings(tree("x", "S3"), s3) == std::set<std::string>{"x"});
  CHECK(path_strings(tree("f(x,y)", "S3"), s3) == std::set<std::string>{"f.1 x", "f.2 y"});
}

TEST_CASE("path closure of a finite set") {
  const auto& s2 = *alphabet("S2");
  const std::vector<Tree> t{tree("f(x,y)", "S2"), tree("f(y,x)", "S2")};
  CHECK(tree_strings(path_closure_crisp(t, s2, 1), s2) ==
        std::set<std::string>{"f(x,y)", "f(y,x)", "f(x,x)", "f(y,y)"});
  const std::vector<Tree> x{tree("x", "S2")};
  CHECK(tree_strings(path_closure_crisp(x, s2, 3), s2) == std::set<std::string>{"x"});
  const std::vector<Tree> fxx{tree("f(x,x)", "S2")};
  CHECK(tree_strings(path_closure_crisp(fxx, s2, 1), s2) == std::set<std::string>{"f(x,x)"});
}

TEST_CASE("contexts fill and compose") {
  const auto& s3 = *alphabet("S3");
  const Tree t = tree("g(x)", "S3");
  CHECK(Context().fill(t) == t);
  const Context p = parse_context("f(@,y)", s3);
  CHECK(p.fill(tree("x", "S3")) == tree("f(x,y)", "S3"));
  CHECK(p.compose(parse_context("g(@)", s3)).depth() == 2);
  CHECK(error_of([&] { Context(tree("f(x,y)", "S3")); }).has_value());
}

TEST_CASE("homomorphisms") {
  const auto s3 = alphabet("S3");
  const auto tgt = target_alphabet();
  // f -> g($1,$2), g -> h($1), x -> u, y -> v.
  const TreeHomomorphism relabel(s3, tgt, {parse_tree("u", *tgt), parse_tree("v", *tgt)},
                                 {parse_pattern("g($1,$2)", *tgt, 2), parse_pattern("h($1)", *tgt, 1)});
  CHECK(relabel.is_alphabetic());
  CHECK(relabel.is_injective_alphabetic());
  CHECK(relabel.apply(tree("f(x,x)", "S3")) == parse_tree("g(u,u)", *tgt));

  const TreeHomomorphism deleting(s3, s3, {tree("x", "S3"), tree("y", "S3")},
                                  {parse_pattern("f($1,$2)", *s3, 2), parse_pattern("$1", *s3, 1)});
  CHECK_FALSE(deleting.is_alphabetic());
  CHECK(deleting.apply(tree("g(x)", "S3")) == tree("x", "S3"));

  const auto id = TreeHomomorphism::identity(s3);
  const Tree t = tree("f(g(f(x,x)),y)", "S3");
  CHECK(id.apply(t) == t);
}

TEST_CASE("term properties on random samples") {
  Gen gen;
  const auto& s3 = *alphabet("S3");
  const auto s3p = alphabet("S3");
  const TreeHomomorphism dup(s3p, s3p, {tree("y", "S3"), tree("x", "S3")},
                             {parse_pattern("f($2,$1)", s3, 2), parse_pattern("f($1,$1)", s3, 1)});
  for (int k = 0; k < 300; ++k) {
    const Tree t = gen.tree(s3, 4);
    const auto d = delta(t);
    CHECK(d.size() == leaf_occurrences(t));
    for (const auto& r : d) CHECK(r.word.size() <= height(t));

    const Context p = gen.context(s3, 3), q = gen.context(s3, 3);
    CHECK(p.compose(q).fill(t) == p.fill(q.fill(t)));
    CHECK(p.compose(q).depth() == p.depth() + q.depth());

    // A nondeleting homomorphism keeps h(t) as a subtree of h(p(t)).
    CHECK(metrics(dup.apply(p.fill(t)), s3).subtrees.count(dup.apply(t)) == 1);
    CHECK(to_string(t, s3) == to_string(parse_tree(to_string(t, s3), s3), s3));
  }
}

TEST_CASE("path closure is extensive and idempotent") {
  Gen gen;
  const auto& s3 = *alphabet("S3");
  for (int k = 0; k < 40; ++k) {
    std::vector<Tree> ts;
    for (int i = 0; i < 3; ++i) ts.push_back(gen.tree(s3, 2));
    const auto closed = path_closure_crisp(ts, s3, 2);
    for (const auto& t : ts) CHECK(std::find(closed.begin(), closed.end(), t) != closed.end());
    CHECK(path_closure_crisp(closed, s3, 2) == closed);
  }
}

TEST_CASE("paths round-trip through text") {
  const auto& s3 = *alphabet("S3");
  const auto r = path("f.1 g.1 f.2 x", "S3");
  CHECK(r.word.size() == 3);
  CHECK(to_string(r, s3) == "f.1 g.1 f.2 x");
  CHECK(error_of([&] { parse_path("f.3 x", s3); }).has_value());
}
