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

#include "doctest.h"
#include "fta/chain.hpp"
#include "fta/oracle.hpp"
#include "fta/transforms.hpp"
#include "support.hpp"

using namespace fta;
using namespace fta::test;
using namespace fta::oracle;

namespace {

FiniteFuzzyLanguage crisp(const std::string& alphabet_name, std::initializer_list<const char*> trees) {
  std::vector<Tree> ts;
  for (const char* t : trees) ts.push_back(tree(t, alphabet_name));
  return characteristic(lattice("B2"), alphabet(alphabet_name), ts);
}

FiniteFuzzyLanguage random_language(Gen& gen, const LatticePtr& l, const AlphabetPtr& sigma, unsigned h) {
  FiniteFuzzyLanguage out(l, sigma);
  const std::size_t n = 1 + gen.below(5);
  for (std::size_t i = 0; i < n; ++i) out.set(gen.tree(*sigma, h), gen.element(*l));
  return out;
}

std::vector<std::string> support_strings(const FiniteFuzzyLanguage& phi) {
  std::vector<std::string> out;
  for (const auto& [t, v] : phi.support()) out.push_back(to_string(t, *phi.alphabet()));
  std::sort(out.begin(), out.end());
  return out;
}

bool leq(const FiniteFuzzyLanguage& a, const FiniteFuzzyLanguage& b) {
  return std::all_of(a.support().begin(), a.support().end(),
                     [&](const auto& kv) { return a.lattice()->leq(kv.second, b(kv.first)); });
}

}  // namespace

TEST_CASE("tree enumeration") {
  CHECK(enum_trees(*alphabet("S1"), 0).size() == 1);
  CHECK(enum_trees(*alphabet("S1"), 1).size() == 2);
  CHECK(enum_trees(*alphabet("S1"), 2).size() == 5);
  CHECK(enum_trees(*alphabet("S1"), 3).size() == 26);
  CHECK(enum_trees(*alphabet("S3"), 1).size() == 8);
  CHECK(enum_trees(*alphabet("S3"), 2).size() == 74);
  const auto trees = enum_trees(*alphabet("S3"), 2);
  CHECK(std::is_sorted(trees.begin(), trees.begin() + 2));
  CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
  for (const auto& t : trees) CHECK(height(t) <= 2);
  CHECK(error_of([] { enum_trees(*alphabet("S3"), 4, 1000); }) == Errc::BudgetExceeded);
}

TEST_CASE("finite fuzzy languages") {
  const auto m2 = lattice("M2");
  FiniteFuzzyLanguage a(m2, alphabet("S2")), b(m2, alphabet("S2"));
  const Tree fxy = tree("f(x,y)", "S2"), x = tree("x", "S2");
  a.set(fxy, m2->at("c"));
  a.set(x, m2->at("d"));
  b.set(fxy, m2->at("d"));
  CHECK(lang_union(a, b)(fxy) == m2->top());
  CHECK(lang_intersection(a, b)(fxy) == m2->bottom());
  CHECK(lang_intersection(a, b).support().empty());
  CHECK(lang_scalar(m2->at("d"), a).support().size() == 1);
  a.raise(fxy, m2->at("d"));
  CHECK(a(fxy) == m2->top());
  a.set(x, m2->bottom());
  CHECK(a.support().size() == 1);
  CHECK(a.truncated(0).support().empty());
  const auto& collapse = fixtures().morphisms.at("collapse");
  CHECK(lang_map(collapse, a)(fxy) == lattice("B2")->top());
  CHECK(lang_map(collapse, b).support().empty());
}

TEST_CASE("path closure of a finite union") {
  const auto u = crisp("S2", {"f(x,y)", "f(y,x)"});
  const auto closed = big_delta_bounded(u, 3);
  CHECK(support_strings(closed) == std::vector<std::string>{"f(x,x)", "f(x,y)", "f(y,x)", "f(y,y)"});
  CHECK_FALSE(is_path_closed_bounded(u, 3));
  CHECK(is_path_closed_bounded(closed, 3));
  const auto lam = tde_bounded(u);
  CHECK(lam(path("f.1 x", "S2")) == el("B2", "1"));
  CHECK(lam(path("f.1 f.1 x", "S2")) == el("B2", "0"));
  CHECK(tabulate(lndt("UnionFxyFyx"), 3) == u);
}

TEST_CASE("path extension and restriction form a Galois connection") {
  Gen gen;
  const auto s3 = alphabet("S3");
  for (const auto& l : population_lattices()) {
    for (int k = 0; k < 40; ++k) {
      const auto phi = random_language(gen, l, s3, 2);
      PathLanguage lambda{l, {}, gen.element(*l)};
      for (int j = 0; j < 8; ++j) lambda.values[gen.path(*s3, 3)] = gen.element(*l);
      for (const auto& [r, v] : tde_bounded(phi).values) lambda.values.emplace(r, gen.element(*l));

      const auto ext = tde_bounded(phi);
      bool left = true;
      for (const auto& [r, v] : ext.values) left = left && l->leq(v, lambda(r));
      bool right = true;
      for (const auto& [t, v] : phi.support()) right = right && l->leq(v, tdei_exact(lambda, t));
      CHECK(left == right);

      // Delta~ is a closure operator.
      const auto c = big_delta_bounded(phi, 2);
      CHECK(leq(phi, c));
      CHECK(big_delta_bounded(c, 2) == c);
      const auto bigger = lang_union(phi, random_language(gen, l, s3, 2));
      CHECK(leq(c, big_delta_bounded(bigger, 2)));
    }
  }
}

TEST_CASE("x-products") {
  const auto s4 = alphabet("S4");
  const LeafId x = *s4->find_leaf("x");
  const auto phi = crisp("S4", {"f(z,z)"});
  const auto psi = crisp("S4", {"x", "f(y,y)"});
  const auto prod = x_product(phi, psi, x);
  CHECK(support_strings(prod) == std::vector<std::string>{"f(y,y)", "f(z,z)"});
  CHECK(is_path_closed_bounded(phi, 2));
  CHECK(is_path_closed_bounded(psi, 2));
  CHECK_FALSE(is_path_closed_bounded(prod, 2));

  // Each occurrence of x is replaced independently.
  const auto two = x_product(crisp("S4", {"y", "z"}), crisp("S4", {"f(x,x)"}), x);
  CHECK(support_strings(two) == std::vector<std::string>{"f(y,y)", "f(y,z)", "f(z,y)", "f(z,z)"});

  const auto m2 = lattice("M2");
  FiniteFuzzyLanguage a(m2, s4), b(m2, s4);
  a.set(tree("y", "S4"), m2->at("c"));
  a.set(tree("z", "S4"), m2->at("d"));
  b.set(tree("f(x,x)", "S4"), m2->top());
  b.set(tree("f(y,x)", "S4"), m2->at("d"));
  const auto ab = x_product(a, b, x);
  CHECK(ab(tree("f(y,y)", "S4")) == m2->at("c"));
  CHECK(ab(tree("f(y,z)", "S4")) == m2->at("d"));
  CHECK(ab(tree("f(z,z)", "S4")) == m2->at("d"));
  CHECK(ab(tree("f(z,y)", "S4")) == m2->bottom());
}

TEST_CASE("x-iteration") {
  const auto s4 = alphabet("S4");
  const LeafId x = *s4->find_leaf("x");
  const auto phi = crisp("S4", {"f(x,y)", "f(f(z,z),y)"});
  const auto it = x_iteration(phi, x, 10, 2);
  CHECK(it.stabilized);
  CHECK(support_strings(it.language) ==
        std::vector<std::string>{"f(f(x,y),y)", "f(f(z,z),y)", "f(x,y)", "x"});
  CHECK(is_path_closed_bounded(phi, 2));
  CHECK_FALSE(is_path_closed_bounded(it.language, 2));
  // Every round only adds trees, so a larger window agrees below the smaller one.
  CHECK(x_iteration(phi, x, 10, 3).language.truncated(2) == it.language);
  CHECK_FALSE(x_iteration(phi, x, 1, 3).stabilized);
}

TEST_CASE("least subalgebra") {
  Gen gen;
  const auto s3 = alphabet("S3");
  const auto trees = enum_trees(*s3, 3);
  for (const auto& l : population_lattices()) {
    for (int k = 0; k < 20; ++k) {
      const auto phi = random_language(gen, l, s3, 2);
      for (const auto& t : trees) {
        const Elem v = subalgebra_closure_value(phi, t);
        CHECK(l->leq(phi(t), v));
        if (t.is_node()) {
          Elem m = l->top();
          for (const auto& kid : t.kids) m = l->meet(m, subalgebra_closure_value(phi, kid));
          CHECK(l->leq(m, v));
          CHECK(v == l->join(phi(t), m));
        }
      }
    }
  }
  // Leaves generate everything.
  const auto all = crisp("S2", {"x", "y"});
  for (const auto& t : enum_trees(*alphabet("S2"), 3)) CHECK(subalgebra_closure_value(all, t) == el("B2", "1"));
}

TEST_CASE("finite languages as NDT recognizers") {
  Gen gen;
  const auto s3 = alphabet("S3");
  const auto trees = enum_trees(*s3, 3);
  for (const auto& l : population_lattices()) {
    for (int k = 0; k < 20; ++k) {
      const auto phi = random_language(gen, l, s3, 2);
      const auto nf = finite_language_ndt(phi);
      for (const auto& t : trees) CHECK(eval_ndt(nf, t) == phi(t));
    }
  }
  const auto empty = finite_language_ndt(FiniteFuzzyLanguage(lattice("B2"), s3));
  CHECK(eval_ndt(empty, tree("x", "S3")) == el("B2", "0"));
}

TEST_CASE("reference evaluation agrees with the library") {
  Gen gen;
  const auto s3 = alphabet("S3");
  const auto trees = enum_trees(*s3, 3);
  for (const auto& l : population_lattices()) {
    for (int k = 0; k < 15; ++k) {
      const auto f = gen.ldt(l, s3);
      const auto nf = gen.lndt(l, s3);
      const auto g = gen.general(l, s3);
      for (const auto& t : trees) {
        CHECK(eval_reference(f, t) == eval_dt(f, t));
        CHECK(eval_reference(nf, t) == eval_ndt(nf, t));
        CHECK(eval_reference(g, t) == eval_general_ndt(g, t));
      }
    }
  }
}
