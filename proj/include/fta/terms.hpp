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
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fta {

using SymbolId = std::uint32_t;
using LeafId = std::uint32_t;

/// A ranked alphabet Sigma (no nullary symbols) together with its leaf alphabet X.
class RankedAlphabet {
 public:
  struct Symbol {
    std::string name;
    unsigned arity = 1;
  };

  RankedAlphabet(std::string label, std::vector<Symbol> symbols, std::vector<std::string> leaves);

  const std::string& label() const noexcept { return label_; }
  std::size_t symbol_count() const noexcept { return symbols_.size(); }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const std::vector<std::string>& leaves() const noexcept { return leaves_; }

  unsigned arity(SymbolId f) const;
  const std::string& symbol_name(SymbolId f) const;
  const std::string& leaf_name(LeafId x) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;
  std::optional<LeafId> find_leaf(std::string_view name) const;
  bool is_unary() const noexcept;

  /// Same symbols with the same arities and the same leaves, in the same order.
  friend bool operator==(const RankedAlphabet& a, const RankedAlphabet& b);

 private:
  std::string label_;
  std::vector<Symbol> symbols_;
  std::vector<std::string> leaves_;
};

using AlphabetPtr = std::shared_ptr<const RankedAlphabet>;

void require_same_alphabet(const RankedAlphabet& a, const RankedAlphabet& b);

/// A term over Sigma and X. Hole nodes mark the slot of a context and Var
/// nodes the variables xi_1..xi_m of homomorphism images; neither occurs in
/// a plain tree.
struct Tree {
  enum class Kind : std::uint8_t { Leaf, Node, Hole, Var };

  Kind kind = Kind::Leaf;
  std::uint32_t label = 0;  // LeafId, SymbolId, or 1-based variable index
  std::vector<Tree> kids;

  static Tree leaf(LeafId x) { return Tree{Kind::Leaf, x, {}}; }
  static Tree node(SymbolId f, std::vector<Tree> kids) { return Tree{Kind::Node, f, std::move(kids)}; }
  static Tree hole() { return Tree{Kind::Hole, 0, {}}; }
  static Tree var(unsigned i) { return Tree{Kind::Var, i, {}}; }

  bool is_leaf() const noexcept { return kind == Kind::Leaf; }
  bool is_node() const noexcept { return kind == Kind::Node; }
};

std::strong_ordering operator<=>(const Tree& a, const Tree& b);
bool operator==(const Tree& a, const Tree& b);

/// Throws InvalidTree unless `t` is a plain tree over `alphabet` with correct arities.
void validate_tree(const Tree& t, const RankedAlphabet& alphabet);

unsigned height(const Tree& t);
std::size_t leaf_occurrences(const Tree& t);
std::size_t hole_count(const Tree& t);

struct TreeMetrics {
  std::string root;
  unsigned height = 0;
  std::set<Tree> subtrees;
  std::set<LeafId> leaf_set;
};

TreeMetrics metrics(const Tree& t, const RankedAlphabet& alphabet);

/// A tree with exactly one hole.
class Context {
 public:
  /// The identity context consisting of the hole alone.
  Context() : body_(Tree::hole()) {}
  explicit Context(Tree body);

  const Tree& body() const noexcept { return body_; }
  unsigned depth() const;

  /// Throws InvalidTree unless the body is arity-correct over `alphabet`.
  void validate(const RankedAlphabet& alphabet) const;

  Tree fill(const Tree& t) const;
  Context compose(const Context& inner) const;

  friend auto operator<=>(const Context& a, const Context& b) { return a.body_ <=> b.body_; }
  friend bool operator==(const Context& a, const Context& b) { return a.body_ == b.body_; }

 private:
  Tree body_;
};

/// A letter f_i of the path alphabet Gamma; `index` is 1-based.
struct Letter {
  SymbolId symbol = 0;
  unsigned index = 1;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A root-to-leaf path w x.
struct PathWord {
  std::vector<Letter> word;
  LeafId leaf = 0;

  friend auto operator<=>(const PathWord&, const PathWord&) = default;
};

std::vector<Letter> path_alphabet(const RankedAlphabet& alphabet);

std::set<PathWord> delta(const Tree& t);

/// All trees of height <= height_bound whose every path lies in delta(T).
std::vector<Tree> path_closure_crisp(std::span<const Tree> trees, const RankedAlphabet& alphabet,
                                     unsigned height_bound);

/// A tree homomorphism T_Sigma(X) -> T_Omega(Y).
class TreeHomomorphism {
 public:
  /// `leaf_images[x]` is a tree over the target; `symbol_images[f]` is a
  /// target tree that may contain Var(1..arity(f)).
  TreeHomomorphism(AlphabetPtr source, AlphabetPtr target, std::vector<Tree> leaf_images,
                   std::vector<Tree> symbol_images);

  static TreeHomomorphism identity(const AlphabetPtr& alphabet);

  const AlphabetPtr& source() const noexcept { return source_; }
  const AlphabetPtr& target() const noexcept { return target_; }
  const Tree& leaf_image(LeafId x) const { return leaf_images_.at(x); }
  const Tree& symbol_image(SymbolId f) const { return symbol_images_.at(f); }

  bool is_alphabetic() const noexcept { return alphabetic_; }
  /// Alphabetic with pairwise distinct symbol images and an injective leaf map.
  bool is_injective_alphabetic() const noexcept { return injective_; }

  Tree apply(const Tree& t) const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Tree> leaf_images_;
  std::vector<Tree> symbol_images_;
  bool alphabetic_ = false;
  bool injective_ = false;
};

// Text forms: trees "f(g(x),y)", hole "@", variables "$1"; paths "f.1 g.1 x".
std::string to_string(const Tree& t, const RankedAlphabet& alphabet);
std::string to_string(const Context& p, const RankedAlphabet& alphabet);
std::string to_string(const PathWord& r, const RankedAlphabet& alphabet);
std::string to_string(const Letter& l, const RankedAlphabet& alphabet);

Tree parse_tree(std::string_view text, const RankedAlphabet& alphabet);
Context parse_context(std::string_view text, const RankedAlphabet& alphabet);
/// Parses a homomorphism image pattern; variables $1..$max_var are allowed.
Tree parse_pattern(std::string_view text, const RankedAlphabet& alphabet, unsigned max_var);
PathWord parse_path(std::string_view text, const RankedAlphabet& alphabet);

}  // namespace fta
