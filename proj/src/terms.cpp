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

#include "fta/terms.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "fta/error.hpp"

namespace fta {

RankedAlphabet::RankedAlphabet(std::string label, std::vector<Symbol> symbols, std::vector<std::string> leaves)
    : label_(std::move(label)), symbols_(std::move(symbols)), leaves_(std::move(leaves)) {
  if (leaves_.empty()) throw Error(Errc::ValidationError, "alphabet '" + label_ + "' has no leaf symbols");
  std::set<std::string> names;
  for (const auto& s : symbols_) {
    if (s.arity == 0) {
      throw Error(Errc::ValidationError, "symbol '" + s.name + "' is nullary; use a leaf symbol instead");
    }
    if (!names.insert(s.name).second) throw Error(Errc::ValidationError, "duplicate symbol '" + s.name + "'");
  }
  for (const auto& x : leaves_) {
    if (!names.insert(x).second) {
      throw Error(Errc::ValidationError, "leaf '" + x + "' clashes with another symbol or leaf");
    }
  }
}

unsigned RankedAlphabet::arity(SymbolId f) const { return symbols_.at(f).arity; }
const std::string& RankedAlphabet::symbol_name(SymbolId f) const { return symbols_.at(f).name; }
const std::string& RankedAlphabet::leaf_name(LeafId x) const { return leaves_.at(x); }

std::optional<SymbolId> RankedAlphabet::find_symbol(std::string_view name) const {
  for (SymbolId f = 0; f < symbols_.size(); ++f)
    if (symbols_[f].name == name) return f;
  return std::nullopt;
}

std::optional<LeafId> RankedAlphabet::find_leaf(std::string_view name) const {
  for (LeafId x = 0; x < leaves_.size(); ++x)
    if (leaves_[x] == name) return x;
  return std::nullopt;
}

bool RankedAlphabet::is_unary() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.arity == 1; });
}

bool operator==(const RankedAlphabet& a, const RankedAlphabet& b) {
  if (a.leaves_ != b.leaves_ || a.symbols_.size() != b.symbols_.size()) return false;
  for (std::size_t i = 0; i < a.symbols_.size(); ++i)
    if (a.symbols_[i].name != b.symbols_[i].name || a.symbols_[i].arity != b.symbols_[i].arity) return false;
  return true;
}

void require_same_alphabet(const RankedAlphabet& a, const RankedAlphabet& b) {
  if (!(a == b)) {
    throw Error(Errc::AlphabetMismatch, "alphabets '" + a.label() + "' and '" + b.label() + "' differ");
  }
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.label <=> b.label; c != 0) return c;
  return std::lexicographical_compare_three_way(a.kids.begin(), a.kids.end(), b.kids.begin(), b.kids.end());
}

bool operator==(const Tree& a, const Tree& b) {
  return a.kind == b.kind && a.label == b.label && a.kids == b.kids;
}

namespace {

void validate_shape(const Tree& t, const RankedAlphabet& alphabet, bool allow_hole, unsigned max_var) {
  switch (t.kind) {
    case Tree::Kind::Leaf:
      if (t.label >= alphabet.leaf_count() || !t.kids.empty()) {
        throw Error(Errc::InvalidTree, "bad leaf id " + std::to_string(t.label));
      }
      return;
    case Tree::Kind::Hole:
      if (!allow_hole || !t.kids.empty()) throw Error(Errc::InvalidTree, "unexpected hole");
      return;
    case Tree::Kind::Var:
      if (t.label < 1 || t.label > max_var || !t.kids.empty()) {
        throw Error(Errc::InvalidTree, "variable $" + std::to_string(t.label) + " out of range");
      }
      return;
    case Tree::Kind::Node:
      if (t.label >= alphabet.symbol_count()) throw Error(Errc::InvalidTree, "bad symbol id");
      if (t.kids.size() != alphabet.arity(t.label)) {
        throw Error(Errc::InvalidTree, "symbol '" + alphabet.symbol_name(t.label) + "' has arity " +
                                           std::to_string(alphabet.arity(t.label)) + " but " +
                                           std::to_string(t.kids.size()) + " children");
      }
      for (const auto& k : t.kids) validate_shape(k, alphabet, allow_hole, max_var);
      return;
  }
}

}  // namespace

void validate_tree(const Tree& t, const RankedAlphabet& alphabet) { validate_shape(t, alphabet, false, 0); }

unsigned height(const Tree& t) {
  unsigned h = 0;
  for (const auto& k : t.kids) h = std::max(h, height(k) + 1);
  return h;
}

std::size_t leaf_occurrences(const Tree& t) {
  if (t.kids.empty()) return t.kind == Tree::Kind::Leaf ? 1 : 0;
  std::size_t n = 0;
  for (const auto& k : t.kids) n += leaf_occurrences(k);
  return n;
}

std::size_t hole_count(const Tree& t) {
  if (t.kind == Tree::Kind::Hole) return 1;
  std::size_t n = 0;
  for (const auto& k : t.kids) n += hole_count(k);
  return n;
}

namespace {

void collect_metrics(const Tree& t, TreeMetrics& m) {
  m.subtrees.insert(t);
  if (t.is_leaf()) m.leaf_set.insert(t.label);
  for (const auto& k : t.kids) collect_metrics(k, m);
}

}  // namespace

TreeMetrics metrics(const Tree& t, const RankedAlphabet& alphabet) {
  TreeMetrics m;
  m.root = t.is_leaf() ? alphabet.leaf_name(t.label) : alphabet.symbol_name(t.label);
  m.height = height(t);
  collect_metrics(t, m);
  return m;
}

Context::Context(Tree body) : body_(std::move(body)) {
  if (hole_count(body_) != 1) {
    throw Error(Errc::InvalidTree, "a context needs exactly one hole, found " + std::to_string(hole_count(body_)));
  }
}

namespace {

Tree substitute_hole(const Tree& t, const Tree& arg) {
  if (t.kind == Tree::Kind::Hole) return arg;
  Tree out{t.kind, t.label, {}};
  out.kids.reserve(t.kids.size());
  for (const auto& k : t.kids) out.kids.push_back(substitute_hole(k, arg));
  return out;
}

int hole_depth(const Tree& t) {
  if (t.kind == Tree::Kind::Hole) return 0;
  for (const auto& k : t.kids) {
    int d = hole_depth(k);
    if (d >= 0) return d + 1;
  }
  return -1;
}

}  // namespace

void Context::validate(const RankedAlphabet& alphabet) const { validate_shape(body_, alphabet, true, 0); }

unsigned Context::depth() const { return static_cast<unsigned>(hole_depth(body_)); }

Tree Context::fill(const Tree& t) const { return substitute_hole(body_, t); }

Context Context::compose(const Context& inner) const { return Context(substitute_hole(body_, inner.body_)); }

std::vector<Letter> path_alphabet(const RankedAlphabet& alphabet) {
  std::vector<Letter> gamma;
  for (SymbolId f = 0; f < alphabet.symbol_count(); ++f)
    for (unsigned i = 1; i <= alphabet.arity(f); ++i) gamma.push_back(Letter{f, i});
  return gamma;
}

namespace {

void collect_paths(const Tree& t, std::vector<Letter>& prefix, std::set<PathWord>& out) {
  if (t.is_leaf()) {
    out.insert(PathWord{prefix, t.label});
    return;
  }
  for (unsigned i = 0; i < t.kids.size(); ++i) {
    prefix.push_back(Letter{t.label, i + 1});
    collect_paths(t.kids[i], prefix, out);
    prefix.pop_back();
  }
}

using WordSet = std::set<std::vector<Letter>>;

std::vector<Tree> closure_trees(const std::vector<Letter>& prefix, unsigned budget, const std::set<PathWord>& paths,
                                const WordSet& proper_prefixes, const RankedAlphabet& alphabet) {
  std::vector<Tree> out;
  for (LeafId x = 0; x < alphabet.leaf_count(); ++x)
    if (paths.count(PathWord{prefix, x})) out.push_back(Tree::leaf(x));
  if (budget == 0) return out;
  for (SymbolId f = 0; f < alphabet.symbol_count(); ++f) {
    const unsigned m = alphabet.arity(f);
    std::vector<std::vector<Tree>> options(m);
    bool viable = true;
    for (unsigned i = 0; i < m && viable; ++i) {
      auto next = prefix;
      next.push_back(Letter{f, i + 1});
      if (!proper_prefixes.count(next)) {
        viable = false;
        break;
      }
      options[i] = closure_trees(next, budget - 1, paths, proper_prefixes, alphabet);
      viable = !options[i].empty();
    }
    if (!viable) continue;
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<Tree> kids;
      kids.reserve(m);
      for (unsigned i = 0; i < m; ++i) kids.push_back(options[i][pick[i]]);
      out.push_back(Tree::node(f, std::move(kids)));
      unsigned i = m;
      while (i > 0 && ++pick[i - 1] == options[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
    }
  }
  return out;
}

}  // namespace

std::set<PathWord> delta(const Tree& t) {
  std::set<PathWord> out;
  std::vector<Letter> prefix;
  collect_paths(t, prefix, out);
  return out;
}

std::vector<Tree> path_closure_crisp(std::span<const Tree> trees, const RankedAlphabet& alphabet,
                                     unsigned height_bound) {
  std::set<PathWord> paths;
  for (const auto& t : trees) {
    validate_tree(t, alphabet);
    auto d = delta(t);
    paths.insert(d.begin(), d.end());
  }
  WordSet proper_prefixes;
  for (const auto& p : paths)
    for (std::size_t len = 1; len <= p.word.size(); ++len)
      proper_prefixes.insert(std::vector<Letter>(p.word.begin(), p.word.begin() + static_cast<long>(len)));
  auto out = closure_trees({}, height_bound, paths, proper_prefixes, alphabet);
  std::sort(out.begin(), out.end());
  return out;
}

TreeHomomorphism::TreeHomomorphism(AlphabetPtr source, AlphabetPtr target, std::vector<Tree> leaf_images,
                                   std::vector<Tree> symbol_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      leaf_images_(std::move(leaf_images)),
      symbol_images_(std::move(symbol_images)) {
  if (leaf_images_.size() != source_->leaf_count() || symbol_images_.size() != source_->symbol_count()) {
    throw Error(Errc::ValidationError, "homomorphism must map every source symbol and leaf");
  }
  for (const auto& img : leaf_images_) validate_tree(img, *target_);
  for (SymbolId f = 0; f < symbol_images_.size(); ++f) {
    validate_shape(symbol_images_[f], *target_, false, source_->arity(f));
  }

  alphabetic_ = true;
  for (const auto& img : leaf_images_) alphabetic_ = alphabetic_ && img.is_leaf();
  for (SymbolId f = 0; f < symbol_images_.size() && alphabetic_; ++f) {
    const Tree& img = symbol_images_[f];
    alphabetic_ = img.is_node() && img.kids.size() == source_->arity(f);
    for (unsigned i = 0; alphabetic_ && i < img.kids.size(); ++i) {
      alphabetic_ = img.kids[i].kind == Tree::Kind::Var && img.kids[i].label == i + 1;
    }
  }
  if (alphabetic_) {
    std::set<std::uint32_t> heads;
    std::set<std::uint32_t> leaves;
    for (const auto& img : symbol_images_) heads.insert(img.label);
    for (const auto& img : leaf_images_) leaves.insert(img.label);
    injective_ = heads.size() == symbol_images_.size() && leaves.size() == leaf_images_.size();
  }
}

TreeHomomorphism TreeHomomorphism::identity(const AlphabetPtr& alphabet) {
  std::vector<Tree> leaves;
  std::vector<Tree> symbols;
  for (LeafId x = 0; x < alphabet->leaf_count(); ++x) leaves.push_back(Tree::leaf(x));
  for (SymbolId f = 0; f < alphabet->symbol_count(); ++f) {
    std::vector<Tree> vars;
    for (unsigned i = 1; i <= alphabet->arity(f); ++i) vars.push_back(Tree::var(i));
    symbols.push_back(Tree::node(f, std::move(vars)));
  }
  return TreeHomomorphism(alphabet, alphabet, std::move(leaves), std::move(symbols));
}

namespace {

Tree substitute_vars(const Tree& pattern, const std::vector<Tree>& args) {
  if (pattern.kind == Tree::Kind::Var) return args.at(pattern.label - 1);
  Tree out{pattern.kind, pattern.label, {}};
  out.kids.reserve(pattern.kids.size());
  for (const auto& k : pattern.kids) out.kids.push_back(substitute_vars(k, args));
  return out;
}

}  // namespace

Tree TreeHomomorphism::apply(const Tree& t) const {
  if (t.is_leaf()) return leaf_images_.at(t.label);
  if (!t.is_node()) throw Error(Errc::InvalidTree, "homomorphisms apply to plain trees only");
  std::vector<Tree> args;
  args.reserve(t.kids.size());
  for (const auto& k : t.kids) args.push_back(apply(k));
  return substitute_vars(symbol_images_.at(t.label), args);
}

std::string to_string(const Tree& t, const RankedAlphabet& alphabet) {
  switch (t.kind) {
    case Tree::Kind::Leaf: return alphabet.leaf_name(t.label);
    case Tree::Kind::Hole: return "@";
    case Tree::Kind::Var: return "$" + std::to_string(t.label);
    case Tree::Kind::Node: break;
  }
  std::string s = alphabet.symbol_name(t.label) + "(";
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) s += ',';
    s += to_string(t.kids[i], alphabet);
  }
  return s + ")";
}

std::string to_string(const Context& p, const RankedAlphabet& alphabet) { return to_string(p.body(), alphabet); }

std::string to_string(const Letter& l, const RankedAlphabet& alphabet) {
  return alphabet.symbol_name(l.symbol) + "." + std::to_string(l.index);
}

std::string to_string(const PathWord& r, const RankedAlphabet& alphabet) {
  std::string s;
  for (const auto& l : r.word) s += to_string(l, alphabet) + " ";
  return s + alphabet.leaf_name(r.leaf);
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, const RankedAlphabet& alphabet, bool allow_hole, unsigned max_var)
      : text_(text), alphabet_(alphabet), allow_hole_(allow_hole), max_var_(max_var) {}

  Tree parse() {
    Tree t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool is_name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',';
  }

  Tree term() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a symbol");
    skip_ws();
    const bool has_args = pos_ < text_.size() && text_[pos_] == '(';

    if (name == "@") {
      if (!allow_hole_) fail("hole '@' not allowed here");
      if (has_args) fail("hole takes no arguments");
      return Tree::hole();
    }
    if (name.front() == '$' && max_var_ > 0) {
      unsigned i = 0;
      for (char c : name.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad variable '" + std::string(name) + "'");
        i = i * 10 + static_cast<unsigned>(c - '0');
      }
      if (i < 1 || i > max_var_) fail("variable '" + std::string(name) + "' out of range");
      if (has_args) fail("variable takes no arguments");
      return Tree::var(i);
    }
    if (!has_args) {
      if (auto x = alphabet_.find_leaf(name)) return Tree::leaf(*x);
      if (alphabet_.find_symbol(name)) fail("symbol '" + std::string(name) + "' needs arguments");
      fail("unknown leaf '" + std::string(name) + "'");
    }
    auto f = alphabet_.find_symbol(name);
    if (!f) fail("unknown symbol '" + std::string(name) + "'");
    ++pos_;  // '('
    std::vector<Tree> kids;
    while (true) {
      kids.push_back(term());
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated argument list");
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (kids.size() != alphabet_.arity(*f)) {
      fail("symbol '" + std::string(name) + "' has arity " + std::to_string(alphabet_.arity(*f)) + ", got " +
           std::to_string(kids.size()) + " arguments");
    }
    return Tree::node(*f, std::move(kids));
  }

  std::string_view text_;
  const RankedAlphabet& alphabet_;
  bool allow_hole_;
  unsigned max_var_;
  std::size_t pos_ = 0;
};

}  // namespace

Tree parse_tree(std::string_view text, const RankedAlphabet& alphabet) {
  return TermParser(text, alphabet, false, 0).parse();
}

Context parse_context(std::string_view text, const RankedAlphabet& alphabet) {
  return Context(TermParser(text, alphabet, true, 0).parse());
}

Tree parse_pattern(std::string_view text, const RankedAlphabet& alphabet, unsigned max_var) {
  return TermParser(text, alphabet, false, max_var).parse();
}

PathWord parse_path(std::string_view text, const RankedAlphabet& alphabet) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.emplace_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) throw Error(Errc::ParseError, "empty path");
  PathWord r;
  for (std::size_t k = 0; k + 1 < tokens.size(); ++k) {
    const auto& tok = tokens[k];
    const auto dot = tok.rfind('.');
    if (dot == std::string::npos || dot + 1 == tok.size()) {
      throw Error(Errc::ParseError, "path letter '" + tok + "' is not of the form f.i");
    }
    auto f = alphabet.find_symbol(tok.substr(0, dot));
    if (!f) throw Error(Errc::ParseError, "unknown symbol in path letter '" + tok + "'");
    unsigned idx = 0;
    for (char c : tok.substr(dot + 1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(Errc::ParseError, "bad index in '" + tok + "'");
      idx = idx * 10 + static_cast<unsigned>(c - '0');
    }
    if (idx < 1 || idx > alphabet.arity(*f)) {
      throw Error(Errc::ParseError, "index out of range in path letter '" + tok + "'");
    }
    r.word.push_back(Letter{*f, idx});
  }
  auto x = alphabet.find_leaf(tokens.back());
  if (!x) throw Error(Errc::ParseError, "path must end in a leaf, got '" + tokens.back() + "'");
  r.leaf = *x;
  return r;
}

}  // namespace fta
