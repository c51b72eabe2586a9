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

#include "fta/format.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "fta/error.hpp"

namespace fta {

bool Workspace::has_recognizer(const std::string& name) const {
  return ldt.count(name) || lndt.count(name) || dt.count(name) || ndt.count(name) || glndt.count(name);
}

namespace {

struct Item {
  enum class Kind { Text, Open, Close } kind = Kind::Text;
  std::string text;
  int line = 1;
  int col = 1;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Item> split_items(std::string_view text) {
  std::vector<Item> out;
  std::string cur;
  int line = 1, col = 1, start_line = 1, start_col = 1;
  auto flush = [&] {
    auto t = trim(cur);
    if (!t.empty()) out.push_back({Item::Kind::Text, std::move(t), start_line, start_col});
    cur.clear();
  };
  bool comment = false;
  for (char c : text) {
    if (comment && c != '\n') {
      ++col;
      continue;
    }
    comment = false;
    if (c == '#') {
      comment = true;
    } else if (c == '\n' || c == ';') {
      flush();
    } else if (c == '{' || c == '}') {
      flush();
      out.push_back({c == '{' ? Item::Kind::Open : Item::Kind::Close, std::string(1, c), line, col});
    } else {
      if (trim(cur).empty() && c != ' ' && c != '\t') {
        cur.clear();
        start_line = line;
        start_col = col;
      }
      cur += c;
    }
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  flush();
  return out;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::string spaced;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      spaced += " -> ";
      ++i;
    } else if (s[i] == '=' || s[i] == ':' || s[i] == '<') {
      spaced += ' ';
      spaced += s[i];
      spaced += ' ';
    } else {
      spaced += s[i];
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<std::pair<long long, long long>> as_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    const long long p = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash)) return std::nullopt;
    if (slash == std::string::npos) return std::make_pair(p, 1LL);
    const long long q = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1 || q <= 0) return std::nullopt;
    return std::make_pair(p, q);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

class Parser {
 public:
  Parser(Workspace& ws, std::string_view text, std::string_view source)
      : ws_(ws), source_(source), items_(split_items(text)) {}

  void run() {
    while (pos_ < items_.size()) {
      const Item& head = items_[pos_++];
      if (head.kind != Item::Kind::Text) fail(head, "expected a block header");
      const auto words = tokenize(head.text);
      const std::string& kind = words[0];
      if (kind == "tree") {
        guarded(head, [&] { tree_stmt(head); });
        continue;
      }
      std::vector<Item> body = read_body(head);
      guarded(head, [&] {
        if (kind == "lattice") {
          lattice_block(head, words, body);
        } else if (kind == "chain") {
          chain_block(head, words, body);
        } else if (kind == "alphabet") {
          alphabet_block(head, words, body);
        } else if (kind == "ldt" || kind == "lndt" || kind == "glndt") {
          fuzzy_block(head, words, body);
        } else if (kind == "dt" || kind == "ndt") {
          crisp_block(head, words, body);
        } else if (kind == "morphism") {
          morphism_block(head, words, body);
        } else if (kind == "hom") {
          hom_block(head, words, body);
        } else {
          fail(head, "unknown block kind '" + kind + "'");
        }
      });
    }
  }

 private:
  [[noreturn]] void fail(const Item& at, const std::string& msg) const {
    throw Error(Errc::ParseError,
                source_ + ":" + std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + msg);
  }

  [[noreturn]] void invalid(const Item& at, const std::string& msg) const {
    throw Error(Errc::ValidationError, source_ + ":" + std::to_string(at.line) + ": " + msg);
  }

  template <class Fn>
  void guarded(const Item& at, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      if (e.code() == Errc::ParseError || e.code() == Errc::ValidationError) throw;
      invalid(at, std::string(errc_name(e.code())) + ": " + e.what());
    }
  }

  std::vector<Item> read_body(const Item& head) {
    if (pos_ >= items_.size() || items_[pos_].kind != Item::Kind::Open) fail(head, "expected '{'");
    ++pos_;
    std::vector<Item> body;
    while (true) {
      if (pos_ >= items_.size()) fail(head, "unterminated block");
      const Item& it = items_[pos_++];
      if (it.kind == Item::Kind::Close) return body;
      if (it.kind == Item::Kind::Open) fail(it, "nested '{'");
      body.push_back(it);
    }
  }

  // Header "<kind> <name> key value key value ...".
  std::map<std::string, std::string> header(const Item& at, const std::vector<std::string>& words,
                                            std::initializer_list<const char*> keys) {
    if (words.size() != 2 + 2 * keys.size()) fail(at, "malformed '" + words[0] + "' header");
    std::map<std::string, std::string> out{{"name", words[1]}};
    std::size_t i = 2;
    for (const char* k : keys) {
      if (words[i] != k) fail(at, std::string("expected '") + k + "'");
      out[k] = words[i + 1];
      i += 2;
    }
    return out;
  }

  LatticePtr lattice(const Item& at, const std::string& name) const {
    const auto it = ws_.lattices.find(name);
    if (it == ws_.lattices.end()) invalid(at, "unknown lattice '" + name + "'");
    return it->second;
  }

  AlphabetPtr alphabet(const Item& at, const std::string& name) const {
    const auto it = ws_.alphabets.find(name);
    if (it == ws_.alphabets.end()) invalid(at, "unknown alphabet '" + name + "'");
    return it->second;
  }

  Elem element(const Item& at, const Lattice& l, const std::string& name) const {
    const auto e = l.find(name);
    if (!e) invalid(at, "'" + name + "' is not an element of " + l.label());
    return *e;
  }

  void fresh_lattice(const Item& at, const std::string& name) const {
    if (ws_.lattices.count(name)) invalid(at, "duplicate lattice name '" + name + "'");
  }

  void fresh_recognizer(const Item& at, const std::string& name) const {
    if (ws_.has_recognizer(name)) invalid(at, "duplicate recognizer name '" + name + "'");
  }

  void lattice_block(const Item& head, const std::vector<std::string>& words, const std::vector<Item>& body) {
    const auto h = header(head, words, {});
    fresh_lattice(head, h.at("name"));
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> rel;
    for (const auto& it : body) {
      const auto toks = tokenize(it.text);
      if (toks[0] == "elements") {
        names.insert(names.end(), toks.begin() + 1, toks.end());
      } else if (toks[0] == "order") {
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (toks[i] != "<") continue;
          if (i == 1 || i + 1 >= toks.size() || toks[i + 1] == "<") fail(it, "malformed order relation");
          rel.emplace_back(toks[i - 1], toks[i + 1]);
        }
      } else {
        fail(it, "expected 'elements' or 'order'");
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> less;
    auto index = [&](const std::string& n) {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return i;
      invalid(head, "order mentions unknown element '" + n + "'");
    };
    for (const auto& [lo, hi] : rel) less.emplace_back(index(lo), index(hi));
    ws_.lattices[h.at("name")] = std::make_shared<const Lattice>(Lattice::from_order(h.at("name"), names, less));
  }

  void chain_block(const Item& head, const std::vector<std::string>& words, const std::vector<Item>& body) {
    const auto h = header(head, words, {});
    fresh_lattice(head, h.at("name"));
    if (body.size() != 1) fail(head, "a chain body is one statement 'a < b < ...'");
    const auto toks = tokenize(body[0].text);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      if ((i % 2 == 1) != (toks[i] == "<")) fail(body[0], "malformed chain");
      if (i % 2 == 0) names.push_back(toks[i]);
    }
    if (toks.size() % 2 == 0) fail(body[0], "malformed chain");
    if (names.front() != "0") names.insert(names.begin(), "0");
    if (names.back() != "1") names.push_back("1");
    for (std::size_t i = 1; i < names.size(); ++i) {
      const auto a = as_rational(names[i - 1]);
      const auto b = as_rational(names[i]);
      if (a && b && a->first * b->second >= b->first * a->second) {
        invalid(body[0], "chain constants " + names[i - 1] + " and " + names[i] + " are not increasing");
      }
    }
    ws_.lattices[h.at("name")] = std::make_shared<const Lattice>(Lattice::chain(h.at("name"), names));
  }

  void alphabet_block(const Item& head, const std::vector<std::string>& words, const std::vector<Item>& body) {
    const auto h = header(head, words, {});
    if (ws_.alphabets.count(h.at("name"))) invalid(head, "duplicate alphabet name '" + h.at("name") + "'");
    std::vector<RankedAlphabet::Symbol> symbols;
    std::vector<std::string> leaves;
    for (const auto& it : body) {
      const auto toks = tokenize(it.text);
      if (toks[0] == "leaves") {
        leaves.insert(leaves.end(), toks.begin() + 1, toks.end());
        continue;
      }
      for (const auto& t : toks) {
        const auto slash = t.rfind('/');
        if (slash == std::string::npos || slash == 0) fail(it, "expected 'symbol/arity', got '" + t + "'");
        const auto r = as_rational("0/" + t.substr(slash + 1));
        if (!r || r->second > 64) fail(it, "bad arity in '" + t + "'");
        symbols.push_back({t.substr(0, slash), static_cast<unsigned>(r->second)});
      }
    }
    ws_.alphabets[h.at("name")] = std::make_shared<const RankedAlphabet>(h.at("name"), symbols, leaves);
  }

  struct Body {
    std::vector<std::string> states;
    std::map<std::string, State> index;
    std::vector<const Item*> initial, trans, final;
  };

  Body split_body(const std::vector<Item>& body) {
    Body b;
    for (const auto& it : body) {
      const auto toks = tokenize(it.text);
      if (toks[0] == "states") {
        for (std::size_t i = 1; i < toks.size(); ++i) {
          if (!b.index.emplace(toks[i], static_cast<State>(b.states.size())).second) {
            invalid(it, "duplicate state '" + toks[i] + "'");
          }
          b.states.push_back(toks[i]);
        }
      } else if (toks[0] == "initial") {
        b.initial.push_back(&it);
      } else if (toks[0] == "trans") {
        b.trans.push_back(&it);
      } else if (toks[0] == "final") {
        b.final.push_back(&it);
      } else {
        fail(it, "expected 'states', 'initial', 'trans' or 'final'");
      }
    }
    return b;
  }

  State state(const Item& at, const Body& b, const std::string& name) const {
    const auto it = b.index.find(name);
    if (it == b.index.end()) invalid(at, "unknown state '" + name + "'");
    return it->second;
  }

  struct Trans {
    SymbolId f;
    State from;
    StateTuple to;
    std::optional<std::string> degree;
  };

  Trans trans(const Item& it, const Body& b, const RankedAlphabet& sigma, bool weighted) const {
    const auto toks = tokenize(it.text);
    if (toks.size() < 4 || toks[3] != "->") fail(it, "expected 'trans f a -> a1 ... am'");
    const auto f = sigma.find_symbol(toks[1]);
    if (!f) invalid(it, "unknown symbol '" + toks[1] + "'");
    Trans t{*f, state(it, b, toks[2]), {}, std::nullopt};
    std::size_t end = toks.size();
    if (weighted) {
      if (end < 6 || toks[end - 2] != "=") fail(it, "expected '= degree' after the target tuple");
      t.degree = toks[end - 1];
      end -= 2;
    }
    for (std::size_t i = 4; i < end; ++i) t.to.push_back(state(it, b, toks[i]));
    if (t.to.size() != sigma.arity(*f)) {
      invalid(it, "ArityMismatch: " + toks[1] + " has arity " + std::to_string(sigma.arity(*f)));
    }
    return t;
  }

  // final x: a=c b=d (fuzzy) or final x: a b (crisp).
  template <class Set>
  void finals(const Body& b, const RankedAlphabet& sigma, Set&& set, bool fuzzy) const {
    for (const Item* it : b.final) {
      const auto toks = tokenize(it->text);
      if (toks.size() < 3 || toks[2] != ":") fail(*it, "expected 'final x: ...'");
      const auto x = sigma.find_leaf(toks[1]);
      if (!x) invalid(*it, "unknown leaf '" + toks[1] + "'");
      if (fuzzy) {
        if ((toks.size() - 3) % 3 != 0) fail(*it, "expected 'state=degree' pairs");
        for (std::size_t i = 3; i < toks.size(); i += 3) {
          if (toks[i + 1] != "=") fail(*it, "expected 'state=degree' pairs");
          set(*it, *x, state(*it, b, toks[i]), toks[i + 2]);
        }
      } else {
        for (std::size_t i = 3; i < toks.size(); ++i) set(*it, *x, state(*it, b, toks[i]), std::string());
      }
    }
  }

  void fuzzy_block(const Item& head, const std::vector<std::string>& words, const std::vector<Item>& raw) {
    const std::string& kind = words[0];
    const auto h = header(head, words, {"over", "alphabet"});
    const std::string name = h.at("name");
    fresh_recognizer(head, name);
    const auto lat = lattice(head, h.at("over"));
    const auto sig = alphabet(head, h.at("alphabet"));
    const auto& sigma = *sig;
    const Body b = split_body(raw);
    const std::size_t n = b.states.size();

    FinalTable omega(sigma.leaf_count(), std::vector<Elem>(n, lat->bottom()));
    finals(b, sigma, [&](const Item& at, LeafId x, State a, const std::string& v) {
      omega[x][a] = element(at, *lat, v);
    }, true);

    if (kind == "glndt") {
      auto ng = GeneralLNdtRecognizer::zero(lat, sig, b.states);
      for (const Item* it : b.initial) {
        const auto toks = tokenize(it->text);
        if ((toks.size() - 1) % 3 != 0) fail(*it, "expected 'initial a=degree ...'");
        for (std::size_t i = 1; i < toks.size(); i += 3) {
          if (toks[i + 1] != "=") fail(*it, "expected 'initial a=degree ...'");
          ng.iota[state(*it, b, toks[i])] = element(*it, *lat, toks[i + 2]);
        }
      }
      for (const Item* it : b.trans) {
        const auto t = trans(*it, b, sigma, true);
        ng.set_gamma(t.f, t.from, t.to, element(*it, *lat, *t.degree));
      }
      ng.omega = std::move(omega);
      ng.validate();
      ws_.glndt.emplace(name, std::move(ng));
      return;
    }

    std::vector<State> initial;
    for (const Item* it : b.initial) {
      const auto toks = tokenize(it->text);
      for (std::size_t i = 1; i < toks.size(); ++i) initial.push_back(state(*it, b, toks[i]));
    }

    if (kind == "ldt") {
      if (initial.size() != 1) invalid(head, "an ldt needs exactly one initial state");
      ws_.ldt.emplace(name, LDtRecognizer{lat, dt_algebra(head, b, sig), initial[0], std::move(omega)});
      ws_.ldt.at(name).validate();
    } else {
      ws_.lndt.emplace(name, LNdtRecognizer{lat, ndt_algebra(b, sig), make_state_set(initial), std::move(omega)});
      ws_.lndt.at(name).validate();
    }
  }

  DtAlgebra dt_algebra(const Item& head, const Body& b, const AlphabetPtr& sig) const {
    const auto& sigma = *sig;
    std::vector<std::vector<std::optional<StateTuple>>> seen(sigma.symbol_count(),
                                                             std::vector<std::optional<StateTuple>>(b.states.size()));
    for (const Item* it : b.trans) {
      auto t = trans(*it, b, sigma, false);
      auto& slot = seen[t.f][t.from];
      if (slot) invalid(*it, "second transition for " + sigma.symbol_name(t.f) + " from " + b.states[t.from]);
      slot = std::move(t.to);
    }
    std::vector<std::vector<StateTuple>> ops(sigma.symbol_count());
    for (SymbolId f = 0; f < sigma.symbol_count(); ++f)
      for (State a = 0; a < b.states.size(); ++a) {
        if (!seen[f][a]) invalid(head, "missing transition for " + sigma.symbol_name(f) + " from " + b.states[a]);
        ops[f].push_back(*seen[f][a]);
      }
    return DtAlgebra(sig, b.states, std::move(ops));
  }

  NdtAlgebra ndt_algebra(const Body& b, const AlphabetPtr& sig) const {
    const auto& sigma = *sig;
    std::vector<std::vector<std::vector<StateTuple>>> ops(
        sigma.symbol_count(), std::vector<std::vector<StateTuple>>(b.states.size()));
    for (const Item* it : b.trans) {
      auto t = trans(*it, b, sigma, false);
      ops[t.f][t.from].push_back(std::move(t.to));
    }
    return NdtAlgebra(sig, b.states, std::move(ops));
  }

  void crisp_block(const Item& head, const std::vector<std::string>& words, const std::vector<Item>& raw) {
    const auto h = header(head, words, {"alphabet"});
    const std::string name = h.at("name");
    fresh_recognizer(head, name);
    const auto sig = alphabet(head, h.at("alphabet"));
    const Body b = split_body(raw);
    std::vector<std::vector<bool>> final(sig->leaf_count(), std::vector<bool>(b.states.size(), false));
    finals(b, *sig, [&](const Item&, LeafId x, State a, const std::string&) { final[x][a] = true; }, false);
    std::vector<State> initial;
    for (const Item* it : b.initial) {
      const auto toks = tokenize(it->text);
      for (std::size_t i = 1; i < toks.size(); ++i) initial.push_back(state(*it, b, toks[i]));
    }
    if (words[0] == "dt") {
      if (initial.size() != 1) invalid(head, "a dt needs exactly one initial state");
      ws_.dt.emplace(name, DtRecognizer{dt_algebra(head, b, sig), initial[0], std::move(final)});
      ws_.dt.at(name).validate();
    } else {
      ws_.ndt.emplace(name, NdtRecognizer{ndt_algebra(b, sig), make_state_set(initial), std::move(final)});
      ws_.ndt.at(name).validate();
    }
  }

  void tree_stmt(const Item& head) {
    const auto eq = head.text.find('=');
    if (eq == std::string::npos) fail(head, "expected 'tree <name> alphabet <alphabet> = <tree>'");
    const auto words = tokenize(head.text.substr(0, eq));
    const auto h = header(head, words, {"alphabet"});
    if (ws_.trees.count(h.at("name"))) invalid(head, "duplicate tree name '" + h.at("name") + "'");
    const auto sig = alphabet(head, h.at("alphabet"));
    ws_.trees[h.at("name")] = NamedTree{sig, parse_tree(trim(head.text.substr(eq + 1)), *sig)};
  }

  void morphism_block(const Item& head, const std::vector<std::string>& words, const std::vector<Item>& body) {
    const auto h = header(head, words, {"from", "to"});
    if (ws_.morphisms.count(h.at("name"))) invalid(head, "duplicate morphism name '" + h.at("name") + "'");
    LatticeMorphism psi{lattice(head, h.at("from")), lattice(head, h.at("to")), {}};
    std::vector<std::optional<Elem>> image(psi.source->size());
    for (const auto& it : body) {
      const auto toks = tokenize(it.text);
      if (toks.size() % 3 != 0) fail(it, "expected 'a=b' pairs");
      for (std::size_t i = 0; i < toks.size(); i += 3) {
        if (toks[i + 1] != "=") fail(it, "expected 'a=b' pairs");
        image[element(it, *psi.source, toks[i]).id] = element(it, *psi.target, toks[i + 2]);
      }
    }
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (!image[i]) invalid(head, "no image for " + psi.source->name(Elem{static_cast<std::uint32_t>(i)}));
      psi.image.push_back(*image[i]);
    }
    ws_.morphisms.emplace(h.at("name"), std::move(psi));
  }

  void hom_block(const Item& head, const std::vector<std::string>& words, const std::vector<Item>& body) {
    const auto h = header(head, words, {"from", "to"});
    if (ws_.homs.count(h.at("name"))) invalid(head, "duplicate homomorphism name '" + h.at("name") + "'");
    const auto src = alphabet(head, h.at("from"));
    const auto dst = alphabet(head, h.at("to"));
    std::vector<std::optional<Tree>> leaves(src->leaf_count()), symbols(src->symbol_count());
    for (const auto& it : body) {
      const auto eq = it.text.find('=');
      if (eq == std::string::npos) fail(it, "expected '<symbol or leaf> = <tree>'");
      const std::string lhs = trim(it.text.substr(0, eq));
      const std::string rhs = trim(it.text.substr(eq + 1));
      if (const auto f = src->find_symbol(lhs)) {
        symbols[*f] = parse_pattern(rhs, *dst, src->arity(*f));
      } else if (const auto x = src->find_leaf(lhs)) {
        leaves[*x] = parse_tree(rhs, *dst);
      } else {
        invalid(it, "'" + lhs + "' is not in alphabet " + src->label());
      }
    }
    std::vector<Tree> li, si;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      if (!leaves[i]) invalid(head, "no image for leaf " + src->leaf_name(static_cast<LeafId>(i)));
      li.push_back(*leaves[i]);
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (!symbols[i]) invalid(head, "no image for symbol " + src->symbol_name(static_cast<SymbolId>(i)));
      si.push_back(*symbols[i]);
    }
    ws_.homs.emplace(h.at("name"), TreeHomomorphism(src, dst, std::move(li), std::move(si)));
  }

  Workspace& ws_;
  std::string source_;
  std::vector<Item> items_;
  std::size_t pos_ = 0;
};

std::string join_names(const std::vector<std::string>& names, const StateSet& h) {
  std::string s;
  for (State a : h) s += " " + names[a];
  return s;
}

std::string tuple_text(const std::vector<std::string>& names, const StateTuple& t) {
  std::string s;
  for (State a : t) s += " " + names[a];
  return s;
}

std::string fuzzy_finals(const Lattice& l, const RankedAlphabet& sigma, const std::vector<std::string>& names,
                         const FinalTable& omega) {
  std::string s;
  for (LeafId x = 0; x < sigma.leaf_count(); ++x) {
    std::string line;
    for (State a = 0; a < names.size(); ++a)
      if (omega[x][a] != l.bottom()) line += " " + names[a] + "=" + l.name(omega[x][a]);
    if (!line.empty()) s += "  final " + sigma.leaf_name(x) + ":" + line + "\n";
  }
  return s;
}

std::string crisp_finals(const RankedAlphabet& sigma, const std::vector<std::string>& names,
                         const std::vector<std::vector<bool>>& final) {
  std::string s;
  for (LeafId x = 0; x < sigma.leaf_count(); ++x) {
    std::string line;
    for (State a = 0; a < names.size(); ++a)
      if (final[x][a]) line += " " + names[a];
    if (!line.empty()) s += "  final " + sigma.leaf_name(x) + ":" + line + "\n";
  }
  return s;
}

std::string states_line(const std::vector<std::string>& names) {
  std::string s = "  states";
  for (const auto& n : names) s += " " + n;
  return s + "\n";
}

std::string dt_trans(const DtAlgebra& a) {
  const auto& sigma = *a.alphabet();
  std::string s;
  for (SymbolId f = 0; f < sigma.symbol_count(); ++f)
    for (State q = 0; q < a.state_count(); ++q)
      s += "  trans " + sigma.symbol_name(f) + " " + a.state_name(q) + " ->" + tuple_text(a.state_names(), a.op(f, q)) +
           "\n";
  return s;
}

std::string ndt_trans(const NdtAlgebra& a) {
  const auto& sigma = *a.alphabet();
  std::string s;
  for (SymbolId f = 0; f < sigma.symbol_count(); ++f)
    for (State q = 0; q < a.state_count(); ++q)
      for (const auto& t : a.op(f, q))
        s += "  trans " + sigma.symbol_name(f) + " " + a.state_name(q) + " ->" + tuple_text(a.state_names(), t) + "\n";
  return s;
}

}  // namespace

void parse_into(Workspace& ws, std::string_view text, std::string_view source) {
  Parser(ws, text, source).run();
}

Workspace parse_workspace(std::string_view text, std::string_view source) {
  Workspace ws;
  parse_into(ws, text, source);
  return ws;
}

Workspace load(std::span<const std::string> paths) {
  Workspace ws;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + p + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    parse_into(ws, buf.str(), p);
  }
  return ws;
}

std::string serialize(const Lattice& l) {
  std::string s = "lattice " + l.label() + " {\n  elements";
  for (Elem e : l.elements()) s += " " + l.name(e);
  s += "\n";
  const auto covers = l.covers();
  if (!covers.empty()) {
    s += "  order";
    for (const auto& [lo, hi] : covers) s += " " + l.name(lo) + "<" + l.name(hi);
    s += "\n";
  }
  return s + "}\n";
}

std::string serialize(const RankedAlphabet& a) {
  std::string s = "alphabet " + a.label() + " {\n";
  if (a.symbol_count()) {
    s += " ";
    for (const auto& sym : a.symbols()) s += " " + sym.name + "/" + std::to_string(sym.arity);
    s += "\n";
  }
  s += "  leaves";
  for (const auto& x : a.leaves()) s += " " + x;
  return s + "\n}\n";
}

std::string serialize(const std::string& name, const LDtRecognizer& f) {
  const auto& names = f.algebra.state_names();
  return "ldt " + name + " over " + f.lattice->label() + " alphabet " + f.alphabet()->label() + " {\n" +
         states_line(names) + "  initial " + names[f.initial] + "\n" + dt_trans(f.algebra) +
         fuzzy_finals(*f.lattice, *f.alphabet(), names, f.omega) + "}\n";
}

std::string serialize(const std::string& name, const LNdtRecognizer& nf) {
  const auto& names = nf.algebra.state_names();
  return "lndt " + name + " over " + nf.lattice->label() + " alphabet " + nf.alphabet()->label() + " {\n" +
         states_line(names) + "  initial" + join_names(names, nf.initial) + "\n" + ndt_trans(nf.algebra) +
         fuzzy_finals(*nf.lattice, *nf.alphabet(), names, nf.omega) + "}\n";
}

std::string serialize(const std::string& name, const DtRecognizer& d) {
  const auto& names = d.algebra.state_names();
  return "dt " + name + " alphabet " + d.alphabet()->label() + " {\n" + states_line(names) + "  initial " +
         names[d.initial] + "\n" + dt_trans(d.algebra) + crisp_finals(*d.alphabet(), names, d.final) + "}\n";
}

std::string serialize(const std::string& name, const NdtRecognizer& n) {
  const auto& names = n.algebra.state_names();
  return "ndt " + name + " alphabet " + n.alphabet()->label() + " {\n" + states_line(names) + "  initial" +
         join_names(names, n.initial) + "\n" + ndt_trans(n.algebra) + crisp_finals(*n.alphabet(), names, n.final) +
         "}\n";
}

std::string serialize(const std::string& name, const GeneralLNdtRecognizer& ng) {
  const Lattice& l = *ng.lattice;
  const auto& sigma = *ng.alphabet;
  const std::size_t n = ng.states.size();
  std::string s = "glndt " + name + " over " + l.label() + " alphabet " + sigma.label() + " {\n" +
                  states_line(ng.states) + "  initial";
  for (State a = 0; a < n; ++a)
    if (ng.iota[a] != l.bottom()) s += " " + ng.states[a] + "=" + l.name(ng.iota[a]);
  s += "\n";
  for (SymbolId f = 0; f < sigma.symbol_count(); ++f)
    for (State a = 0; a < n; ++a) {
      StateTuple t(sigma.arity(f), 0);
      while (true) {
        const Elem c = ng.gamma_at(f, a, t);
        if (c != l.bottom()) {
          s += "  trans " + sigma.symbol_name(f) + " " + ng.states[a] + " ->" + tuple_text(ng.states, t) + " = " +
               l.name(c) + "\n";
        }
        std::size_t i = t.size();
        while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
        if (i == 0) break;
      }
    }
  return s + fuzzy_finals(l, sigma, ng.states, ng.omega) + "}\n";
}

std::string serialize(const std::string& name, const NamedTree& t) {
  return "tree " + name + " alphabet " + t.alphabet->label() + " = " + to_string(t.tree, *t.alphabet) + "\n";
}

std::string serialize(const std::string& name, const LatticeMorphism& psi) {
  std::string s = "morphism " + name + " from " + psi.source->label() + " to " + psi.target->label() + " {\n ";
  for (Elem e : psi.source->elements()) s += " " + psi.source->name(e) + "=" + psi.target->name(psi(e));
  return s + "\n}\n";
}

std::string serialize(const std::string& name, const TreeHomomorphism& h) {
  const auto& src = *h.source();
  const auto& dst = *h.target();
  std::string s = "hom " + name + " from " + src.label() + " to " + dst.label() + " {\n";
  for (SymbolId f = 0; f < src.symbol_count(); ++f)
    s += "  " + src.symbol_name(f) + " = " + to_string(h.symbol_image(f), dst) + "\n";
  for (LeafId x = 0; x < src.leaf_count(); ++x)
    s += "  " + src.leaf_name(x) + " = " + to_string(h.leaf_image(x), dst) + "\n";
  return s + "}\n";
}

std::string serialize(const Workspace& ws) {
  std::string s;
  for (const auto& [_, l] : ws.lattices) s += serialize(*l);
  for (const auto& [_, a] : ws.alphabets) s += serialize(*a);
  for (const auto& [n, v] : ws.ldt) s += serialize(n, v);
  for (const auto& [n, v] : ws.lndt) s += serialize(n, v);
  for (const auto& [n, v] : ws.glndt) s += serialize(n, v);
  for (const auto& [n, v] : ws.dt) s += serialize(n, v);
  for (const auto& [n, v] : ws.ndt) s += serialize(n, v);
  for (const auto& [n, v] : ws.trees) s += serialize(n, v);
  for (const auto& [n, v] : ws.morphisms) s += serialize(n, v);
  for (const auto& [n, v] : ws.homs) s += serialize(n, v);
  return s;
}

}  // namespace fta
