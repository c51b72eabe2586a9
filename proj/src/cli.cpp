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

#include "fta/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fta/chain.hpp"
#include "fta/decide.hpp"
#include "fta/error.hpp"
#include "fta/oracle.hpp"
#include "fta/paths.hpp"
#include "fta/transforms.hpp"

namespace fta {

namespace {

struct Ctx {
  const std::vector<std::string>& args;
  const Workspace& ws;
  const RunOptions& opts;
  std::string out;
  int code = 0;

  void need(std::size_t n, const char* usage) const {
    if (args.size() != n) throw Error(Errc::InvalidArgument, std::string("usage: ") + usage);
  }
  void line(const std::string& s) { out += s + "\n"; }
  void verdict(bool yes) {
    line(yes ? "yes" : "no");
    code = yes ? 0 : 1;
  }
};

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// An L-DT recognizer; crisp DT recognizers through their characteristic function over B2.
LDtRecognizer ldt(const Workspace& ws, const std::string& name) {
  if (const auto it = ws.ldt.find(name); it != ws.ldt.end()) return it->second;
  if (const auto it = ws.dt.find(name); it != ws.dt.end())
    return characteristic(it->second, std::make_shared<const Lattice>(Lattice::boolean()));
  throw Error(Errc::InvalidArgument, "no ldt recognizer named '" + name + "'");
}

// Any recognizer kind as a simple L-NDT recognizer; crisp ones over B2.
LNdtRecognizer lndt(const Workspace& ws, const std::string& name) {
  if (const auto it = ws.lndt.find(name); it != ws.lndt.end()) return it->second;
  if (const auto it = ws.ldt.find(name); it != ws.ldt.end()) return dt_to_ndt(it->second);
  if (const auto it = ws.glndt.find(name); it != ws.glndt.end()) return general_to_simple(it->second);
  const auto b2 = std::make_shared<const Lattice>(Lattice::boolean());
  if (const auto it = ws.ndt.find(name); it != ws.ndt.end()) return characteristic(it->second, b2);
  if (const auto it = ws.dt.find(name); it != ws.dt.end()) return dt_to_ndt(characteristic(it->second, b2));
  throw Error(Errc::InvalidArgument, "no recognizer named '" + name + "'");
}

AlphabetPtr recognizer_alphabet(const Workspace& ws, const std::string& name) {
  if (const auto it = ws.ldt.find(name); it != ws.ldt.end()) return it->second.alphabet();
  if (const auto it = ws.lndt.find(name); it != ws.lndt.end()) return it->second.alphabet();
  if (const auto it = ws.glndt.find(name); it != ws.glndt.end()) return it->second.alphabet;
  if (const auto it = ws.dt.find(name); it != ws.dt.end()) return it->second.alphabet();
  if (const auto it = ws.ndt.find(name); it != ws.ndt.end()) return it->second.alphabet();
  throw Error(Errc::InvalidArgument, "no recognizer named '" + name + "'");
}

AlphabetPtr alphabet_arg(const Workspace& ws, const std::string& name) {
  if (const auto it = ws.alphabets.find(name); it != ws.alphabets.end()) return it->second;
  return recognizer_alphabet(ws, name);
}

Tree tree_arg(const Workspace& ws, const std::string& text, const RankedAlphabet& sigma) {
  if (const auto it = ws.trees.find(text); it != ws.trees.end() && *it->second.alphabet == sigma) {
    return it->second.tree;
  }
  return parse_tree(text, sigma);
}

Elem elem_arg(const Lattice& l, const std::string& name) { return l.at(name); }

// Prints the lattice and alphabet blocks a result needs when the workspace
// lacks them, then the recognizer block.
template <class R>
void emit(Ctx& c, const R& r, const LatticePtr& lattice, const AlphabetPtr& alphabet) {
  if (lattice) {
    const auto it = c.ws.lattices.find(lattice->label());
    if (it == c.ws.lattices.end() || !(*it->second == *lattice)) c.out += serialize(*lattice);
  }
  const auto it = c.ws.alphabets.find(alphabet->label());
  if (it == c.ws.alphabets.end() || !(*it->second == *alphabet)) c.out += serialize(*alphabet);
  c.out += serialize(c.opts.result_name, r);
}

void emit(Ctx& c, const LDtRecognizer& r) { emit(c, r, r.lattice, r.alphabet()); }
void emit(Ctx& c, const LNdtRecognizer& r) { emit(c, r, r.lattice, r.alphabet()); }
void emit(Ctx& c, const DtRecognizer& r) { emit(c, r, nullptr, r.alphabet()); }
void emit(Ctx& c, const NdtRecognizer& r) { emit(c, r, nullptr, r.alphabet()); }

void cmd_eval(Ctx& c, bool reference) {
  c.need(3, reference ? "oracle-eval <recognizer> <tree>" : "eval <recognizer> <tree>");
  const auto& ws = c.ws;
  const std::string& name = c.args[1];
  const Tree t = tree_arg(ws, c.args[2], *recognizer_alphabet(ws, name));
  auto crisp = [](bool b) { return std::string(b ? "1" : "0"); };
  if (const auto it = ws.ldt.find(name); it != ws.ldt.end()) {
    const auto& f = it->second;
    c.line(f.lattice->name(reference ? oracle::eval_reference(f, t) : eval_dt(f, t)));
  } else if (const auto it = ws.lndt.find(name); it != ws.lndt.end()) {
    const auto& nf = it->second;
    c.line(nf.lattice->name(reference ? oracle::eval_reference(nf, t) : eval_ndt(nf, t)));
  } else if (const auto it = ws.glndt.find(name); it != ws.glndt.end()) {
    const auto& ng = it->second;
    c.line(ng.lattice->name(reference ? oracle::eval_reference(ng, t) : eval_general_ndt(ng, t)));
  } else if (const auto it = ws.dt.find(name); it != ws.dt.end()) {
    c.line(crisp(reference ? oracle::eval_reference(it->second, t) : crisp_dt_accepts(it->second, t)));
  } else {
    const auto& n = ws.ndt.at(name);
    c.line(crisp(reference ? oracle::eval_reference(n, t) : crisp_ndt_accepts(n, t)));
  }
}

void cmd_eval_path(Ctx& c) {
  c.need(3, "eval-path <recognizer> <path>");
  const std::string& name = c.args[1];
  if (const auto it = c.ws.ldt.find(name); it != c.ws.ldt.end()) {
    const auto& f = it->second;
    c.line(f.lattice->name(lambda_dt(f, parse_path(c.args[2], *f.alphabet()))));
    return;
  }
  const auto nf = lndt(c.ws, name);
  c.line(nf.lattice->name(lambda_ndt(nf, parse_path(c.args[2], *nf.alphabet()))));
}

void cmd_paths(Ctx& c) {
  c.need(3, "paths <alphabet> <tree>");
  const auto sigma = alphabet_arg(c.ws, c.args[1]);
  std::vector<std::string> lines;
  for (const auto& r : delta(tree_arg(c.ws, c.args[2], *sigma))) lines.push_back(to_string(r, *sigma));
  for (const auto& l : sorted(lines)) c.line(l);
}

void cmd_delta(Ctx& c) {
  if (c.args.size() < 3) throw Error(Errc::InvalidArgument, "usage: delta <alphabet> <tree>...");
  const auto sigma = alphabet_arg(c.ws, c.args[1]);
  std::vector<Tree> trees;
  unsigned h = 0;
  for (std::size_t i = 2; i < c.args.size(); ++i) {
    trees.push_back(tree_arg(c.ws, c.args[i], *sigma));
    h = std::max(h, height(trees.back()));
  }
  std::vector<std::string> lines;
  for (const auto& t : path_closure_crisp(trees, *sigma, c.opts.height_bound.value_or(h))) {
    lines.push_back(to_string(t, *sigma));
  }
  for (const auto& l : sorted(lines)) c.line(l);
}

void cmd_transform(Ctx& c) {
  if (c.args.size() < 3) throw Error(Errc::InvalidArgument, "usage: transform <kind> <recognizer> ...");
  const std::string& kind = c.args[1];
  const auto& ws = c.ws;
  if (kind == "topcat") {
    if (c.args.size() < 4) throw Error(Errc::InvalidArgument, "usage: transform topcat <symbol> <ldt>...");
    std::vector<LDtRecognizer> parts;
    for (std::size_t i = 3; i < c.args.size(); ++i) parts.push_back(ldt(ws, c.args[i]));
    const auto f = parts[0].alphabet()->find_symbol(c.args[2]);
    if (!f) throw Error(Errc::InvalidArgument, "unknown symbol '" + c.args[2] + "'");
    emit(c, top_concat(*f, parts));
    return;
  }
  const auto& f = ldt(ws, c.args[2]);
  auto operand = [&](const char* usage) -> const std::string& {
    c.need(4, usage);
    return c.args[3];
  };
  if (kind == "intersect") {
    emit(c, intersect_dt(f, ldt(ws, operand("transform intersect <ldt> <ldt>"))));
  } else if (kind == "product") {
    emit(c, dt_product(f, ldt(ws, operand("transform product <ldt> <ldt>"))).recognizer);
  } else if (kind == "quotient") {
    emit(c, context_quotient(f, parse_context(operand("transform quotient <ldt> <context>"), *f.alphabet())));
  } else if (kind == "embed") {
    emit(c, context_embed(f, parse_context(operand("transform embed <ldt> <context>"), *f.alphabet())));
  } else if (kind == "invhom" || kind == "image") {
    const auto& hname = operand("transform invhom|image <ldt> <hom>");
    const auto it = ws.homs.find(hname);
    if (it == ws.homs.end()) throw Error(Errc::InvalidArgument, "no homomorphism named '" + hname + "'");
    emit(c, kind == "invhom" ? inverse_hom(f, it->second) : alphabetic_image(f, it->second));
  } else if (kind == "scalar") {
    emit(c, scalar(f, elem_arg(*f.lattice, operand("transform scalar <ldt> <element>"))));
  } else if (kind == "cut") {
    emit(c, cut(f, elem_arg(*f.lattice, operand("transform cut <ldt> <element>"))));
  } else if (kind == "lattice-map") {
    const auto& pname = operand("transform lattice-map <ldt> <morphism>");
    const auto it = ws.morphisms.find(pname);
    if (it == ws.morphisms.end()) throw Error(Errc::InvalidArgument, "no morphism named '" + pname + "'");
    emit(c, lattice_map(f, it->second));
  } else {
    throw Error(Errc::UnknownCommand, "unknown transform '" + kind + "'");
  }
}

void witness_line(Ctx& c, const std::optional<Tree>& t, const RankedAlphabet& sigma) {
  if (t) c.line("witness: " + to_string(*t, sigma));
}

void cmd_decide(Ctx& c) {
  if (c.args.size() < 3) throw Error(Errc::InvalidArgument, "usage: decide <question> <recognizer> ...");
  const std::string& q = c.args[1];
  const auto& ws = c.ws;
  const std::size_t budget = c.opts.budget;
  if (q == "empty" || q == "finite" || q == "constant" || q == "crisp") {
    c.need(3, "decide empty|finite|constant|crisp <ldt>");
    const auto& f = ldt(ws, c.args[2]);
    if (q == "empty") c.verdict(is_empty_support(f, budget));
    if (q == "finite") c.verdict(is_finite_support(f, budget));
    if (q == "constant") c.verdict(is_constant(f, budget));
    if (q == "crisp") c.verdict(is_crisp(f, budget));
  } else if (q == "included" || q == "equal" || q == "disjoint") {
    c.need(4, "decide included|equal|disjoint <ldt> <ldt>");
    const auto& f = ldt(ws, c.args[2]);
    const auto cmp = dt_compare(f, ldt(ws, c.args[3]), budget);
    if (q == "included") {
      c.verdict(cmp.included);
      witness_line(c, cmp.not_included, *f.alphabet());
    } else if (q == "equal") {
      c.verdict(cmp.equivalent);
      witness_line(c, cmp.not_equal, *f.alphabet());
    } else {
      c.verdict(cmp.disjoint);
      witness_line(c, cmp.not_disjoint, *f.alphabet());
    }
  } else if (q == "ndt-equal") {
    c.need(4, "decide ndt-equal <recognizer> <recognizer>");
    const auto nf = lndt(ws, c.args[2]);
    const auto res = ndt_compare(nf, lndt(ws, c.args[3]), budget);
    c.verdict(res.equivalent);
    witness_line(c, res.counterexample, *nf.alphabet());
  } else if (q == "dt-recognizable") {
    c.need(3, "decide dt-recognizable <recognizer>");
    c.verdict(is_dt_recognizable(lndt(ws, c.args[2])));
  } else {
    throw Error(Errc::UnknownCommand, "unknown decision '" + q + "'");
  }
}

void cmd_normalize(Ctx& c) {
  c.need(2, "normalize <recognizer>");
  if (const auto it = c.ws.ldt.find(c.args[1]); it != c.ws.ldt.end()) {
    emit(c, normalize_dt(it->second));
  } else {
    emit(c, normalize_ndt(lndt(c.ws, c.args[1])));
  }
}

void cmd_range(Ctx& c) {
  c.need(2, "range <ldt>");
  const auto& f = ldt(c.ws, c.args[1]);
  std::vector<std::string> lines;
  for (const auto& e : range_dt_witnesses(f, c.opts.budget)) {
    lines.push_back(f.lattice->name(e.value) + " " + to_string(e.witness, *f.alphabet()));
  }
  for (const auto& l : sorted(lines)) c.line(l);
}

void cmd_pump(Ctx& c) {
  c.need(3, "pump <ldt> <tree>");
  const auto& f = ldt(c.ws, c.args[1]);
  const auto& sigma = *f.alphabet();
  const auto d = pump_decompose(f, tree_arg(c.ws, c.args[2], sigma));
  c.line("p = " + to_string(d.p, sigma));
  c.line("q = " + to_string(d.q, sigma));
  c.line("s = " + to_string(d.s, sigma));
}

void cmd_witness(Ctx& c) {
  c.need(3, "witness <recognizer> <path>");
  const auto nf = lndt(c.ws, c.args[1]);
  const auto& sigma = *nf.alphabet();
  const auto t = witness_tree(nf, parse_path(c.args[2], sigma));
  c.line(to_string(t, sigma) + " " + nf.lattice->name(eval_ndt(nf, t)));
}

const std::map<std::string, std::function<void(Ctx&)>>& commands() {
  static const std::map<std::string, std::function<void(Ctx&)>> table{
      {"eval", [](Ctx& c) { cmd_eval(c, false); }},
      {"oracle-eval", [](Ctx& c) { cmd_eval(c, true); }},
      {"eval-path", cmd_eval_path},
      {"paths", cmd_paths},
      {"delta", cmd_delta},
      {"transform", cmd_transform},
      {"decide", cmd_decide},
      {"normalize", cmd_normalize},
      {"subset",
       [](Ctx& c) {
         c.need(2, "subset <recognizer>");
         emit(c, subset_recognizer(lndt(c.ws, c.args[1])));
       }},
      {"path-closure",
       [](Ctx& c) {
         c.need(2, "path-closure <recognizer>");
         emit(c, path_closure_recognizer(lndt(c.ws, c.args[1])));
       }},
      {"level-set",
       [](Ctx& c) {
         c.need(3, "level-set <ldt> <element>");
         const auto& f = ldt(c.ws, c.args[1]);
         emit(c, level_set_ndt(f, elem_arg(*f.lattice, c.args[2])));
       }},
      {"range", cmd_range},
      {"pump", cmd_pump},
      {"witness", cmd_witness},
  };
  return table;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, const Workspace& ws, const RunOptions& opts) {
  CommandResult res;
  try {
    if (args.empty()) throw Error(Errc::UnknownCommand, "no command given");
    const auto it = commands().find(args[0]);
    if (it == commands().end()) throw Error(Errc::UnknownCommand, "unknown command '" + args[0] + "'");
    Ctx c{args, ws, opts, {}, 0};
    it->second(c);
    res.exit_code = c.code;
    res.out = std::move(c.out);
  } catch (const std::exception& e) {
    // Error::what() already starts with the code name.
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
  }
  return res;
}

}  // namespace fta
