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

#include <string>

#include "doctest.h"
#include "fta/cli.hpp"
#include "fta/format.hpp"
#include "fta/oracle.hpp"
#include "support.hpp"

using namespace fta;
using namespace fta::test;

namespace {

constexpr const char* kHeader =
    "lattice B2 { elements 0 1; order 0<1 }\n"
    "alphabet S { f/2; leaves x }\n";

std::optional<Errc> load_error(const std::string& body) {
  return error_of([&] { parse_workspace(std::string(kHeader) + body, "t.fta"); });
}

std::string load_message(const std::string& body) {
  try {
    parse_workspace(std::string(kHeader) + body, "t.fta");
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

CommandResult run(std::vector<std::string> args, RunOptions opts = {}) {
  return run_command(args, fixtures(), opts);
}

}  // namespace

TEST_CASE("loading rejects malformed input") {
  CHECK(load_error("") == std::nullopt);
  CHECK(load_error("ldt F over B2 alphabet S { states a; initial a; trans f a -> a }") == Errc::ValidationError);
  CHECK(load_message("ldt F over B2 alphabet S { states a; initial a; trans f a -> a }").find("ArityMismatch") !=
        std::string::npos);
  CHECK(load_error("alphabet S { g/1; leaves y }") == Errc::ValidationError);
  CHECK(load_error("lattice X { elements 0 a b 1; order 0<a 0<b }") == Errc::ValidationError);
  CHECK(load_error("ldt F over Q alphabet S { states a; initial a }") == Errc::ValidationError);
  CHECK(load_error("tree t alphabet S = f(x") == Errc::ParseError);
  CHECK(load_error("frobnicate") == Errc::ParseError);
  CHECK(load_message("\n\nfrobnicate").starts_with("ParseError: t.fta:5:"));
  CHECK(load_error("dt D alphabet S { states a; initial a }") == Errc::ValidationError);
  CHECK(load_error("chain C { 0 < 1/2 < 1/4 < 1 }") == Errc::ValidationError);
  CHECK(load_error("morphism m from B2 to B2 { 0=1 }") == Errc::ValidationError);
}

TEST_CASE("chain shorthand") {
  const auto ws = parse_workspace("chain C { 1/3 < 2/3 }");
  const auto& c = *ws.lattices.at("C");
  CHECK(c.size() == 4);
  CHECK(c.leq(c.at("1/3"), c.at("2/3")));
  CHECK(c.bottom() == c.at("0"));
  CHECK(c.top() == c.at("1"));
}

TEST_CASE("serialization round-trips") {
  const auto& ws = fixtures();
  const std::string text = serialize(ws);
  const auto again = parse_workspace(text, "dump");
  CHECK(serialize(again) == text);
  CHECK(again.ldt.size() == ws.ldt.size());
  CHECK(again.homs.size() == ws.homs.size());
  for (const auto& [name, f] : ws.ldt)
    for (const auto& t : oracle::enum_trees(*f.alphabet(), 2)) CHECK(eval_dt(again.ldt.at(name), t) == eval_dt(f, t));
  const auto& u = again.lndt.at("UnionFxyFyx");
  for (const auto& t : oracle::enum_trees(*u.alphabet(), 2)) CHECK(eval_ndt(u, t) == eval_ndt(lndt("UnionFxyFyx"), t));
}

TEST_CASE("evaluation commands") {
  CHECK(run({"eval", "F64", "f(x,x)"}).out == "c\n");
  CHECK(run({"eval", "F64", "f(y,y)"}).out == "d\n");
  CHECK(run({"eval", "F64", "f(x,y)"}).out == "0\n");
  CHECK(run({"eval", "F64", "t1"}).out == "0\n");
  CHECK(run({"oracle-eval", "UnionFxyFyx", "f(y,x)"}).out == "1\n");
  CHECK(run({"eval-path", "F85", "f.1 x"}).out == "1\n");
  CHECK(run({"paths", "S2", "f(x,f(y,x))"}).out == "f.1 x\nf.2 f.1 y\nf.2 f.2 x\n");
  CHECK(run({"delta", "S2", "f(x,y)", "f(y,x)"}).out == "f(x,x)\nf(x,y)\nf(y,x)\nf(y,y)\n");
  CHECK(run({"range", "F64"}).out == "0 x\nc f(x,x)\nd f(y,y)\n");
}

TEST_CASE("decision commands") {
  CHECK(run({"decide", "equal", "F64", "F64"}).exit_code == 0);
  CHECK(run({"decide", "equal", "F64", "F64"}).out == "yes\n");
  const auto ne = run({"decide", "dt-recognizable", "UnionFxyFyx"});
  CHECK(ne.exit_code == 1);
  CHECK(ne.out == "no\n");
  CHECK(run({"decide", "dt-recognizable", "F66"}).exit_code == 0);
  CHECK(run({"decide", "empty", "F85"}).exit_code == 0);
  CHECK(run({"decide", "finite", "G85"}).exit_code == 1);
  CHECK(run({"decide", "constant", "F85"}).exit_code == 0);
  CHECK(run({"decide", "crisp", "F64"}).exit_code == 1);
  const auto inc = run({"decide", "included", "F64", "F66"});
  CHECK(inc.exit_code == 2);
  CHECK(inc.err.starts_with("error: LatticeMismatch: "));
  CHECK(run({"decide", "ndt-equal", "UnionFxyFyx", "UnionFxyFyx"}).exit_code == 0);
  CHECK(run({"decide", "empty", "Fxy"}).exit_code == 1);
}

TEST_CASE("construction commands print loadable blocks") {
  RunOptions named;
  named.result_name = "G";
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"transform", "scalar", "F64", "c"},
           {"transform", "intersect", "F64", "F64"},
           {"transform", "quotient", "F64", "f(@,y)"},
           {"transform", "invhom", "F64", "swap"},
           {"transform", "lattice-map", "F64", "collapse"},
           {"normalize", "F85"},
           {"subset", "UnionFxyFyx"},
           {"path-closure", "UnionFxyFyx"}}) {
    const auto r = run(args, named);
    INFO(args[0] << " " << args[1]);
    REQUIRE(r.exit_code == 0);
    Workspace ws = fixtures();
    ws.ldt.erase("G");
    CHECK(error_of([&] { parse_into(ws, r.out, "out"); }) == std::nullopt);
    CHECK(ws.ldt.contains("G"));
  }
  const auto lvl = run({"level-set", "F66", "d"});
  CHECK(lvl.out.starts_with("ndt result alphabet S2 {"));
  const auto pc = run({"transform", "lattice-map", "F64", "collapse"});
  CHECK(pc.out.starts_with("ldt result over B2 alphabet S2 {"));
}

TEST_CASE("command errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"bogus"}).err == "error: UnknownCommand: unknown command 'bogus'\n");
  CHECK(run({"eval", "Nope", "x"}).exit_code == 2);
  CHECK(run({"eval", "F64"}).err.starts_with("error: InvalidArgument: usage: eval"));
  CHECK(run({"eval", "F64", "g(x)"}).exit_code == 2);
  CHECK(run({"pump", "F64", "x"}).err.starts_with("error: TreeTooShort: "));
  CHECK(run({"normalize", "F64"}).err.starts_with("error: NotAChain: "));
  RunOptions tiny;
  tiny.budget = 1;
  CHECK(run({"decide", "equal", "F64", "F64"}, tiny).err.starts_with("error: BudgetExceeded: "));
}
