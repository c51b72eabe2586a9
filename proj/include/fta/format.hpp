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

// The workspace text format: line-oriented blocks such as
//
//   lattice M2 { elements 0 c d 1; order 0<c 0<d c<1 d<1 }
//   chain C3 { 0 < d < 1 }
//   alphabet S { f/2; leaves x y }
//   ldt F over M2 alphabet S { states a0 a; initial a0; trans f a0 -> a a; final x: a=c }
//   tree t alphabet S = f(x,y)
//
// Statements end at ';' or a newline; '#' starts a comment.

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "fta/automata.hpp"
#include "fta/fuzzy_rec.hpp"
#include "fta/lattice.hpp"
#include "fta/terms.hpp"

namespace fta {

struct NamedTree {
  AlphabetPtr alphabet;
  Tree tree;
};

struct Workspace {
  std::map<std::string, LatticePtr> lattices;
  std::map<std::string, AlphabetPtr> alphabets;
  std::map<std::string, LDtRecognizer> ldt;
  std::map<std::string, LNdtRecognizer> lndt;
  std::map<std::string, DtRecognizer> dt;
  std::map<std::string, NdtRecognizer> ndt;
  std::map<std::string, GeneralLNdtRecognizer> glndt;
  std::map<std::string, NamedTree> trees;
  std::map<std::string, LatticeMorphism> morphisms;
  std::map<std::string, TreeHomomorphism> homs;

  /// Whether `name` is taken by any recognizer kind.
  bool has_recognizer(const std::string& name) const;
};

/// Parses `text` into `ws`. Syntax errors raise ParseError with line and
/// column; semantic errors raise ValidationError.
void parse_into(Workspace& ws, std::string_view text, std::string_view source = "<input>");
Workspace parse_workspace(std::string_view text, std::string_view source = "<input>");
Workspace load(std::span<const std::string> paths);

std::string serialize(const Lattice& l);
std::string serialize(const RankedAlphabet& a);
std::string serialize(const std::string& name, const LDtRecognizer& f);
std::string serialize(const std::string& name, const LNdtRecognizer& nf);
std::string serialize(const std::string& name, const DtRecognizer& d);
std::string serialize(const std::string& name, const NdtRecognizer& n);
std::string serialize(const std::string& name, const GeneralLNdtRecognizer& ng);
std::string serialize(const std::string& name, const NamedTree& t);
std::string serialize(const std::string& name, const LatticeMorphism& psi);
std::string serialize(const std::string& name, const TreeHomomorphism& h);
/// Every block: lattices, alphabets, then each remaining kind by name.
std::string serialize(const Workspace& ws);

}  // namespace fta
