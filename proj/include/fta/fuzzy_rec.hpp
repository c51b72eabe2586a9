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

#include <optional>
#include <vector>

#include "fta/automata.hpp"
#include "fta/lattice.hpp"
#include "fta/terms.hpp"

namespace fta {

/// omega[x][a] is the degree to which a is final for leaf x.
using FinalTable = std::vector<std::vector<Elem>>;

/// An L-DT recognizer (A, a0, omega).
struct LDtRecognizer {
  LatticePtr lattice;
  DtAlgebra algebra;
  State initial = 0;
  FinalTable omega;

  void validate() const;
  const AlphabetPtr& alphabet() const noexcept { return algebra.alphabet(); }
  std::size_t state_count() const noexcept { return algebra.state_count(); }
};

/// An L-NDT recognizer (A, I, omega) with crisp transitions and initial set.
struct LNdtRecognizer {
  LatticePtr lattice;
  NdtAlgebra algebra;
  StateSet initial;
  FinalTable omega;

  void validate() const;
  const AlphabetPtr& alphabet() const noexcept { return algebra.alphabet(); }
  std::size_t state_count() const noexcept { return algebra.state_count(); }
};

/// A general L-NDT recognizer (A, gamma, iota, omega) with fuzzy transitions
/// and a fuzzy initial set.
struct GeneralLNdtRecognizer {
  LatticePtr lattice;
  AlphabetPtr alphabet;
  std::vector<std::string> states;
  /// gamma[f] is indexed by (a, a1, ..., am) read as a base-|A| numeral.
  std::vector<std::vector<Elem>> gamma;
  std::vector<Elem> iota;
  FinalTable omega;

  /// All transitions 0 and iota 0; fill with set_gamma().
  static GeneralLNdtRecognizer zero(LatticePtr lattice, AlphabetPtr alphabet, std::vector<std::string> states);

  std::size_t gamma_index(State a, std::span<const State> kids) const;
  Elem gamma_at(SymbolId f, State a, std::span<const State> kids) const;
  void set_gamma(SymbolId f, State a, std::span<const State> kids, Elem c);
  void validate() const;
};

/// R_omega, sorted by id.
std::vector<Elem> omega_values(const Lattice& lattice, const FinalTable& omega);
/// D_omega, the meet-subsemilattice generated by R_omega.
std::vector<Elem> d_omega(const LDtRecognizer& f);

Elem eval_dt(const LDtRecognizer& f, const Tree& t, std::optional<State> from = std::nullopt);
Elem eval_dt_by_paths(const LDtRecognizer& f, const Tree& t);

struct ContextValue {
  Elem value;
  State end;
};

/// Meet of omega over the non-hole leaves of p (1 if there are none) and the state at the hole.
ContextValue eval_dt_context(const LDtRecognizer& f, State a, const Context& p);

/// Phi_{NF,a}(t) for every state a.
std::vector<Elem> eval_ndt_states(const LNdtRecognizer& nf, const Tree& t);
Elem eval_ndt(const LNdtRecognizer& nf, const Tree& t);
Elem eval_ndt_from(const LNdtRecognizer& nf, const Tree& t, const StateSet& h);

/// Throws NonDistributiveLattice unless the lattice is distributive.
void require_distributive(const Lattice& lattice);

Elem eval_general_ndt(const GeneralLNdtRecognizer& ng, const Tree& t);
LNdtRecognizer general_to_simple(const GeneralLNdtRecognizer& ng);
GeneralLNdtRecognizer simple_to_general(const LNdtRecognizer& nf);

LNdtRecognizer dt_to_ndt(const LDtRecognizer& f);

}  // namespace fta
