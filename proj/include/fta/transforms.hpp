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

#include <span>
#include <vector>

#include "fta/automata.hpp"
#include "fta/fuzzy_rec.hpp"
#include "fta/lattice.hpp"
#include "fta/terms.hpp"

namespace fta {

/// A recognizer over L x L built from two factors over L. Product state
/// (a, b) has index a * right_states + b.
template <class R>
struct Paired {
  R recognizer;
  LatticePtr factor;
  std::size_t left_states = 0;
  std::size_t right_states = 0;

  Elem first(Elem e) const { return recognizer.lattice->first(e); }
  Elem second(Elem e) const { return recognizer.lattice->second(e); }
};

/// Parallel product of two L-NDT recognizers. A factor with empty transition
/// sets (or an empty initial set) is first completed with a zero state so that
/// evaluation stays componentwise.
Paired<LNdtRecognizer> parallel_product_ndt(const LNdtRecognizer& nf, const LNdtRecognizer& ng);
Paired<LDtRecognizer> dt_product(const LDtRecognizer& f, const LDtRecognizer& g);

LDtRecognizer intersect_dt(const LDtRecognizer& f, const LDtRecognizer& g);

/// f(Phi_1, ..., Phi_m).
LDtRecognizer top_concat(SymbolId f, std::span<const LDtRecognizer> parts);

/// p^{-1}(Phi): t maps to Phi(p(t)).
LDtRecognizer context_quotient(const LDtRecognizer& f, const Context& p);
/// p(Phi): p(s) maps to Phi(s), everything else to 0.
LDtRecognizer context_embed(const LDtRecognizer& f, const Context& p);

/// h^{-1}(Phi) for a recognizer over the target alphabet of h.
LDtRecognizer inverse_hom(const LDtRecognizer& f, const TreeHomomorphism& h);
/// h(Phi) for an injective alphabetic h.
LDtRecognizer alphabetic_image(const LDtRecognizer& f, const TreeHomomorphism& h);

LDtRecognizer scalar(const LDtRecognizer& f, Elem c);
/// The crisp language {t | Phi(t) >= c}.
DtRecognizer cut(const LDtRecognizer& f, Elem c);

LDtRecognizer characteristic(const DtRecognizer& t, const LatticePtr& lattice);
LNdtRecognizer characteristic(const NdtRecognizer& t, const LatticePtr& lattice);
/// The crisp support; requires 0 to be meet-irreducible.
DtRecognizer support_dt(const LDtRecognizer& f);
/// The crisp recognizer of {t | Phi(t) = 1}, for crisp Phi.
DtRecognizer crisp_part(const LDtRecognizer& f);

LDtRecognizer lattice_map(const LDtRecognizer& f, const LatticeMorphism& psi);

/// The recognizer of the constant language c over the given alphabet (one state).
LDtRecognizer constant_dt(const LatticePtr& lattice, const AlphabetPtr& alphabet, Elem c);

}  // namespace fta
