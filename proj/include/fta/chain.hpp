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

#include <vector>

#include "fta/fuzzy_rec.hpp"
#include "fta/terms.hpp"

namespace fta {

/// Throws NotAChain unless the lattice is totally ordered.
void require_chain(const Lattice& lattice);

/// M(a), the largest value Phi_{NF,a} takes, with a tree attaining it.
struct StateMaxTable {
  std::vector<Elem> m;
  std::vector<Tree> witness;
  unsigned iterations = 0;
};

StateMaxTable max_values(const LNdtRecognizer& nf);
StateMaxTable max_values(const LDtRecognizer& f);

bool is_normalized_ndt(const LNdtRecognizer& nf);
bool is_normalized_dt(const LDtRecognizer& f);

/// Equivalent normalized recognizer on the part of A x R_omega reachable
/// from {(a, M(a)) | a in I}.
LNdtRecognizer normalize_ndt(const LNdtRecognizer& nf);
LDtRecognizer normalize_dt(const LDtRecognizer& f);

/// max{omega_x(b) | b in I w}, or 0 when no state is reached.
Elem lambda_ndt(const LNdtRecognizer& nf, const PathWord& r);

/// The subset recognizer on subsets reachable from I; pi_x(H) = max omega_x over H.
LDtRecognizer subset_recognizer(const LNdtRecognizer& nf);

/// Recognizes the path closure of Phi_NF.
LDtRecognizer path_closure_recognizer(const LNdtRecognizer& nf);

bool is_dt_recognizable(const LNdtRecognizer& nf);

/// For normalized NF: a tree t with r in delta(t) and Phi_NF(t) = Lambda_NF(r).
Tree witness_tree(const LNdtRecognizer& nf, const PathWord& r);

/// For normalized F the join of Phi_F over trees containing r, which is Lambda_F(r).
Elem tde_normalized_dt(const LDtRecognizer& f, const PathWord& r);

/// Converts an NDT recognizer whose transition sets and initial set are singletons.
LDtRecognizer ndt_to_dt(const LNdtRecognizer& nf);

}  // namespace fta
