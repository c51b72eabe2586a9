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

#include "fta/fuzzy_rec.hpp"
#include "fta/terms.hpp"

namespace fta {

/// Gamma as a unary ranked alphabet: one symbol "f.i" of arity 1 per letter,
/// in path_alphabet() order, over the same leaves.
AlphabetPtr unary_alphabet(const RankedAlphabet& sigma);

/// F^u: same states, initial state and omega; f.i moves to the i-th component of f_A.
LDtRecognizer to_unary(const LDtRecognizer& f);
/// G^d over sigma; G must be over unary_alphabet(sigma).
LDtRecognizer from_unary(const LDtRecognizer& g, const AlphabetPtr& sigma);

/// w x as the unary tree w(x) over unary_alphabet(sigma).
Tree path_to_unary_tree(const PathWord& r, const RankedAlphabet& sigma);

/// Lambda_F(w x) = omega_x(a0 w).
Elem lambda_dt(const LDtRecognizer& f, const PathWord& r);
/// The meet of Lambda_F over delta(t).
Elem eval_tdei(const LDtRecognizer& f, const Tree& t);

}  // namespace fta
