/* Copyright 2026 The adjcalc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Dictionary between the two signatures. neg is defined inside the self
// language and L inside the involutive language, each by structural
// recursion on five clauses:
//
//   neg 1[n] = 1[n+1]           L 1[n] = 1[n+1]
//   neg phi[n] = L gam[n]       L nr[n] = neg nl[n]
//   neg gam[n] = L phi[n]       L nl[n] = neg nr[n]
//   neg (f . g) = neg g . neg f L (f . g) = L f . L g
//   neg L f = L neg f           L neg f = neg L f
//
// The functors rename generators (phi <-> nr, gam <-> nl) and route the
// foreign unary operator through the definitions above. Nothing is
// simplified along the way.

#ifndef ADJCALC_TRANSLATE_HPP_
#define ADJCALC_TRANSLATE_HPP_

#include "adjcalc/term.hpp"

namespace adjcalc {

/// neg defined in the self signature; f : n -> m gives m+1 -> n+1.
Term neg_in_S(const Term& f);

/// L defined in the involutive signature; f : n -> m gives n+1 -> m+1.
Term l_in_A(const Term& f);

/// Functor from the self-adjunction category to the involutive one.
Term functor_FA(const Term& f);

/// Functor from the involutive category to the self-adjunction one.
Term functor_FS(const Term& f);

/// Translate a term of `from` into the other signature.
Term translate(Signature from, const Term& t);

}  // namespace adjcalc

#endif  // ADJCALC_TRANSLATE_HPP_
