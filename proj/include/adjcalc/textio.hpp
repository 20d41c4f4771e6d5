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

// Concrete syntax shared by the CLI and the test fixtures:
//
//   term ::= atom | "L" term | "neg" term | term "." term | "(" term ")"
//   atom ::= "1[" nat "]" | "phi[" nat "]" | "gam[" nat "]"
//          | "nr[" nat "]" | "nl[" nat "]"
//
// "." is right associative and binds weaker than the prefix operators;
// "f . g" is f after g.

#ifndef ADJCALC_TEXTIO_HPP_
#define ADJCALC_TEXTIO_HPP_

#include <string>
#include <string_view>

#include "adjcalc/term.hpp"

namespace adjcalc {

/// Parses and typechecks. Throws SyntaxError, SignatureViolation or a
/// TypeError subclass; every error carries a span inside `text`.
Term parse(Signature sig, std::string_view text);

/// Canonical ASCII form with minimal parentheses.
std::string print(const Term& t);

}  // namespace adjcalc

#endif  // ADJCALC_TEXTIO_HPP_
