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

#include <string>

#include "adjcalc/textio.hpp"
#include "doctest.h"

using namespace adjcalc;

namespace {

// Span of the error raised by parsing `text`.
SourceSpan error_span(Signature sig, const std::string& text) {
  try {
    parse(sig, text);
  } catch (const Error& e) {
    REQUIRE(e.span());
    return *e.span();
  }
  FAIL("parse succeeded: " << text);
  return {};
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse(Signature::Self, "phi[0] . gam[0]") == Term::comp(Term::phi(0), Term::gamma(0)));
  CHECK(parse(Signature::Inv, "neg nr[1]") == Term::neg(Term::nr(1)));
  CHECK_THROWS_AS(parse(Signature::Self, "nr[0]"), SignatureViolation);
  CHECK(parse(Signature::Self, "  L  (1[2]) ") == Term::ell(Term::id(2)));
}

TEST_CASE("composition is right associative and binds loosest") {
  const Term t = parse(Signature::Self, "phi[0] . phi[2] . L L gam[0]");
  CHECK(t == Term::comp(Term::phi(0),
                        Term::comp(Term::phi(2), Term::ell(Term::ell(Term::gamma(0))))));
  CHECK(parse(Signature::Self, "(phi[0] . phi[2]) . L L gam[0]") ==
        Term::comp(Term::comp(Term::phi(0), Term::phi(2)), Term::ell(Term::ell(Term::gamma(0)))));
  CHECK(parse(Signature::Self, "L phi[0] . gam[1]") ==
        Term::comp(Term::ell(Term::phi(0)), Term::gamma(1)));
}

TEST_CASE("print examples") {
  CHECK(print(Term::comp(Term::phi(1), Term::ell(Term::gamma(0)))) == "phi[1] . L gam[0]");
  CHECK(print(Term::ell(Term::comp(Term::phi(0), Term::gamma(0)))) == "L (phi[0] . gam[0])");
  CHECK(print(Term::neg(Term::neg(Term::id(2)))) == "neg neg 1[2]");
  CHECK(print(Term::comp(Term::comp(Term::id(0), Term::id(0)), Term::id(0))) ==
        "(1[0] . 1[0]) . 1[0]");
}

TEST_CASE("syntax errors carry spans inside the input") {
  const std::string cases[] = {"", "phi", "phi[", "phi[0", "phi[x]", "phi[0] .", "phi[0] )",
                               "(phi[0]", "L", "psi[0]", "phi[0] ∘ gam[0]", "1[99999999]",
                               "phi[0] phi[0]"};
  for (const std::string& text : cases) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse(Signature::Self, text), SyntaxError);
    const SourceSpan s = error_span(Signature::Self, text);
    CHECK(s.start <= s.end);
    CHECK(s.end <= text.size());
  }
  CHECK(error_span(Signature::Self, "phi[0] ∘ gam[0]") == SourceSpan{7, 10});
}

TEST_CASE("type and signature errors point at the subterm") {
  const std::string text = "L (phi[0] . phi[0]) . 1[3]";
  CHECK_THROWS_AS(parse(Signature::Self, text), CompositionMismatch);
  CHECK(error_span(Signature::Self, text) == SourceSpan{2, 19});
  CHECK(error_span(Signature::Inv, "nr[0] . L nl[0]") == SourceSpan{8, 9});
  CHECK(error_span(Signature::Self, "phi[1] . neg 1[0]") == SourceSpan{9, 12});
}

TEST_CASE("round trip on random terms") {
  for (Signature sig : {Signature::Self, Signature::Inv}) {
    GenOptions opts;
    opts.count = 1000;
    opts.max_index = 6;
    for (const Term& t : gen_terms(sig, 14, std::nullopt, 2026, opts)) {
      const std::string s = print(t);
      for (unsigned char c : s) REQUIRE(c < 0x80);
      REQUIRE(parse(sig, s) == t);
    }
  }
}
