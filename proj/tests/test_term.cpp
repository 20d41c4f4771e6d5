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

#include <algorithm>
#include <set>
#include <string>

#include "adjcalc/term.hpp"
#include "adjcalc/textio.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace adjcalc;

namespace {

ArrowType ty(Obj s, Obj t) { return {s, t}; }

}  // namespace

TEST_CASE("generator typing") {
  CHECK(type_of(Signature::Self, Term::phi(0)) == ty(2, 0));
  CHECK(type_of(Signature::Self, Term::ell(Term::phi(0))) == ty(3, 1));
  CHECK(type_of(Signature::Inv, Term::neg(Term::nr(0))) == ty(1, 3));
  CHECK(type_of(Signature::Self, Term::gamma(4)) == ty(4, 6));
  CHECK(type_of(Signature::Inv, Term::nl(1)) == ty(1, 3));
  CHECK(type_of(Signature::Inv, Term::id(7)) == ty(7, 7));
}

TEST_CASE("composition mismatch reports the offending position") {
  CHECK_THROWS_AS(type_of(Signature::Self, Term::comp(Term::phi(0), Term::phi(0))),
                  CompositionMismatch);
  const Term bad = Term::ell(Term::comp(Term::id(1), Term::comp(Term::phi(0), Term::phi(0))));
  try {
    type_of(Signature::Self, bad);
    FAIL("expected a mismatch");
  } catch (const CompositionMismatch& e) {
    REQUIRE(e.path());
    CHECK(*e.path() == Path{0, 1});
  }
}

TEST_CASE("constructors of the other signature are rejected") {
  CHECK_THROWS_AS(type_of(Signature::Self, Term::nr(0)), SignatureViolation);
  CHECK_THROWS_AS(type_of(Signature::Inv, Term::ell(Term::id(0))), SignatureViolation);
  CHECK_THROWS_AS(type_of(Signature::Inv, Term::comp(Term::id(0), Term::gamma(0))),
                  SignatureViolation);
  CHECK_FALSE(try_type_of(Signature::Self, Term::nl(2)));
}

TEST_CASE("size counts every node") {
  CHECK(size(Term::phi(3)) == 1);
  CHECK(size(Term::comp(Term::phi(0), Term::gamma(0))) == 3);
  CHECK(size(Term::ell(Term::ell(Term::id(0)))) == 3);
}

TEST_CASE("typing agrees with the reference on all small trees") {
  for (Signature sig : {Signature::Self, Signature::Inv}) {
    for (const Term& t : oracle::all_trees(sig, 5, 2)) {
      const auto want = oracle::type(sig, t);
      const auto got = try_type_of(sig, t);
      REQUIRE(want.has_value() == got.has_value());
      if (got) {
        CHECK(got->src == want->first);
        CHECK(got->tgt == want->second);
        CHECK((got->src + got->tgt) % 2 == 0);
      }
    }
  }
}

TEST_CASE("functor typing shifts") {
  for (Signature sig : {Signature::Self, Signature::Inv}) {
    for (const Term& f : gen_terms(sig, 7, std::nullopt, 11)) {
      const ArrowType t = type_of(sig, f);
      if (sig == Signature::Self) {
        CHECK(type_of(sig, Term::ell(f)) == ty(t.src + 1, t.tgt + 1));
      } else {
        CHECK(type_of(sig, Term::neg(f)) == ty(t.tgt + 1, t.src + 1));
      }
    }
  }
}

TEST_CASE("subterm positions") {
  const Term t = Term::comp(Term::phi(1), Term::ell(Term::gamma(0)));
  const auto ps = positions(t);
  REQUIRE(ps.size() == 4);
  CHECK(ps[0].empty());
  CHECK(*subterm_at(t, {1, 0}) == Term::gamma(0));
  CHECK_FALSE(subterm_at(t, {0, 0}));
  CHECK(replace_at(t, {1, 0}, Term::id(3)) == Term::comp(Term::phi(1), Term::ell(Term::id(3))));
  CHECK_THROWS_AS(replace_at(t, {2}, Term::id(0)), std::out_of_range);
}

TEST_CASE("gen_terms small examples") {
  auto has = [](const std::vector<Term>& v, const Term& t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };
  CHECK(has(gen_terms(Signature::Self, 1, ty(2, 0), 1), Term::phi(0)));
  CHECK(has(gen_terms(Signature::Self, 1, ty(5, 5), 1), Term::id(5)));

  // Every tree of size <= 2 of type 0 -> 0, from the brute-force enumerator.
  std::vector<Term> zero;
  for (const Term& t : oracle::all_trees(Signature::Inv, 2, 3)) {
    const auto tt = oracle::type(Signature::Inv, t);
    if (tt && tt->first == 0 && tt->second == 0) zero.push_back(t);
  }
  REQUIRE(zero == std::vector<Term>{Term::id(0)});
  CHECK(gen_terms(Signature::Inv, 2, ty(0, 0), 1) == zero);
}

TEST_CASE("exhaustive enumeration matches the brute-force tree list") {
  for (Signature sig : {Signature::Self, Signature::Inv}) {
    std::set<std::string> want;
    for (const Term& t : oracle::all_trees(sig, 4, 3)) {
      if (oracle::type(sig, t)) want.insert(print(t));
    }
    std::set<std::string> got;
    for (const Term& t : gen_terms(sig, 4, std::nullopt, 5)) got.insert(print(t));
    CHECK(got == want);
  }
}

TEST_CASE("random generation is typed, bounded and reproducible") {
  for (Signature sig : {Signature::Self, Signature::Inv}) {
    const auto a = gen_terms(sig, 10, std::nullopt, 42);
    const auto b = gen_terms(sig, 10, std::nullopt, 42);
    CHECK(a == b);
    CHECK(a.size() == GenOptions{}.count);
    CHECK(a != gen_terms(sig, 10, std::nullopt, 43));
    for (const Term& t : a) {
      CHECK(t.size() <= 10);
      CHECK(try_type_of(sig, t));
    }
    const auto typed = gen_terms(sig, 9, ty(3, 1), 7);
    CHECK_FALSE(typed.empty());
    for (const Term& t : typed) CHECK(type_of(sig, t) == ty(3, 1));
  }
  CHECK(gen_terms(Signature::Self, 8, ty(1, 2), 3).empty());
}

TEST_CASE("term equality and hashing are structural") {
  const Term a = Term::comp(Term::phi(0), Term::gamma(0));
  const Term b = Term::comp(Term::phi(0), Term::gamma(0));
  CHECK(a == b);
  CHECK(std::hash<Term>{}(a) == std::hash<Term>{}(b));
  CHECK_FALSE(a == Term::comp(Term::gamma(0), Term::phi(0)));
}
