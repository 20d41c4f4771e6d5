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

#include "adjcalc/translate.hpp"

#include <stdexcept>

namespace adjcalc {

namespace {

[[noreturn]] void foreign(const char* where) {
  throw SignatureViolation(std::string(where) +
                           ": constructor of the other signature");
}

}  // namespace

Term neg_in_S(const Term& f) {
  switch (f.ctor()) {
    case Ctor::Id: return Term::id(f.index() + 1);
    case Ctor::Phi: return Term::ell(Term::gamma(f.index()));
    case Ctor::Gamma: return Term::ell(Term::phi(f.index()));
    case Ctor::Comp: return Term::comp(neg_in_S(f.rhs()), neg_in_S(f.lhs()));
    case Ctor::Ell: return Term::ell(neg_in_S(f.arg()));
    default: foreign("neg_in_S");
  }
}

Term l_in_A(const Term& f) {
  switch (f.ctor()) {
    case Ctor::Id: return Term::id(f.index() + 1);
    case Ctor::Nr: return Term::neg(Term::nl(f.index()));
    case Ctor::Nl: return Term::neg(Term::nr(f.index()));
    case Ctor::Comp: return Term::comp(l_in_A(f.lhs()), l_in_A(f.rhs()));
    case Ctor::Neg: return Term::neg(l_in_A(f.arg()));
    default: foreign("l_in_A");
  }
}

Term functor_FA(const Term& f) {
  switch (f.ctor()) {
    case Ctor::Id: return f;
    case Ctor::Phi: return Term::nr(f.index());
    case Ctor::Gamma: return Term::nl(f.index());
    case Ctor::Comp: return Term::comp(functor_FA(f.lhs()), functor_FA(f.rhs()));
    case Ctor::Ell: return l_in_A(functor_FA(f.arg()));
    default: foreign("functor_FA");
  }
}

Term functor_FS(const Term& f) {
  switch (f.ctor()) {
    case Ctor::Id: return f;
    case Ctor::Nr: return Term::phi(f.index());
    case Ctor::Nl: return Term::gamma(f.index());
    case Ctor::Comp: return Term::comp(functor_FS(f.lhs()), functor_FS(f.rhs()));
    case Ctor::Neg: return neg_in_S(functor_FS(f.arg()));
    default: foreign("functor_FS");
  }
}

Term translate(Signature from, const Term& t) {
  return from == Signature::Self ? functor_FA(t) : functor_FS(t);
}

}  // namespace adjcalc
