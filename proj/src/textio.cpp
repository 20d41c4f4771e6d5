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

#include "adjcalc/textio.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace adjcalc {

namespace {

enum class Tok { Word, Num, LBracket, RBracket, LParen, RParen, Dot, End };

struct Token {
  Tok kind;
  std::string_view text;
  SourceSpan span;
};

// Parsed tree with a span per node, so that type errors reported as paths
// can be mapped back to the input.
struct Syntax {
  Term term;
  SourceSpan span;
  std::vector<Syntax> kids;
};

class Parser {
 public:
  Parser(Signature sig, std::string_view text) : sig_(sig), text_(text) {
    advance();
  }

  Syntax parse_all() {
    Syntax s = parse_comp();
    if (cur_.kind != Tok::End) {
      throw SyntaxError("unexpected '" + std::string(cur_.text) + "'",
                        cur_.span);
    }
    return s;
  }

 private:
  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      cur_ = {Tok::End, {}, {start, start}};
      return;
    }
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    auto single = [&](Tok k) {
      ++pos_;
      cur_ = {k, text_.substr(start, 1), {start, pos_}};
    };
    switch (c) {
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '.': return single(Tok::Dot);
      default: break;
    }
    if (std::isdigit(c)) {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      cur_ = {Tok::Num, text_.substr(start, pos_ - start), {start, pos_}};
      return;
    }
    if (std::isalpha(c)) {
      while (pos_ < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      cur_ = {Tok::Word, text_.substr(start, pos_ - start), {start, pos_}};
      return;
    }
    // Consume a whole UTF-8 sequence so the span covers the character.
    ++pos_;
    while (pos_ < text_.size() &&
           (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) {
      ++pos_;
    }
    throw SyntaxError(
        "unexpected character '" + std::string(text_.substr(start, pos_ - start)) + "'",
        {start, pos_});
  }

  Token expect(Tok kind, const char* what) {
    if (cur_.kind != kind) {
      throw SyntaxError(std::string("expected ") + what, cur_.span);
    }
    Token t = cur_;
    advance();
    return t;
  }

  void check_sig(Ctor c, SourceSpan span) {
    if (!ctor_allowed(sig_, c)) {
      SignatureViolation e("'" + std::string(text_.substr(span.start, span.end - span.start)) +
                           "' is not in the " + std::string(to_string(sig_)) +
                           " signature");
      e.set_span(span);
      throw e;
    }
  }

  Syntax parse_comp() {
    Syntax f = parse_unary();
    if (cur_.kind != Tok::Dot) return f;
    advance();
    Syntax g = parse_comp();
    SourceSpan span{f.span.start, g.span.end};
    Term t = Term::comp(f.term, g.term);
    return Syntax{std::move(t), span, {std::move(f), std::move(g)}};
  }

  Syntax parse_unary() {
    if (cur_.kind == Tok::Word && (cur_.text == "L" || cur_.text == "neg")) {
      const Ctor c = cur_.text == "L" ? Ctor::Ell : Ctor::Neg;
      const SourceSpan op = cur_.span;
      check_sig(c, op);
      advance();
      Syntax arg = parse_unary();
      SourceSpan span{op.start, arg.span.end};
      Term t = Term::unary(c, arg.term);
      return Syntax{std::move(t), span, {std::move(arg)}};
    }
    if (cur_.kind == Tok::LParen) {
      const std::size_t start = cur_.span.start;
      advance();
      Syntax inner = parse_comp();
      const Token close = expect(Tok::RParen, "')'");
      inner.span = {start, close.span.end};
      return inner;
    }
    return parse_atom();
  }

  Syntax parse_atom() {
    const Token head = cur_;
    Ctor c;
    if (head.kind == Tok::Num && head.text == "1") {
      c = Ctor::Id;
    } else if (head.kind == Tok::Word && head.text == "phi") {
      c = Ctor::Phi;
    } else if (head.kind == Tok::Word && head.text == "gam") {
      c = Ctor::Gamma;
    } else if (head.kind == Tok::Word && head.text == "nr") {
      c = Ctor::Nr;
    } else if (head.kind == Tok::Word && head.text == "nl") {
      c = Ctor::Nl;
    } else if (head.kind == Tok::End) {
      throw SyntaxError("unexpected end of input", head.span);
    } else {
      throw SyntaxError("expected a term, found '" + std::string(head.text) + "'",
                        head.span);
    }
    check_sig(c, head.span);
    advance();
    expect(Tok::LBracket, "'['");
    const Token num = expect(Tok::Num, "an object index");
    Obj n = 0;
    for (char d : num.text) {
      const std::uint64_t next = std::uint64_t{n} * 10 + static_cast<unsigned>(d - '0');
      if (next > std::numeric_limits<std::uint16_t>::max()) {
        throw SyntaxError("object index too large", num.span);
      }
      n = static_cast<Obj>(next);
    }
    const Token close = expect(Tok::RBracket, "']'");
    return Syntax{Term::atom(c, n), {head.span.start, close.span.end}, {}};
  }

  Signature sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, {}, {}};
};

SourceSpan span_of(const Syntax& root, const Path& path) {
  const Syntax* cur = &root;
  for (unsigned i : path) {
    if (i >= cur->kids.size()) break;
    cur = &cur->kids[i];
  }
  return cur->span;
}

void print_rec(const Term& t, std::string& out) {
  switch (t.ctor()) {
    case Ctor::Id: out += "1["; break;
    case Ctor::Phi: out += "phi["; break;
    case Ctor::Gamma: out += "gam["; break;
    case Ctor::Nr: out += "nr["; break;
    case Ctor::Nl: out += "nl["; break;
    case Ctor::Ell:
    case Ctor::Neg: {
      out += t.ctor() == Ctor::Ell ? "L " : "neg ";
      const bool paren = t.arg().ctor() == Ctor::Comp;
      if (paren) out += '(';
      print_rec(t.arg(), out);
      if (paren) out += ')';
      return;
    }
    case Ctor::Comp: {
      const bool paren = t.lhs().ctor() == Ctor::Comp;
      if (paren) out += '(';
      print_rec(t.lhs(), out);
      if (paren) out += ')';
      out += " . ";
      print_rec(t.rhs(), out);
      return;
    }
  }
  out += std::to_string(t.index());
  out += ']';
}

}  // namespace

Term parse(Signature sig, std::string_view text) {
  Parser parser(sig, text);
  Syntax root = parser.parse_all();
  try {
    type_of(sig, root.term);
  } catch (Error& e) {
    if (e.path()) e.set_span(span_of(root, *e.path()));
    throw;
  }
  return root.term;
}

std::string print(const Term& t) {
  std::string out;
  print_rec(t, out);
  return out;
}

}  // namespace adjcalc
