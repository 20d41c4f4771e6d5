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

#include "adjcalc/theories.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "adjcalc/textio.hpp"

namespace adjcalc {

std::string_view to_string(Level level) {
  switch (level) {
    case Level::Plain: return "plain";
    case Level::K: return "k";
    case Level::J: return "j";
    case Level::Triv: return "triv";
  }
  return "?";
}

std::optional<Level> level_from_string(std::string_view name) {
  if (name == "plain") return Level::Plain;
  if (name == "k") return Level::K;
  if (name == "j") return Level::J;
  if (name == "triv") return Level::Triv;
  return std::nullopt;
}

std::string_view to_string(Direction dir) {
  return dir == Direction::L2R ? "L2R" : "R2L";
}

std::string_view to_string(EqVerdict::Kind kind) {
  switch (kind) {
    case EqVerdict::Kind::Equal: return "equal";
    case EqVerdict::Kind::Distinct: return "distinct";
    case EqVerdict::Kind::Unknown: return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Patterns

Pattern Pattern::id(unsigned var, Obj offset) {
  Pattern p;
  p.kind = Kind::Id;
  p.obj = {var, offset};
  return p;
}

Pattern Pattern::atom(Ctor c, unsigned var, Obj offset) {
  Pattern p;
  p.kind = Kind::Atom;
  p.ctor = c;
  p.obj = {var, offset};
  return p;
}

Pattern Pattern::comp(Pattern f, Pattern g) {
  Pattern p;
  p.kind = Kind::Comp;
  p.ctor = Ctor::Comp;
  p.kids = {std::move(f), std::move(g)};
  return p;
}

Pattern Pattern::unary(Ctor c, Pattern f) {
  Pattern p;
  p.kind = Kind::Unary;
  p.ctor = c;
  p.kids = {std::move(f)};
  return p;
}

Pattern Pattern::arrow(unsigned var) {
  Pattern p;
  p.kind = Kind::Arrow;
  p.var = var;
  return p;
}

namespace {

using P = Pattern;

// Metavariable indices used by the tables below.
constexpr unsigned A = 0, B = 1, C = 2, D = 3;
constexpr unsigned f = 0, g = 1, h = 2;

std::vector<Schema> category_laws(Signature sig) {
  return {
      {"unit-left", sig, Level::Plain, true, {"A", "B"}, {{"f", {A, 0}, {B, 0}}},
       P::comp(P::id(B), P::arrow(f)), P::arrow(f)},
      {"unit-right", sig, Level::Plain, true, {"A", "B"}, {{"f", {A, 0}, {B, 0}}},
       P::comp(P::arrow(f), P::id(A)), P::arrow(f)},
      {"assoc", sig, Level::Plain, true, {"A", "B", "C", "D"},
       {{"f", {C, 0}, {D, 0}}, {"g", {B, 0}, {C, 0}}, {"h", {A, 0}, {B, 0}}},
       P::comp(P::comp(P::arrow(f), P::arrow(g)), P::arrow(h)),
       P::comp(P::arrow(f), P::comp(P::arrow(g), P::arrow(h)))},
  };
}

std::vector<Schema> self_schemas() {
  const Signature S = Signature::Self;
  auto L = [](Pattern p) { return P::unary(Ctor::Ell, std::move(p)); };
  auto phi = [](unsigned v, Obj k = 0) { return P::atom(Ctor::Phi, v, k); };
  auto gam = [](unsigned v, Obj k = 0) { return P::atom(Ctor::Gamma, v, k); };
  std::vector<Schema> out = category_laws(S);
  std::vector<Schema> rest = {
      {"L-functor-1", S, Level::Plain, true, {"A"}, {}, L(P::id(A)), P::id(A, 1)},
      {"L-functor-2", S, Level::Plain, true, {"A", "B", "C"},
       {{"f", {B, 0}, {C, 0}}, {"g", {A, 0}, {B, 0}}},
       L(P::comp(P::arrow(f), P::arrow(g))), P::comp(L(P::arrow(f)), L(P::arrow(g)))},
      // f . phi[A1] = phi[A2] . L L f        for f : A1 -> A2
      {"phi-nat", S, Level::Plain, false, {"A1", "A2"}, {{"f", {A, 0}, {B, 0}}},
       P::comp(P::arrow(f), phi(A)), P::comp(phi(B), L(L(P::arrow(f))))},
      // L L f . gam[A1] = gam[A2] . f
      {"gam-nat", S, Level::Plain, false, {"A1", "A2"}, {{"f", {A, 0}, {B, 0}}},
       P::comp(L(L(P::arrow(f))), gam(A)), P::comp(gam(B), P::arrow(f))},
      {"phigam-L1", S, Level::Plain, false, {"A"}, {},
       P::comp(phi(A, 1), L(gam(A))), P::id(A, 1)},
      {"phigam-L2", S, Level::Plain, false, {"A"}, {},
       P::comp(L(phi(A)), gam(A, 1)), P::id(A, 1)},
      {"phigam-K", S, Level::K, false, {"A"}, {},
       L(P::comp(phi(A), gam(A))), P::comp(phi(A, 1), gam(A, 1))},
      {"phigam-J", S, Level::J, false, {"A"}, {}, P::comp(phi(A), gam(A)), P::id(A)},
      {"gamphi", S, Level::Triv, false, {"A"}, {}, P::comp(gam(A), phi(A)), P::id(A, 2)},
  };
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<Schema> inv_schemas() {
  const Signature I = Signature::Inv;
  auto N = [](Pattern p) { return P::unary(Ctor::Neg, std::move(p)); };
  auto nr = [](unsigned v, Obj k = 0) { return P::atom(Ctor::Nr, v, k); };
  auto nl = [](unsigned v, Obj k = 0) { return P::atom(Ctor::Nl, v, k); };
  std::vector<Schema> out = category_laws(I);
  std::vector<Schema> rest = {
      {"neg-1", I, Level::Plain, true, {"A"}, {}, N(P::id(A)), P::id(A, 1)},
      {"neg-2", I, Level::Plain, true, {"A", "B", "C"},
       {{"f", {B, 0}, {C, 0}}, {"g", {A, 0}, {B, 0}}},
       N(P::comp(P::arrow(f), P::arrow(g))), P::comp(N(P::arrow(g)), N(P::arrow(f)))},
      {"nr-nat", I, Level::Plain, false, {"A1", "A2"}, {{"f", {A, 0}, {B, 0}}},
       P::comp(P::arrow(f), nr(A)), P::comp(nr(B), N(N(P::arrow(f))))},
      {"nl-nat", I, Level::Plain, false, {"A1", "A2"}, {{"f", {A, 0}, {B, 0}}},
       P::comp(N(N(P::arrow(f))), nl(A)), P::comp(nl(B), P::arrow(f))},
      {"nr-triang", I, Level::Plain, false, {"A"}, {},
       P::comp(nr(A, 1), N(nr(A))), P::id(A, 1)},
      {"nl-triang", I, Level::Plain, false, {"A"}, {},
       P::comp(N(nl(A)), nl(A, 1)), P::id(A, 1)},
      {"nrnl-K", I, Level::K, false, {"A"}, {},
       N(P::comp(nr(A), nl(A))), P::comp(nr(A, 1), nl(A, 1))},
      {"nrnl-J", I, Level::J, false, {"A"}, {}, P::comp(nr(A), nl(A)), P::id(A)},
      {"nlnr", I, Level::Triv, false, {"A"}, {}, P::comp(nl(A), nr(A)), P::id(A, 2)},
  };
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

const std::vector<Schema>& all_schemas(Signature sig) {
  static const std::vector<Schema> self = self_schemas();
  static const std::vector<Schema> inv = inv_schemas();
  return sig == Signature::Self ? self : inv;
}

const Schema* find_schema(Signature sig, std::string_view id) {
  for (const Schema& s : all_schemas(sig)) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

bool in_theory(const Theory& th, const Schema& schema) {
  return schema.sig == th.sig && schema.level <= th.level;
}

std::vector<const Schema*> axioms(const Theory& th) {
  std::vector<const Schema*> out;
  for (const Schema& s : all_schemas(th.sig)) {
    if (in_theory(th, s)) out.push_back(&s);
  }
  return out;
}

Subst Subst::for_schema(const Schema& s) {
  Subst out;
  out.objs.resize(s.obj_vars.size());
  out.arrows.resize(s.arrow_vars.size());
  return out;
}

namespace {

bool bind_obj(const ObjExpr& e, Obj value, Subst& subst) {
  if (value < e.offset || e.var >= subst.objs.size()) return false;
  const Obj v = value - e.offset;
  auto& slot = subst.objs[e.var];
  if (slot) return *slot == v;
  slot = v;
  return true;
}

}  // namespace

bool match(const Pattern& p, const Term& t, Subst& subst) {
  switch (p.kind) {
    case Pattern::Kind::Id:
      return t.ctor() == Ctor::Id && bind_obj(p.obj, t.index(), subst);
    case Pattern::Kind::Atom:
      return t.ctor() == p.ctor && bind_obj(p.obj, t.index(), subst);
    case Pattern::Kind::Comp:
      return t.ctor() == Ctor::Comp && match(p.kids[0], t.lhs(), subst) &&
             match(p.kids[1], t.rhs(), subst);
    case Pattern::Kind::Unary:
      return t.ctor() == p.ctor && match(p.kids[0], t.arg(), subst);
    case Pattern::Kind::Arrow: {
      if (p.var >= subst.arrows.size()) return false;
      auto& slot = subst.arrows[p.var];
      if (slot) return *slot == t;
      slot = t;
      return true;
    }
  }
  return false;
}

std::optional<Term> instantiate(const Pattern& p, const Subst& subst) {
  auto obj = [&](const ObjExpr& e) -> std::optional<Obj> {
    if (e.var >= subst.objs.size() || !subst.objs[e.var]) return std::nullopt;
    return *subst.objs[e.var] + e.offset;
  };
  switch (p.kind) {
    case Pattern::Kind::Id: {
      auto n = obj(p.obj);
      if (!n) return std::nullopt;
      return Term::id(*n);
    }
    case Pattern::Kind::Atom: {
      auto n = obj(p.obj);
      if (!n) return std::nullopt;
      return Term::atom(p.ctor, *n);
    }
    case Pattern::Kind::Comp: {
      auto a = instantiate(p.kids[0], subst);
      auto b = instantiate(p.kids[1], subst);
      if (!a || !b) return std::nullopt;
      return Term::comp(std::move(*a), std::move(*b));
    }
    case Pattern::Kind::Unary: {
      auto a = instantiate(p.kids[0], subst);
      if (!a) return std::nullopt;
      return Term::unary(p.ctor, std::move(*a));
    }
    case Pattern::Kind::Arrow:
      if (p.var >= subst.arrows.size() || !subst.arrows[p.var]) return std::nullopt;
      return *subst.arrows[p.var];
  }
  return std::nullopt;
}

bool bind_arrow_types(const Schema& schema, Subst& subst) {
  for (std::size_t i = 0; i < schema.arrow_vars.size() && i < subst.arrows.size(); ++i) {
    if (!subst.arrows[i]) continue;
    auto ty = try_type_of(schema.sig, *subst.arrows[i]);
    if (!ty) return false;
    if (!bind_obj(schema.arrow_vars[i].src, ty->src, subst)) return false;
    if (!bind_obj(schema.arrow_vars[i].tgt, ty->tgt, subst)) return false;
  }
  return true;
}

namespace {

void pattern_text(const Schema& s, const Pattern& p, std::string& out) {
  auto obj = [&](const ObjExpr& e) {
    std::string r(s.obj_vars.at(e.var));
    if (e.offset) r += "+" + std::to_string(e.offset);
    return r;
  };
  switch (p.kind) {
    case Pattern::Kind::Id:
      out += "1[" + obj(p.obj) + "]";
      return;
    case Pattern::Kind::Atom: {
      const char* name = p.ctor == Ctor::Phi ? "phi" : p.ctor == Ctor::Gamma ? "gam"
                         : p.ctor == Ctor::Nr ? "nr" : "nl";
      out += std::string(name) + "[" + obj(p.obj) + "]";
      return;
    }
    case Pattern::Kind::Comp: {
      const bool paren = p.kids[0].kind == Pattern::Kind::Comp;
      if (paren) out += '(';
      pattern_text(s, p.kids[0], out);
      if (paren) out += ')';
      out += " . ";
      pattern_text(s, p.kids[1], out);
      return;
    }
    case Pattern::Kind::Unary: {
      out += p.ctor == Ctor::Ell ? "L " : "neg ";
      const bool paren = p.kids[0].kind == Pattern::Kind::Comp;
      if (paren) out += '(';
      pattern_text(s, p.kids[0], out);
      if (paren) out += ')';
      return;
    }
    case Pattern::Kind::Arrow:
      out += std::string(s.arrow_vars.at(p.var).name);
      return;
  }
}

}  // namespace

std::string schema_text(const Schema& schema) {
  std::string out;
  pattern_text(schema, schema.lhs, out);
  out += " = ";
  pattern_text(schema, schema.rhs, out);
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting

std::optional<ProofStep> apply_rule(Signature sig, RuleId rule, const Term& t,
                                    const Path& position) {
  if (rule.schema == nullptr || rule.schema->sig != sig) return std::nullopt;
  auto sub = subterm_at(t, position);
  if (!sub) return std::nullopt;
  Subst subst = Subst::for_schema(*rule.schema);
  if (!match(rule.from(), *sub, subst)) return std::nullopt;
  if (!bind_arrow_types(*rule.schema, subst)) return std::nullopt;
  auto inst = instantiate(rule.to(), subst);
  if (!inst) return std::nullopt;
  Term result = replace_at(t, position, *inst);
  return ProofStep{rule, position, std::move(subst), std::move(result)};
}

Proof reversed(const Proof& p) {
  Proof out{p.final_term(), {}};
  for (std::size_t i = p.steps.size(); i-- > 0;) {
    const ProofStep& s = p.steps[i];
    const Term& before = i == 0 ? p.start : p.steps[i - 1].result;
    out.steps.push_back(
        ProofStep{{s.rule.schema, flip(s.rule.dir)}, s.position, s.subst, before});
  }
  return out;
}

Proof normalize_structural(Signature sig, const Term& t) {
  std::vector<RuleId> rules;
  for (const Schema& s : all_schemas(sig)) {
    if (s.structural) rules.push_back({&s, Direction::L2R});
  }
  Proof proof{t, {}};
  Term cur = t;
  for (;;) {
    bool progressed = false;
    for (const Path& pos : positions(cur)) {
      for (const RuleId& r : rules) {
        if (auto step = apply_rule(sig, r, cur, pos)) {
          cur = step->result;
          proof.steps.push_back(std::move(*step));
          progressed = true;
          break;
        }
      }
      if (progressed) break;
    }
    if (!progressed) return proof;
  }
}

std::vector<ProofStep> rewrite_steps(const Theory& th, const Term& t) {
  std::vector<ProofStep> out;
  const auto rules = axioms(th);
  for (const Path& pos : positions(t)) {
    for (const Schema* s : rules) {
      for (Direction d : {Direction::L2R, Direction::R2L}) {
        if (auto step = apply_rule(th.sig, {s, d}, t, pos)) out.push_back(std::move(*step));
      }
    }
  }
  return out;
}

std::vector<Term> rewrite_neighbors(const Theory& th, const Term& t) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  for (ProofStep& s : rewrite_steps(th, t)) {
    if (seen.insert(s.result).second) out.push_back(std::move(s.result));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proof checking

namespace {

std::string check_step(const Theory& th, const Term& before, const ProofStep& step,
                       const ArrowType& type) {
  const Schema* schema = step.rule.schema;
  if (schema == nullptr) return "no rule";
  if (!in_theory(th, *schema)) {
    return "rule " + std::string(schema->id) + " is not an axiom of the theory";
  }
  auto old_sub = subterm_at(before, step.position);
  auto new_sub = subterm_at(step.result, step.position);
  if (!old_sub || !new_sub) return "position " + path_to_string(step.position) + " is not in the term";
  if (!(replace_at(before, step.position, *new_sub) == step.result)) {
    return "term changed outside position " + path_to_string(step.position);
  }
  Subst subst = Subst::for_schema(*schema);
  if (!match(step.rule.from(), *old_sub, subst)) {
    return "rule does not match at " + path_to_string(step.position);
  }
  if (!match(step.rule.to(), *new_sub, subst)) return "result is not the rule's right side";
  if (!bind_arrow_types(*schema, subst)) return "metavariable types disagree";
  for (const auto& o : subst.objs) {
    if (!o) return "unbound object metavariable";
  }
  for (const auto& a : subst.arrows) {
    if (!a) return "unbound arrow metavariable";
  }
  const auto check_recorded = [](const auto& recorded, const auto& inferred) {
    if (recorded.empty()) return true;
    if (recorded.size() != inferred.size()) return false;
    for (std::size_t i = 0; i < recorded.size(); ++i) {
      if (recorded[i] && !(*recorded[i] == *inferred[i])) return false;
    }
    return true;
  };
  if (!check_recorded(step.subst.objs, subst.objs) ||
      !check_recorded(step.subst.arrows, subst.arrows)) {
    return "recorded substitution disagrees with the match";
  }
  auto ty = try_type_of(th.sig, step.result);
  if (!ty) return "result does not typecheck";
  if (!(*ty == type)) return "type changed to " + to_string(*ty);
  return {};
}

}  // namespace

ProofCheck verify_proof(const Theory& th, const Proof& p) {
  auto ty = try_type_of(th.sig, p.start);
  if (!ty) return {false, 0, "start term does not typecheck"};
  const Term* cur = &p.start;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    std::string err = check_step(th, *cur, p.steps[i], *ty);
    if (!err.empty()) return {false, i + 1, "step " + std::to_string(i + 1) + ": " + err};
    cur = &p.steps[i].result;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

constexpr std::string_view kTurnstile = "\xE2\x8A\xA2";

Path parse_path(std::string_view s, SourceSpan span) {
  Path out;
  if (s == "root") return out;
  std::size_t i = 0;
  while (i <= s.size()) {
    const std::size_t dot = s.find('.', i);
    const std::string_view part = s.substr(i, dot == std::string_view::npos ? s.npos : dot - i);
    if (part.empty() || part.size() > 1 || (part[0] != '0' && part[0] != '1')) {
      throw SyntaxError("bad position path '" + std::string(s) + "'", span);
    }
    out.push_back(static_cast<unsigned>(part[0] - '0'));
    if (dot == std::string_view::npos) break;
    i = dot + 1;
  }
  return out;
}

Term parse_embedded(Signature sig, std::string_view text, std::size_t offset) {
  try {
    return parse(sig, text);
  } catch (Error& e) {
    if (e.span()) e.set_span({e.span()->start + offset, e.span()->end + offset});
    throw;
  }
}

}  // namespace

std::string serialize_proof(const Proof& p) {
  std::string out = "START " + print(p.start) + "\n";
  for (const ProofStep& s : p.steps) {
    out += std::string(s.rule.schema->id);
    out += ' ';
    out += to_string(s.rule.dir);
    out += ' ';
    out += path_to_string(s.position);
    out += ' ';
    out += kTurnstile;
    out += ' ';
    out += print(s.result);
    out += '\n';
  }
  return out;
}

Proof parse_proof(Signature sig, std::string_view text) {
  std::optional<Proof> proof;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    const SourceSpan span{line_start, line_end};
    const std::size_t offset = line_start;
    line_start = line_end + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    if (!proof) {
      constexpr std::string_view kStart = "START ";
      if (line.substr(0, kStart.size()) != kStart) {
        throw SyntaxError("proof must begin with a START line", span);
      }
      proof = Proof{parse_embedded(sig, line.substr(kStart.size()), offset + kStart.size()), {}};
      continue;
    }
    const std::size_t turn = line.find(kTurnstile);
    if (turn == std::string_view::npos) throw SyntaxError("missing turnstile", span);
    std::istringstream head{std::string(line.substr(0, turn))};
    std::string id, dir, path, extra;
    if (!(head >> id >> dir >> path) || (head >> extra)) {
      throw SyntaxError("expected '<rule> <L2R|R2L> <path>' before the turnstile", span);
    }
    const Schema* schema = find_schema(sig, id);
    if (!schema) throw SyntaxError("unknown rule '" + id + "'", span);
    Direction d;
    if (dir == "L2R") {
      d = Direction::L2R;
    } else if (dir == "R2L") {
      d = Direction::R2L;
    } else {
      throw SyntaxError("direction must be L2R or R2L", span);
    }
    const std::size_t term_at = turn + kTurnstile.size();
    Term result = parse_embedded(sig, line.substr(term_at), offset + term_at);
    proof->steps.push_back(ProofStep{{schema, d}, parse_path(path, span), {}, std::move(result)});
  }
  if (!proof) throw SyntaxError("empty proof", {0, text.size()});
  return *proof;
}

bool decide_trivial(Signature sig, const Term& t1, const Term& t2) {
  return type_of(sig, t1) == type_of(sig, t2);
}

std::optional<bool> semantic_equal(const Theory& th, const Term& t1, const Term& t2) {
  switch (th.level) {
    case Level::Plain:
      return std::nullopt;
    case Level::K:
      return diagram_eq(interp(th.sig, t1, CircleMode::Count),
                        interp(th.sig, t2, CircleMode::Count), CircleMode::Count);
    case Level::J:
      return diagram_eq(interp(th.sig, t1, CircleMode::Drop),
                        interp(th.sig, t2, CircleMode::Drop), CircleMode::Drop);
    case Level::Triv:
      return decide_trivial(th.sig, t1, t2);
  }
  return std::nullopt;
}

}  // namespace adjcalc
