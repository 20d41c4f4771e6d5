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

// Equational theories over the two term languages, checkable rewrite
// proofs, and bounded equality search.
//
// Every axiom is an equation schema between two term patterns whose
// metavariables range over objects (A, A1, ...) and arrows (f, g, h). The
// schema lists are cumulative: PLAIN < K < J < TRIV.

#ifndef ADJCALC_THEORIES_HPP_
#define ADJCALC_THEORIES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adjcalc/diagrams.hpp"
#include "adjcalc/term.hpp"

namespace adjcalc {

enum class Level : std::uint8_t { Plain, K, J, Triv };

std::string_view to_string(Level level);
std::optional<Level> level_from_string(std::string_view name);

struct Theory {
  Signature sig;
  Level level;
};

// ---------------------------------------------------------------------------
// Patterns and schemas

/// Object expression `var + offset`.
struct ObjExpr {
  unsigned var = 0;
  Obj offset = 0;
};

struct Pattern {
  enum class Kind : std::uint8_t { Id, Atom, Comp, Unary, Arrow };

  Kind kind = Kind::Id;
  Ctor ctor = Ctor::Id;  // Atom: the generator; Unary: Ell or Neg
  ObjExpr obj;           // Id and Atom
  unsigned var = 0;      // Arrow: metavariable index
  std::vector<Pattern> kids;

  static Pattern id(unsigned var, Obj offset = 0);
  static Pattern atom(Ctor c, unsigned var, Obj offset = 0);
  static Pattern comp(Pattern f, Pattern g);
  static Pattern unary(Ctor c, Pattern f);
  static Pattern arrow(unsigned var);
};

struct ArrowVar {
  std::string_view name;
  ObjExpr src;
  ObjExpr tgt;
};

struct Schema {
  std::string_view id;
  Signature sig;
  /// Lowest level whose axiom list contains the schema.
  Level level;
  /// Category and functor laws (units, associativity, functoriality).
  bool structural;
  std::vector<std::string_view> obj_vars;
  std::vector<ArrowVar> arrow_vars;
  Pattern lhs;
  Pattern rhs;
};

enum class Direction : std::uint8_t { L2R, R2L };

std::string_view to_string(Direction dir);
inline Direction flip(Direction d) {
  return d == Direction::L2R ? Direction::R2L : Direction::L2R;
}

/// A schema used in one direction.
struct RuleId {
  const Schema* schema = nullptr;
  Direction dir = Direction::L2R;

  const Pattern& from() const { return dir == Direction::L2R ? schema->lhs : schema->rhs; }
  const Pattern& to() const { return dir == Direction::L2R ? schema->rhs : schema->lhs; }
  friend bool operator==(const RuleId&, const RuleId&) = default;
};

/// Every schema of a signature, in a fixed order.
const std::vector<Schema>& all_schemas(Signature sig);

const Schema* find_schema(Signature sig, std::string_view id);

/// The cumulative schema list of `th`.
std::vector<const Schema*> axioms(const Theory& th);

bool in_theory(const Theory& th, const Schema& schema);

/// Values for the metavariables of one schema.
struct Subst {
  std::vector<std::optional<Obj>> objs;
  std::vector<std::optional<Term>> arrows;

  static Subst for_schema(const Schema& s);
  friend bool operator==(const Subst&, const Subst&) = default;
};

/// Extends `subst` so that `p` instantiates to `t`; false on a clash.
bool match(const Pattern& p, const Term& t, Subst& subst);

/// nullopt when a metavariable of `p` is unbound.
std::optional<Term> instantiate(const Pattern& p, const Subst& subst);

/// Binds object variables from the declared types of bound arrow
/// variables; false if a declared type disagrees.
bool bind_arrow_types(const Schema& schema, Subst& subst);

/// Human-readable rendering of a schema, e.g. "phi[A] . gam[A] = 1[A]".
std::string schema_text(const Schema& schema);

// ---------------------------------------------------------------------------
// Proofs

struct ProofStep {
  RuleId rule;
  Path position;
  /// Substitution used; empty vectors when unknown (parsed proofs).
  Subst subst;
  Term result;
};

struct Proof {
  Term start;
  std::vector<ProofStep> steps;

  const Term& final_term() const { return steps.empty() ? start : steps.back().result; }
  std::size_t length() const { return steps.size(); }
};

/// The same derivation read backwards.
Proof reversed(const Proof& p);

/// One rewrite of `t` at `position`, or nullopt if the rule does not apply.
std::optional<ProofStep> apply_rule(Signature sig, RuleId rule, const Term& t,
                                    const Path& position);

/// Normalizes `t` with the structural schemas oriented left to right
/// (units dropped, composition right-nested, L / neg pushed to the atoms).
/// The proof ends in the canonical form.
Proof normalize_structural(Signature sig, const Term& t);

/// Every one-step rewrite of `t` under `th`, in either direction, at every
/// position. Deterministic order.
std::vector<ProofStep> rewrite_steps(const Theory& th, const Term& t);

/// Distinct results of rewrite_steps, first occurrence order.
std::vector<Term> rewrite_neighbors(const Theory& th, const Term& t);

struct ProofCheck {
  bool ok = true;
  std::size_t failed_step = 0;  // 1-based; 0 when ok
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Replays `p` under `th`. A step passes when its rule is in the theory,
/// the rule's two sides match the old and new subterm at the cited position
/// under one substitution (consistent with the recorded one, if any), the
/// surrounding context is unchanged and the type is preserved.
ProofCheck verify_proof(const Theory& th, const Proof& p);

/// START line followed by one "<rule> <L2R|R2L> <path> ⊢ <term>" per step.
std::string serialize_proof(const Proof& p);

/// Inverse of serialize_proof. Throws SyntaxError (span into `text`) on
/// malformed input and the parse errors of the embedded terms.
Proof parse_proof(Signature sig, std::string_view text);

// ---------------------------------------------------------------------------
// Equality

inline constexpr std::size_t kDefaultBudget = 100000;

struct EqOptions {
  /// For TRIV: search for a rewrite proof instead of answering by type.
  bool with_proof = false;
};

struct EqVerdict {
  enum class Kind : std::uint8_t { Equal, Distinct, Unknown };

  Kind kind = Kind::Unknown;
  /// Equal: the derivation, absent only for the TRIV type-based answer.
  std::optional<Proof> proof;
  bool by_preorder = false;
  /// Distinct: the interpretations of the two terms.
  std::optional<std::pair<TLDiagram, TLDiagram>> witness;
  /// Number of expanded search states.
  std::size_t expanded = 0;
  /// Unknown: true when the reachable rewrite space was exhausted before
  /// the budget.
  bool exhausted = false;
};

std::string_view to_string(EqVerdict::Kind kind);

/// Decides t1 = t2 in `th` as far as the budget allows. Distinct answers
/// come from the diagram semantics (COUNT for PLAIN and K, DROP for J);
/// TRIV answers by type unless options.with_proof. Throws TypeMismatch
/// when the types differ.
EqVerdict eq_search(const Theory& th, const Term& t1, const Term& t2,
                    std::size_t budget = kDefaultBudget, const EqOptions& options = {});

/// Equality in the trivial theory: same source and target.
bool decide_trivial(Signature sig, const Term& t1, const Term& t2);

/// Equality read off the semantics without a derivation: COUNT diagrams
/// for K, DROP diagrams for J, types for TRIV. nullopt for PLAIN.
std::optional<bool> semantic_equal(const Theory& th, const Term& t1, const Term& t2);

}  // namespace adjcalc

#endif  // ADJCALC_THEORIES_HPP_
