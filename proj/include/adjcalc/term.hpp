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

// Arrow terms of the free self-adjunction and the free involutive adjunction
// generated by a single letter.
//
// Objects are natural numbers: n stands for L^n p (self signature) or
// neg^n p (involutive signature). The two term languages share one tree
// type; which constructors are legal is decided by the Signature passed to
// type_of.
//
//   self: 1[n] : n -> n     phi[n] : n+2 -> n     gam[n] : n -> n+2
//         L f  : src+1 -> tgt+1
//   inv:  1[n] : n -> n     nr[n]  : n+2 -> n     nl[n]  : n -> n+2
//         neg f : tgt+1 -> src+1
//
// Composition f . g applies g first; it requires tgt(g) == src(f).

#ifndef ADJCALC_TERM_HPP_
#define ADJCALC_TERM_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "adjcalc/error.hpp"

namespace adjcalc {

using Obj = std::uint32_t;

enum class Signature : std::uint8_t { Self, Inv };

std::string_view to_string(Signature sig);
std::optional<Signature> signature_from_string(std::string_view name);

enum class Ctor : std::uint8_t { Id, Phi, Gamma, Nr, Nl, Comp, Ell, Neg };

inline bool is_atom(Ctor c) { return c <= Ctor::Nl; }
inline bool is_unary(Ctor c) { return c == Ctor::Ell || c == Ctor::Neg; }

/// Whether `c` belongs to the constructor set of `sig`.
bool ctor_allowed(Signature sig, Ctor c);

/// The unary functor of a signature: L for self, neg for inv.
Ctor unary_of(Signature sig);

struct ArrowType {
  Obj src = 0;
  Obj tgt = 0;

  friend bool operator==(const ArrowType&, const ArrowType&) = default;
};

std::string to_string(const ArrowType& type);

/// Immutable arrow term with structural equality. Copies share nodes.
class Term {
 public:
  static Term id(Obj n);
  static Term phi(Obj n);
  static Term gamma(Obj n);
  static Term nr(Obj n);
  static Term nl(Obj n);
  static Term atom(Ctor c, Obj n);
  static Term comp(Term f, Term g);
  static Term ell(Term f);
  static Term neg(Term f);
  static Term unary(Ctor c, Term f);

  Ctor ctor() const { return node_->ctor; }
  /// Object index of an atom; 0 for compound terms.
  Obj index() const { return node_->index; }
  /// Left operand of a composition (applied second).
  const Term& lhs() const { return node_->kids[0]; }
  /// Right operand of a composition (applied first).
  const Term& rhs() const { return node_->kids[1]; }
  /// Operand of L / neg.
  const Term& arg() const { return node_->kids[0]; }

  /// Child by position index (see Path).
  const Term& child(unsigned i) const;
  unsigned arity() const;

  std::size_t size() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Ctor ctor;
    Obj index;
    std::size_t size;
    std::size_t hash;
    std::vector<Term> kids;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Ctor c, Obj index, std::vector<Term> kids);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Number of constructor nodes, identities included.
inline std::size_t size(const Term& t) { return t.size(); }

/// The unique type of `t`. Throws SignatureViolation when `t` uses a
/// constructor of the other signature and CompositionMismatch when some
/// composition has tgt(g) != src(f); both carry the offending path.
ArrowType type_of(Signature sig, const Term& t);

/// Non-throwing variant.
std::optional<ArrowType> try_type_of(Signature sig, const Term& t);

/// Subterm at `path`, or nullopt when the path leaves the tree.
std::optional<Term> subterm_at(const Term& t, const Path& path);

/// `t` with the subterm at `path` replaced by `replacement`.
/// Throws std::out_of_range on an invalid path.
Term replace_at(const Term& t, const Path& path, const Term& replacement);

/// Every position of `t` in preorder (root first, then children left to
/// right).
std::vector<Path> positions(const Term& t);

// ---------------------------------------------------------------------------
// Generation

/// Seeded pseudo random source. The bounded draw avoids the
/// implementation-defined std distributions so sequences are portable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish value in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return (engine_() >> 17) & 1u; }

 private:
  std::mt19937_64 engine_;
};

/// Every well-typed term of size <= max_size whose atom indices are all
/// <= max_index, ordered by size, then by construction order.
std::vector<Term> enumerate_terms(Signature sig, std::size_t max_size,
                                  Obj max_index);

/// A random well-typed term of size <= max_size. When src and/or tgt are
/// given the result has them. Returns nullopt when no such term was found
/// (for instance when src + tgt is odd).
std::optional<Term> random_term(Signature sig, std::size_t max_size,
                                std::optional<Obj> src, std::optional<Obj> tgt,
                                Rng& rng, Obj max_index = 3);

struct GenOptions {
  /// Number of samples drawn above the exhaustive threshold.
  std::size_t count = 200;
  /// Largest atom index used by unconstrained generation.
  Obj max_index = 3;
};

/// Largest max_size that is enumerated exhaustively.
inline constexpr std::size_t kExhaustiveGenSize = 4;

/// Terms for property tests. For max_size <= kExhaustiveGenSize the result
/// is the exhaustive enumeration (indices <= max_index, widened to cover
/// `want`), filtered by `want`. Above it, `count` seeded random samples.
/// Deterministic in all arguments.
std::vector<Term> gen_terms(Signature sig, std::size_t max_size,
                            std::optional<ArrowType> want, std::uint64_t seed,
                            const GenOptions& options = {});

}  // namespace adjcalc

template <>
struct std::hash<adjcalc::Term> {
  std::size_t operator()(const adjcalc::Term& t) const { return t.hash(); }
};

#endif  // ADJCALC_TERM_HPP_
