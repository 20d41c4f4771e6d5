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

#include "adjcalc/term.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace adjcalc {

std::string path_to_string(const Path& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

std::string_view to_string(Signature sig) {
  return sig == Signature::Self ? "self" : "inv";
}

std::optional<Signature> signature_from_string(std::string_view name) {
  if (name == "self") return Signature::Self;
  if (name == "inv") return Signature::Inv;
  return std::nullopt;
}

bool ctor_allowed(Signature sig, Ctor c) {
  switch (c) {
    case Ctor::Id:
    case Ctor::Comp:
      return true;
    case Ctor::Phi:
    case Ctor::Gamma:
    case Ctor::Ell:
      return sig == Signature::Self;
    case Ctor::Nr:
    case Ctor::Nl:
    case Ctor::Neg:
      return sig == Signature::Inv;
  }
  return false;
}

Ctor unary_of(Signature sig) {
  return sig == Signature::Self ? Ctor::Ell : Ctor::Neg;
}

std::string to_string(const ArrowType& type) {
  return std::to_string(type.src) + " -> " + std::to_string(type.tgt);
}

// ---------------------------------------------------------------------------
// Term

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Term Term::make(Ctor c, Obj index, std::vector<Term> kids) {
  std::size_t sz = 1;
  std::size_t h = mix(static_cast<std::size_t>(c) * 1000003u, index);
  for (const Term& k : kids) {
    sz += k.size();
    h = mix(h, k.hash());
  }
  return Term(std::make_shared<const Node>(Node{c, index, sz, h, std::move(kids)}));
}

Term Term::id(Obj n) { return make(Ctor::Id, n, {}); }
Term Term::phi(Obj n) { return make(Ctor::Phi, n, {}); }
Term Term::gamma(Obj n) { return make(Ctor::Gamma, n, {}); }
Term Term::nr(Obj n) { return make(Ctor::Nr, n, {}); }
Term Term::nl(Obj n) { return make(Ctor::Nl, n, {}); }

Term Term::atom(Ctor c, Obj n) {
  if (!is_atom(c)) throw std::invalid_argument("Term::atom: not an atom");
  return make(c, n, {});
}

Term Term::comp(Term f, Term g) {
  return make(Ctor::Comp, 0, {std::move(f), std::move(g)});
}
Term Term::ell(Term f) { return make(Ctor::Ell, 0, {std::move(f)}); }
Term Term::neg(Term f) { return make(Ctor::Neg, 0, {std::move(f)}); }

Term Term::unary(Ctor c, Term f) {
  if (!is_unary(c)) throw std::invalid_argument("Term::unary: not unary");
  return make(c, 0, {std::move(f)});
}

const Term& Term::child(unsigned i) const {
  if (i >= node_->kids.size()) throw std::out_of_range("Term::child");
  return node_->kids[i];
}

unsigned Term::arity() const {
  return static_cast<unsigned>(node_->kids.size());
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  if (a.ctor() != b.ctor() || a.index() != b.index()) return false;
  for (unsigned i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Typing

namespace {

ArrowType type_rec(Signature sig, const Term& t, Path& path) {
  const Ctor c = t.ctor();
  if (!ctor_allowed(sig, c)) {
    SignatureViolation e("constructor not in the " +
                         std::string(to_string(sig)) + " signature");
    e.set_path(path);
    throw e;
  }
  const Obj n = t.index();
  switch (c) {
    case Ctor::Id:
      return {n, n};
    case Ctor::Phi:
    case Ctor::Nr:
      return {n + 2, n};
    case Ctor::Gamma:
    case Ctor::Nl:
      return {n, n + 2};
    case Ctor::Ell: {
      path.push_back(0);
      ArrowType a = type_rec(sig, t.arg(), path);
      path.pop_back();
      return {a.src + 1, a.tgt + 1};
    }
    case Ctor::Neg: {
      path.push_back(0);
      ArrowType a = type_rec(sig, t.arg(), path);
      path.pop_back();
      return {a.tgt + 1, a.src + 1};
    }
    case Ctor::Comp: {
      path.push_back(0);
      ArrowType f = type_rec(sig, t.lhs(), path);
      path.back() = 1;
      ArrowType g = type_rec(sig, t.rhs(), path);
      path.pop_back();
      if (g.tgt != f.src) {
        CompositionMismatch e("cannot compose " + to_string(f) + " after " +
                              to_string(g));
        e.set_path(path);
        throw e;
      }
      return {g.src, f.tgt};
    }
  }
  throw std::logic_error("type_of: unknown constructor");
}

}  // namespace

ArrowType type_of(Signature sig, const Term& t) {
  Path path;
  return type_rec(sig, t, path);
}

std::optional<ArrowType> try_type_of(Signature sig, const Term& t) {
  try {
    return type_of(sig, t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Term> subterm_at(const Term& t, const Path& path) {
  const Term* cur = &t;
  for (unsigned i : path) {
    if (i >= cur->arity()) return std::nullopt;
    cur = &cur->child(i);
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const Path& path, std::size_t depth,
                 const Term& replacement) {
  if (depth == path.size()) return replacement;
  const unsigned i = path[depth];
  if (i >= t.arity()) throw std::out_of_range("replace_at: invalid path");
  Term sub = replace_rec(t.child(i), path, depth + 1, replacement);
  if (t.ctor() == Ctor::Comp) {
    return i == 0 ? Term::comp(std::move(sub), t.rhs())
                  : Term::comp(t.lhs(), std::move(sub));
  }
  return Term::unary(t.ctor(), std::move(sub));
}

void positions_rec(const Term& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  for (unsigned i = 0; i < t.arity(); ++i) {
    cur.push_back(i);
    positions_rec(t.child(i), cur, out);
    cur.pop_back();
  }
}

}  // namespace

Term replace_at(const Term& t, const Path& path, const Term& replacement) {
  return replace_rec(t, path, 0, replacement);
}

std::vector<Path> positions(const Term& t) {
  std::vector<Path> out;
  Path cur;
  positions_rec(t, cur, out);
  return out;
}

// ---------------------------------------------------------------------------
// Generation

namespace {

struct Typed {
  Term term;
  ArrowType type;
};

Ctor up_atom(Signature sig) {
  return sig == Signature::Self ? Ctor::Gamma : Ctor::Nl;
}
Ctor down_atom(Signature sig) {
  return sig == Signature::Self ? Ctor::Phi : Ctor::Nr;
}

ArrowType unary_type(Signature sig, ArrowType a) {
  return sig == Signature::Self ? ArrowType{a.src + 1, a.tgt + 1}
                                : ArrowType{a.tgt + 1, a.src + 1};
}

}  // namespace

std::vector<Term> enumerate_terms(Signature sig, std::size_t max_size,
                                  Obj max_index) {
  std::vector<std::vector<Typed>> by_size(max_size + 1);
  if (max_size >= 1) {
    for (Obj n = 0; n <= max_index; ++n) {
      by_size[1].push_back({Term::id(n), {n, n}});
      by_size[1].push_back({Term::atom(down_atom(sig), n), {n + 2, n}});
      by_size[1].push_back({Term::atom(up_atom(sig), n), {n, n + 2}});
    }
  }
  const Ctor un = unary_of(sig);
  for (std::size_t s = 2; s <= max_size; ++s) {
    auto& out = by_size[s];
    for (const Typed& t : by_size[s - 1]) {
      out.push_back({Term::unary(un, t.term), unary_type(sig, t.type)});
    }
    for (std::size_t a = 1; a + 2 <= s; ++a) {
      const std::size_t b = s - 1 - a;
      for (const Typed& f : by_size[a]) {
        for (const Typed& g : by_size[b]) {
          if (g.type.tgt != f.type.src) continue;
          out.push_back({Term::comp(f.term, g.term), {g.type.src, f.type.tgt}});
        }
      }
    }
  }
  std::vector<Term> all;
  for (const auto& bucket : by_size) {
    for (const Typed& t : bucket) all.push_back(t.term);
  }
  return all;
}

namespace {

class RandomGen {
 public:
  RandomGen(Signature sig, Rng& rng, Obj max_index)
      : sig_(sig), rng_(rng), max_index_(max_index) {}

  std::optional<Typed> gen(std::size_t budget, std::optional<Obj> src,
                           std::optional<Obj> tgt) {
    if (budget == 0) return std::nullopt;
    if (src && tgt && !feasible(budget, *src, *tgt)) return std::nullopt;
    for (int attempt = 0; attempt < 8; ++attempt) {
      // Small budgets lean towards atoms.
      const std::uint64_t roll = rng_.below(budget >= 3 ? 10 : budget == 2 ? 6 : 1);
      std::optional<Typed> r;
      if (roll == 0 || budget == 1) {
        r = atom(src, tgt);
      } else if (roll <= 3 || budget < 3) {
        r = unary(budget, src, tgt);
      } else {
        r = comp(budget, src, tgt);
      }
      if (r) return r;
    }
    return atom(src, tgt);
  }

 private:
  static bool feasible(std::size_t budget, Obj src, Obj tgt) {
    if ((src + tgt) % 2 != 0) return false;
    const std::size_t steps = (src > tgt ? src - tgt : tgt - src) / 2;
    return steps == 0 || 2 * steps - 1 <= budget;
  }

  Obj pick_index() { return static_cast<Obj>(rng_.below(max_index_ + 1)); }

  std::optional<Typed> atom(std::optional<Obj> src, std::optional<Obj> tgt) {
    std::vector<Typed> cands;
    auto push = [&](Ctor c, Obj n, ArrowType ty) {
      cands.push_back({Term::atom(c, n), ty});
    };
    if (src && tgt) {
      if (*src == *tgt) push(Ctor::Id, *src, {*src, *src});
      if (*src == *tgt + 2) push(down_atom(sig_), *tgt, {*src, *tgt});
      if (*tgt == *src + 2) push(up_atom(sig_), *src, {*src, *tgt});
    } else if (src) {
      push(Ctor::Id, *src, {*src, *src});
      if (*src >= 2) push(down_atom(sig_), *src - 2, {*src, *src - 2});
      push(up_atom(sig_), *src, {*src, *src + 2});
    } else if (tgt) {
      push(Ctor::Id, *tgt, {*tgt, *tgt});
      push(down_atom(sig_), *tgt, {*tgt + 2, *tgt});
      if (*tgt >= 2) push(up_atom(sig_), *tgt - 2, {*tgt - 2, *tgt});
    } else {
      const Obj n = pick_index();
      push(Ctor::Id, n, {n, n});
      push(down_atom(sig_), n, {n + 2, n});
      push(up_atom(sig_), n, {n, n + 2});
    }
    if (cands.empty()) return std::nullopt;
    return cands[rng_.below(cands.size())];
  }

  std::optional<Typed> unary(std::size_t budget, std::optional<Obj> src,
                             std::optional<Obj> tgt) {
    // L f : src(f)+1 -> tgt(f)+1;  neg f : tgt(f)+1 -> src(f)+1.
    std::optional<Obj> inner_src, inner_tgt;
    auto dec = [](std::optional<Obj> o, std::optional<Obj>& out) {
      if (!o) return true;
      if (*o == 0) return false;
      out = *o - 1;
      return true;
    };
    const bool ok = sig_ == Signature::Self
                        ? dec(src, inner_src) && dec(tgt, inner_tgt)
                        : dec(tgt, inner_src) && dec(src, inner_tgt);
    if (!ok) return std::nullopt;
    auto inner = gen(budget - 1, inner_src, inner_tgt);
    if (!inner) return std::nullopt;
    return Typed{Term::unary(unary_of(sig_), inner->term),
                 unary_type(sig_, inner->type)};
  }

  std::optional<Typed> comp(std::size_t budget, std::optional<Obj> src,
                            std::optional<Obj> tgt) {
    const std::size_t g_budget = 1 + rng_.below(budget - 2);
    const std::size_t f_budget = budget - 1 - g_budget;
    auto g = gen(g_budget, src, std::nullopt);
    if (!g) return std::nullopt;
    auto f = gen(f_budget, g->type.tgt, tgt);
    if (!f) return std::nullopt;
    return Typed{Term::comp(f->term, g->term), {g->type.src, f->type.tgt}};
  }

  Signature sig_;
  Rng& rng_;
  Obj max_index_;
};

}  // namespace

std::optional<Term> random_term(Signature sig, std::size_t max_size,
                                std::optional<Obj> src, std::optional<Obj> tgt,
                                Rng& rng, Obj max_index) {
  RandomGen gen(sig, rng, max_index);
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto r = gen.gen(max_size, src, tgt);
    if (r) return r->term;
  }
  return std::nullopt;
}

std::vector<Term> gen_terms(Signature sig, std::size_t max_size,
                            std::optional<ArrowType> want, std::uint64_t seed,
                            const GenOptions& options) {
  std::vector<Term> out;
  if (max_size == 0) return out;
  if (max_size <= kExhaustiveGenSize) {
    Obj max_index = options.max_index;
    if (want) max_index = std::max({max_index, want->src, want->tgt});
    for (Term& t : enumerate_terms(sig, max_size, max_index)) {
      if (!want || type_of(sig, t) == *want) out.push_back(std::move(t));
    }
    return out;
  }
  Rng rng(seed);
  std::optional<Obj> src = want ? std::optional<Obj>(want->src) : std::nullopt;
  std::optional<Obj> tgt = want ? std::optional<Obj>(want->tgt) : std::nullopt;
  for (std::size_t i = 0; i < options.count; ++i) {
    auto t = random_term(sig, max_size, src, tgt, rng, options.max_index);
    if (!t) break;
    out.push_back(std::move(*t));
  }
  return out;
}

}  // namespace adjcalc
