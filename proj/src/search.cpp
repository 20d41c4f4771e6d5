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

// Bounded equality search.
//
// Search states are terms modulo the structural schemas. Such a class has a
// canonical representative: a word of letters U^k(a) where a is a
// generator and U the signature's unary functor, read as the composite
// x0 . x1 . ... (x_last applied first); the empty word is an identity.
// Every non-structural schema is compiled into a word rewrite rule, one per
// parity of the surrounding functor depth (neg reverses composition order).
// Applying a schema at a subterm is then replacing a factor of the word.
//
// The search is breadth first from both ends; the frontier with fewer
// queued states is expanded first. Only parent links are stored; the
// schema instance behind each link is recomputed when a proof is
// assembled, and each word step is expanded into explicit tree steps
// (structural reshaping, the schema step, re-normalization).

#include <algorithm>
#include <array>
#include <cstring>
#include <deque>
#include <limits>
#include <stdexcept>

#include "adjcalc/theories.hpp"

namespace adjcalc {

namespace {

struct Letter {
  std::uint8_t depth;
  std::uint8_t index;
  Ctor gen;

  friend bool operator==(const Letter&, const Letter&) = default;
};
static_assert(sizeof(Letter) == 3);

using Word = std::vector<Letter>;

constexpr unsigned kMaxLetterField = std::numeric_limits<std::uint8_t>::max();

bool goes_down(Signature sig, Letter l) {
  const bool down = l.gen == Ctor::Phi || l.gen == Ctor::Nr;
  const bool flipped = sig == Signature::Inv && l.depth % 2 == 1;
  return down != flipped;
}

ArrowType letter_type(Signature sig, Letter l) {
  const Obj base = Obj{l.depth} + l.index;
  return goes_down(sig, l) ? ArrowType{base + 2, base} : ArrowType{base, base + 2};
}

void to_word_rec(Signature sig, const Term& t, unsigned shift, bool rev, Word& out) {
  switch (t.ctor()) {
    case Ctor::Id:
      return;
    case Ctor::Comp:
      if (rev) {
        to_word_rec(sig, t.rhs(), shift, rev, out);
        to_word_rec(sig, t.lhs(), shift, rev, out);
      } else {
        to_word_rec(sig, t.lhs(), shift, rev, out);
        to_word_rec(sig, t.rhs(), shift, rev, out);
      }
      return;
    case Ctor::Ell:
    case Ctor::Neg:
      to_word_rec(sig, t.arg(), shift + 1, rev != (sig == Signature::Inv), out);
      return;
    default:
      if (shift > kMaxLetterField || t.index() > kMaxLetterField) {
        throw std::length_error("term too deep for search");
      }
      out.push_back(Letter{static_cast<std::uint8_t>(shift),
                           static_cast<std::uint8_t>(t.index()), t.ctor()});
  }
}

Word to_word(Signature sig, const Term& t) {
  Word w;
  to_word_rec(sig, t, 0, false, w);
  return w;
}

Term letter_term(Signature sig, Letter l) {
  Term t = Term::atom(l.gen, l.index);
  for (unsigned i = 0; i < l.depth; ++i) t = Term::unary(unary_of(sig), std::move(t));
  return t;
}

Term spine(std::vector<Term> parts) {
  Term acc = std::move(parts.back());
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Term::comp(std::move(parts[i]), std::move(acc));
  return acc;
}

Term from_word(Signature sig, const Word& w, Obj empty_obj) {
  if (w.empty()) return Term::id(empty_obj);
  std::vector<Term> parts;
  parts.reserve(w.size());
  for (Letter l : w) parts.push_back(letter_term(sig, l));
  return spine(std::move(parts));
}

ArrowType word_type(Signature sig, const Word& w) {
  return {letter_type(sig, w.back()).src, letter_type(sig, w.front()).tgt};
}

// ---------------------------------------------------------------------------
// Compiled schemas

struct Item {
  bool meta = false;
  Ctor gen = Ctor::Id;
  unsigned depth_off = 0;  // letter depth is c + depth_off
  ObjExpr obj;             // letter index is value(obj.var) + obj.offset
  unsigned var = 0;        // meta: arrow variable
  bool rev = false;        // meta: word appears reversed
};

struct Side {
  std::vector<Item> items;
  int meta_at = -1;
  int anchor = -1;   // first generator item
  ObjExpr empty_obj;  // empty side: the identity's object is c + value + offset
};

struct CompiledRule {
  RuleId rule;
  std::array<Side, 2> from;  // by parity of the context depth
  std::array<Side, 2> to;
};

void flatten(Signature sig, const Pattern& p, unsigned shift, bool rev, std::vector<Item>& out) {
  switch (p.kind) {
    case Pattern::Kind::Id:
      return;
    case Pattern::Kind::Atom:
      out.push_back(Item{false, p.ctor, shift, p.obj, 0, false});
      return;
    case Pattern::Kind::Comp:
      flatten(sig, p.kids[rev ? 1 : 0], shift, rev, out);
      flatten(sig, p.kids[rev ? 0 : 1], shift, rev, out);
      return;
    case Pattern::Kind::Unary:
      flatten(sig, p.kids[0], shift + 1, rev != (sig == Signature::Inv), out);
      return;
    case Pattern::Kind::Arrow:
      out.push_back(Item{true, Ctor::Id, shift, {}, p.var, rev});
      return;
  }
}

// Symbolic source object of an identity-only pattern.
ObjExpr identity_object(Signature sig, const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::Id:
      return p.obj;
    case Pattern::Kind::Comp:
      return identity_object(sig, p.kids[1]);
    case Pattern::Kind::Unary: {
      ObjExpr e = identity_object(sig, p.kids[0]);
      ++e.offset;
      return e;
    }
    default:
      throw std::logic_error("identity_object: side is not an identity");
  }
}

Side compile_side(Signature sig, const Pattern& p, unsigned parity) {
  Side s;
  flatten(sig, p, 0, parity == 1, s.items);
  for (int i = 0; i < static_cast<int>(s.items.size()); ++i) {
    if (s.items[i].meta) {
      if (s.meta_at >= 0) throw std::logic_error("compile_side: two arrow metavariables");
      s.meta_at = i;
    } else if (s.anchor < 0) {
      s.anchor = i;
    }
  }
  if (s.items.empty()) s.empty_obj = identity_object(sig, p);
  if (!s.items.empty() && s.anchor < 0) throw std::logic_error("compile_side: no generator");
  return s;
}

const std::vector<CompiledRule>& compiled_rules(Signature sig) {
  static const auto build = [](Signature sig) {
    std::vector<CompiledRule> out;
    for (const Schema& s : all_schemas(sig)) {
      if (s.structural) continue;
      for (Direction d : {Direction::L2R, Direction::R2L}) {
        CompiledRule r{{&s, d}, {}, {}};
        for (unsigned parity = 0; parity < 2; ++parity) {
          r.from[parity] = compile_side(sig, r.rule.from(), parity);
          r.to[parity] = compile_side(sig, r.rule.to(), parity);
        }
        out.push_back(std::move(r));
      }
    }
    return out;
  };
  static const std::vector<CompiledRule> self = build(Signature::Self);
  static const std::vector<CompiledRule> inv = build(Signature::Inv);
  return sig == Signature::Self ? self : inv;
}

// ---------------------------------------------------------------------------
// Word rewriting

struct Binding {
  std::array<std::optional<Obj>, 4> objs;
  Word meta;
  unsigned meta_var = 0;

  bool bind(const ObjExpr& e, Obj value) {
    if (value < e.offset) return false;
    auto& slot = objs.at(e.var);
    if (slot) return *slot == value - e.offset;
    slot = value - e.offset;
    return true;
  }
};

struct Edge {
  const CompiledRule* rule = nullptr;
  unsigned c = 0;
  std::size_t start = 0;
  std::size_t len = 0;
  Binding binding;
};

class Rewriter {
 public:
  Rewriter(Signature sig, Level level, Obj empty_obj) : sig_(sig), empty_obj_(empty_obj) {
    for (const CompiledRule& r : compiled_rules(sig)) {
      if (r.rule.schema->level <= level) rules_.push_back(&r);
    }
  }

  /// Calls emit(result, edge) for each one-step rewrite of w; stops when
  /// emit returns false.
  template <class Emit>
  void for_each(const Word& w, Emit&& emit) const {
    const unsigned parities = sig_ == Signature::Inv ? 2 : 1;
    for (const CompiledRule* r : rules_) {
      for (unsigned p = 0; p < parities; ++p) {
        const Side& from = r->from[p];
        if (from.items.empty()) {
          if (!insertions(w, *r, p, emit)) return;
        } else if (!rewrites(w, *r, p, emit)) {
          return;
        }
      }
    }
  }

  Signature sig() const { return sig_; }
  Obj empty_obj() const { return empty_obj_; }

 private:
  Obj boundary(const Word& w, std::size_t j) const {
    if (w.empty()) return empty_obj_;
    return j < w.size() ? letter_type(sig_, w[j]).tgt : letter_type(sig_, w.back()).src;
  }

  bool parity_ok(unsigned c, unsigned p) const {
    return sig_ == Signature::Self || c % 2 == p;
  }

  // Replacement word for the to-side; false on an unbound variable or
  // a field overflow.
  bool build(const Side& to, unsigned c, const Binding& b, Word& out) const {
    for (const Item& it : to.items) {
      if (it.meta) {
        const unsigned t = c + it.depth_off;
        const std::size_t first = out.size();
        for (Letter l : b.meta) {
          if (l.depth + t > kMaxLetterField) return false;
          out.push_back(Letter{static_cast<std::uint8_t>(l.depth + t), l.index, l.gen});
        }
        if (it.rev) std::reverse(out.begin() + first, out.end());
      } else {
        const auto& v = b.objs.at(it.obj.var);
        if (!v) return false;
        const unsigned depth = c + it.depth_off;
        const Obj index = *v + it.obj.offset;
        if (depth > kMaxLetterField || index > kMaxLetterField) return false;
        out.push_back(Letter{static_cast<std::uint8_t>(depth), static_cast<std::uint8_t>(index), it.gen});
      }
    }
    return true;
  }

  template <class Emit>
  bool finish(const Word& w, const CompiledRule& r, unsigned p, Edge& e, Emit& emit) const {
    Word result(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(e.start));
    if (!build(r.to[p], e.c, e.binding, result)) return true;
    result.insert(result.end(), w.begin() + static_cast<std::ptrdiff_t>(e.start + e.len), w.end());
    if (result == w) return true;
    e.rule = &r;
    return emit(result, e);
  }

  template <class Emit>
  bool insertions(const Word& w, const CompiledRule& r, unsigned p, Emit& emit) const {
    const ObjExpr ex = r.from[p].empty_obj;
    for (std::size_t j = 0; j <= w.size(); ++j) {
      const Obj n = boundary(w, j);
      for (unsigned c = 0; c + ex.offset <= n; ++c) {
        if (!parity_ok(c, p)) continue;
        Edge e;
        e.c = c;
        e.start = j;
        e.len = 0;
        e.binding.objs.at(ex.var) = n - c - ex.offset;
        if (!finish(w, r, p, e, emit)) return false;
      }
    }
    return true;
  }

  bool match_at(const Word& w, const Schema& schema, const Side& side, std::size_t start,
                std::size_t meta_len, unsigned c, Edge& e) const {
    std::size_t pos = start;
    Binding& b = e.binding;
    for (const Item& it : side.items) {
      if (it.meta) {
        const unsigned t = c + it.depth_off;
        if (pos + meta_len > w.size()) return false;
        b.meta.clear();
        for (std::size_t k = 0; k < meta_len; ++k) {
          const Letter l = w[pos + k];
          if (l.depth < t) return false;
          b.meta.push_back(Letter{static_cast<std::uint8_t>(l.depth - t), l.index, l.gen});
        }
        if (it.rev) std::reverse(b.meta.begin(), b.meta.end());
        b.meta_var = it.var;
        const ArrowType ty = word_type(sig_, b.meta);
        const ArrowVar& decl = schema.arrow_vars.at(it.var);
        if (!b.bind(decl.src, ty.src) || !b.bind(decl.tgt, ty.tgt)) return false;
        pos += meta_len;
      } else {
        if (pos >= w.size()) return false;
        const Letter l = w[pos++];
        if (l.gen != it.gen || l.depth != c + it.depth_off) return false;
        if (!b.bind(it.obj, l.index)) return false;
      }
    }
    e.c = c;
    e.start = start;
    e.len = pos - start;
    return true;
  }

  template <class Emit>
  bool rewrites(const Word& w, const CompiledRule& r, unsigned p, Emit& emit) const {
    const Side& side = r.from[p];
    const Schema& schema = *r.rule.schema;
    const Item& anchor = side.items[static_cast<std::size_t>(side.anchor)];
    const std::size_t before = static_cast<std::size_t>(side.anchor);
    const bool meta_first = side.meta_at >= 0 && side.meta_at < side.anchor;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j].gen != anchor.gen || w[j].depth < anchor.depth_off) continue;
      const unsigned c = w[j].depth - anchor.depth_off;
      if (!parity_ok(c, p)) continue;
      if (side.meta_at < 0) {
        if (j < before) continue;
        Edge e;
        if (match_at(w, schema, side, j - before, 0, c, e) && !finish(w, r, p, e, emit)) {
          return false;
        }
        continue;
      }
      const unsigned t = c + side.items[static_cast<std::size_t>(side.meta_at)].depth_off;
      for (std::size_t m = 1;; ++m) {
        std::size_t start;
        if (meta_first) {
          // The metavariable covers [j - m, j); nothing else precedes the anchor.
          if (m > j || w[j - m].depth < t) break;
          start = j - m;
        } else {
          const std::size_t meta_pos = j - before + static_cast<std::size_t>(side.meta_at);
          if (j < before || meta_pos + m > w.size() || w[meta_pos + m - 1].depth < t) break;
          start = j - before;
        }
        Edge e;
        if (match_at(w, schema, side, start, m, c, e) && !finish(w, r, p, e, emit)) return false;
      }
    }
    return true;
  }

  Signature sig_;
  Obj empty_obj_;
  std::vector<const CompiledRule*> rules_;
};

// ---------------------------------------------------------------------------
// State store: words in one arena, open-addressed index.

class StateStore {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    std::uint64_t hash;
    std::uint32_t offset;
    std::uint32_t parent;
    std::uint16_t len;
    std::uint8_t side;
  };

  StateStore() : table_(1u << 12, 0), mask_((1u << 12) - 1) {}

  std::uint32_t find(const Word& w) const {
    const std::uint64_t h = hash(w);
    for (std::size_t i = h & mask_;; i = (i + 1) & mask_) {
      const std::uint32_t slot = table_[i];
      if (slot == 0) return kNone;
      if (same(slot - 1, w, h)) return slot - 1;
    }
  }

  std::uint32_t insert(const Word& w, std::uint8_t side, std::uint32_t parent) {
    if (w.size() > std::numeric_limits<std::uint16_t>::max()) throw std::length_error("word too long");
    if (2 * (nodes_.size() + 1) > table_.size()) grow();
    const std::uint64_t h = hash(w);
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{h, static_cast<std::uint32_t>(arena_.size()), parent,
                          static_cast<std::uint16_t>(w.size()), side});
    arena_.insert(arena_.end(), w.begin(), w.end());
    place(id, h);
    return id;
  }

  const Node& node(std::uint32_t id) const { return nodes_[id]; }

  Word word(std::uint32_t id) const {
    const Node& n = nodes_[id];
    return Word(arena_.begin() + n.offset, arena_.begin() + n.offset + n.len);
  }

  std::size_t size() const { return nodes_.size(); }

 private:
  static std::uint64_t hash(const Word& w) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ w.size();
    for (Letter l : w) {
      const std::uint64_t v = (std::uint64_t{l.depth} << 16) | (std::uint64_t{l.index} << 8) |
                              static_cast<std::uint64_t>(l.gen);
      h = (h ^ v) * 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }

  bool same(std::uint32_t id, const Word& w, std::uint64_t h) const {
    const Node& n = nodes_[id];
    return n.hash == h && n.len == w.size() &&
           std::memcmp(arena_.data() + n.offset, w.data(), w.size() * sizeof(Letter)) == 0;
  }

  void place(std::uint32_t id, std::uint64_t h) {
    std::size_t i = h & mask_;
    while (table_[i] != 0) i = (i + 1) & mask_;
    table_[i] = id + 1;
  }

  void grow() {
    table_.assign(table_.size() * 2, 0);
    mask_ = table_.size() - 1;
    for (std::uint32_t id = 0; id < nodes_.size(); ++id) place(id, nodes_[id].hash);
  }

  std::vector<Letter> arena_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> table_;
  std::size_t mask_;
};

// ---------------------------------------------------------------------------
// Proof assembly

void append(Proof& p, const Proof& tail) {
  if (!(tail.start == p.final_term())) throw std::logic_error("proof pieces do not meet");
  p.steps.insert(p.steps.end(), tail.steps.begin(), tail.steps.end());
}

// Tree steps from the canonical form of `parent` to that of `child`.
Proof edge_proof(const Rewriter& rw, const Word& parent, const Word& child) {
  const Signature sig = rw.sig();
  std::optional<Edge> found;
  rw.for_each(parent, [&](const Word& result, const Edge& e) {
    if (result != child) return true;
    found = e;
    return false;
  });
  if (!found) throw std::logic_error("edge_proof: child is not a neighbor");
  const Edge& e = *found;
  const Schema& schema = *e.rule->rule.schema;

  Subst subst = Subst::for_schema(schema);
  for (std::size_t i = 0; i < subst.objs.size(); ++i) subst.objs[i] = e.binding.objs.at(i);
  if (!e.binding.meta.empty()) subst.arrows.at(e.binding.meta_var) = from_word(sig, e.binding.meta, 0);
  auto inst = instantiate(e.rule->rule.from(), subst);
  if (!inst) throw std::logic_error("edge_proof: unbound metavariable");
  Term x = std::move(*inst);
  for (unsigned i = 0; i < e.c; ++i) x = Term::unary(unary_of(sig), std::move(x));

  std::vector<Term> parts;
  for (std::size_t i = 0; i < e.start; ++i) parts.push_back(letter_term(sig, parent[i]));
  const std::size_t at = parts.size();
  parts.push_back(std::move(x));
  for (std::size_t i = e.start + e.len; i < parent.size(); ++i) {
    parts.push_back(letter_term(sig, parent[i]));
  }
  Path position(at, 1u);
  if (at + 1 < parts.size()) position.push_back(0);
  position.insert(position.end(), e.c, 0u);
  const Term shaped = spine(std::move(parts));

  auto step = apply_rule(sig, e.rule->rule, shaped, position);
  if (!step) throw std::logic_error("edge_proof: schema does not apply");

  Proof out = reversed(normalize_structural(sig, shaped));
  if (!(out.start == from_word(sig, parent, rw.empty_obj()))) {
    throw std::logic_error("edge_proof: reshaping does not start at the parent");
  }
  out.steps.push_back(*step);
  append(out, normalize_structural(sig, step->result));
  if (!(out.final_term() == from_word(sig, child, rw.empty_obj()))) {
    throw std::logic_error("edge_proof: step does not end at the child");
  }
  return out;
}

std::vector<std::uint32_t> chain(const StateStore& store, std::uint32_t id) {
  std::vector<std::uint32_t> out;
  for (; id != StateStore::kNone; id = store.node(id).parent) out.push_back(id);
  return out;  // id first, root last
}

EqVerdict search(const Theory& th, const Term& t1, const Term& t2, std::size_t budget,
                 ArrowType type) {
  EqVerdict v;
  Word w1, w2;
  try {
    w1 = to_word(th.sig, t1);
    w2 = to_word(th.sig, t2);
  } catch (const std::length_error&) {
    return v;
  }
  const Rewriter rw(th.sig, th.level, type.src);

  // Meeting point: a forward node and a backward node holding the same word.
  auto assemble = [&](const StateStore& store, std::uint32_t fwd, std::uint32_t bwd,
                      std::optional<std::uint32_t> bridge_from_fwd,
                      std::optional<std::uint32_t> bridge_from_bwd) {
    Proof proof{t1, {}};
    append(proof, normalize_structural(th.sig, t1));
    auto f = chain(store, fwd);
    std::reverse(f.begin(), f.end());
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      append(proof, edge_proof(rw, store.word(f[i]), store.word(f[i + 1])));
    }
    Word cur = store.word(f.back());
    if (bridge_from_fwd) {
      // The last forward node produced the backward node's word.
      Word next = store.word(*bridge_from_fwd);
      append(proof, edge_proof(rw, cur, next));
      cur = next;
    }
    if (bridge_from_bwd) {
      // A backward node produced the forward node's word.
      Word next = store.word(*bridge_from_bwd);
      append(proof, reversed(edge_proof(rw, next, cur)));
      cur = next;
    }
    const auto b = chain(store, bwd);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
      append(proof, reversed(edge_proof(rw, store.word(b[i + 1]), store.word(b[i]))));
    }
    append(proof, reversed(normalize_structural(th.sig, t2)));
    return proof;
  };

  StateStore store;
  const std::uint32_t root1 = store.insert(w1, 0, StateStore::kNone);
  if (w1 == w2) {
    v.kind = EqVerdict::Kind::Equal;
    v.proof = assemble(store, root1, root1, std::nullopt, std::nullopt);
    return v;
  }
  const std::uint32_t root2 = store.insert(w2, 1, StateStore::kNone);
  std::array<std::deque<std::uint32_t>, 2> queue;
  queue[0].push_back(root1);
  queue[1].push_back(root2);

  while (v.expanded < budget) {
    if (queue[0].empty() || queue[1].empty()) {
      v.exhausted = true;
      break;
    }
    const std::uint8_t side = queue[0].size() <= queue[1].size() ? 0 : 1;
    const std::uint32_t id = queue[side].front();
    queue[side].pop_front();
    ++v.expanded;
    const Word w = store.word(id);
    std::optional<std::uint32_t> met;
    rw.for_each(w, [&](const Word& result, const Edge&) {
      const std::uint32_t hit = store.find(result);
      if (hit == StateStore::kNone) {
        queue[side].push_back(store.insert(result, side, id));
        return true;
      }
      if (store.node(hit).side == side) return true;
      met = hit;
      return false;
    });
    if (met) {
      v.kind = EqVerdict::Kind::Equal;
      v.proof = side == 0 ? assemble(store, id, *met, *met, std::nullopt)
                          : assemble(store, *met, id, std::nullopt, id);
      return v;
    }
  }
  return v;
}

}  // namespace

EqVerdict eq_search(const Theory& th, const Term& t1, const Term& t2, std::size_t budget,
                    const EqOptions& options) {
  const ArrowType ty1 = type_of(th.sig, t1);
  const ArrowType ty2 = type_of(th.sig, t2);
  if (!(ty1 == ty2)) {
    throw TypeMismatch("terms have different types: " + to_string(ty1) + " and " + to_string(ty2));
  }
  if (th.level == Level::Triv && !options.with_proof) {
    EqVerdict v;
    v.kind = EqVerdict::Kind::Equal;
    v.by_preorder = true;
    return v;
  }
  if (th.level != Level::Triv) {
    const CircleMode mode = th.level == Level::J ? CircleMode::Drop : CircleMode::Count;
    TLDiagram d1 = interp(th.sig, t1, mode);
    TLDiagram d2 = interp(th.sig, t2, mode);
    if (!diagram_eq(d1, d2, mode)) {
      EqVerdict v;
      v.kind = EqVerdict::Kind::Distinct;
      v.witness.emplace(std::move(d1), std::move(d2));
      return v;
    }
  }
  return search(th, t1, t2, budget, ty1);
}

}  // namespace adjcalc
