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

// Reference implementations used only by tests. They share no code with the
// library beyond the Term type.

#ifndef ADJCALC_TESTS_ORACLES_HPP_
#define ADJCALC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "adjcalc/term.hpp"

namespace oracle {

using adjcalc::Ctor;
using adjcalc::Obj;
using adjcalc::Signature;
using adjcalc::Term;

/// Diagram as an explicit list of point pairs plus a circle count.
/// Points: top i is i, bottom j is src + j.
struct Diagram {
  Obj src = 0;
  Obj tgt = 0;
  std::vector<int> partner;
  unsigned circles = 0;

  void link(int a, int b) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

inline Diagram blank(Obj src, Obj tgt) {
  Diagram d;
  d.src = src;
  d.tgt = tgt;
  d.partner.assign(src + tgt, -1);
  return d;
}

inline Diagram generator(Ctor c, Obj n) {
  const int s = static_cast<int>(n);
  switch (c) {
    case Ctor::Id: {
      Diagram d = blank(n, n);
      for (int i = 0; i < s; ++i) d.link(i, s + i);
      return d;
    }
    case Ctor::Phi:
    case Ctor::Nr: {
      // top T1..T(n+2), bottom B1..Bn
      Diagram d = blank(n + 2, n);
      d.link(0, 1);
      for (int i = 0; i < s; ++i) d.link(i + 2, s + 2 + i);
      return d;
    }
    default: {
      Diagram d = blank(n, n + 2);
      d.link(s, s + 1);
      for (int i = 0; i < s; ++i) d.link(i, s + 2 + i);
      return d;
    }
  }
}

/// Extra left strand.
inline Diagram shift(const Diagram& d) {
  Diagram r = blank(d.src + 1, d.tgt + 1);
  auto move = [&](int p) {
    // old top p -> p+1; old bottom p -> p+2 (one more top point, one more bottom)
    return p < static_cast<int>(d.src) ? p + 1 : p + 2;
  };
  for (int p = 0; p < static_cast<int>(d.partner.size()); ++p) {
    r.partner[static_cast<std::size_t>(move(p))] = move(d.partner[static_cast<std::size_t>(p)]);
  }
  r.link(0, static_cast<int>(d.src) + 1);
  r.circles = d.circles;
  return r;
}

/// Top and bottom exchanged.
inline Diagram flip(const Diagram& d) {
  Diagram r = blank(d.tgt, d.src);
  auto move = [&](int p) {
    return p < static_cast<int>(d.src) ? static_cast<int>(d.tgt) + p : p - static_cast<int>(d.src);
  };
  for (int p = 0; p < static_cast<int>(d.partner.size()); ++p) {
    r.partner[static_cast<std::size_t>(move(p))] = move(d.partner[static_cast<std::size_t>(p)]);
  }
  r.circles = d.circles;
  return r;
}

/// g stacked above f, by walking every strand through the glued row.
inline Diagram compose(const Diagram& f, const Diagram& g) {
  if (g.tgt != f.src) throw std::invalid_argument("oracle::compose: boundary");
  const int gs = static_cast<int>(g.src);
  const int fs = static_cast<int>(f.src);
  Diagram r = blank(g.src, f.tgt);
  std::vector<bool> seen(f.src, false);
  // Returns the outer point reached, in result numbering.
  auto walk = [&](bool in_g, int p) {
    for (;;) {
      if (in_g) {
        const int q = g.partner[static_cast<std::size_t>(p)];
        if (q < gs) return q;
        seen[static_cast<std::size_t>(q - gs)] = true;
        in_g = false;
        p = q - gs;
      } else {
        const int q = f.partner[static_cast<std::size_t>(p)];
        if (q >= fs) return gs + (q - fs);
        seen[static_cast<std::size_t>(q)] = true;
        in_g = true;
        p = gs + q;
      }
    }
  };
  for (int t = 0; t < gs; ++t) r.partner[static_cast<std::size_t>(t)] = walk(true, t);
  for (int b = 0; b < static_cast<int>(f.tgt); ++b) {
    r.partner[static_cast<std::size_t>(gs + b)] = walk(false, fs + b);
  }
  unsigned loops = 0;
  for (int k = 0; k < fs; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    ++loops;
    int m = k;
    do {
      seen[static_cast<std::size_t>(m)] = true;
      const int a = f.partner[static_cast<std::size_t>(m)];
      seen[static_cast<std::size_t>(a)] = true;
      m = g.partner[static_cast<std::size_t>(gs + a)] - gs;
    } while (m != k);
  }
  r.circles = f.circles + g.circles + loops;
  return r;
}

/// Direct interpretation of both signatures: neg is a flip followed by an
/// extra left strand.
inline Diagram interp(const Term& t, bool drop) {
  Diagram d;
  switch (t.ctor()) {
    case Ctor::Comp:
      d = compose(interp(t.lhs(), drop), interp(t.rhs(), drop));
      break;
    case Ctor::Ell:
      d = shift(interp(t.arg(), drop));
      break;
    case Ctor::Neg:
      d = shift(flip(interp(t.arg(), drop)));
      break;
    default:
      d = generator(t.ctor(), t.index());
  }
  if (drop) d.circles = 0;
  return d;
}

/// Non-crossing check by brute force over all pairs of chords.
inline bool planar(const Diagram& d) {
  const int n = static_cast<int>(d.partner.size());
  auto pos = [&](int p) {
    // cyclic position: tops in order, then bottoms reversed
    return p < static_cast<int>(d.src) ? p : n - 1 - (p - static_cast<int>(d.src));
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int a1 = pos(a), a2 = pos(d.partner[static_cast<std::size_t>(a)]);
      const int b1 = pos(b), b2 = pos(d.partner[static_cast<std::size_t>(b)]);
      const auto [lo, hi] = std::minmax(a1, a2);
      const bool in1 = lo < b1 && b1 < hi;
      const bool in2 = lo < b2 && b2 < hi;
      if (in1 != in2 && b1 != a1 && b1 != a2 && b2 != a1 && b2 != a2) return false;
    }
  }
  return true;
}

/// Typing written out from the generator table.
inline std::optional<std::pair<Obj, Obj>> type(Signature sig, const Term& t) {
  switch (t.ctor()) {
    case Ctor::Id: return std::pair{t.index(), t.index()};
    case Ctor::Phi:
    case Ctor::Gamma:
      if (sig != Signature::Self) return std::nullopt;
      break;
    case Ctor::Nr:
    case Ctor::Nl:
      if (sig != Signature::Inv) return std::nullopt;
      break;
    case Ctor::Comp: {
      auto f = type(sig, t.lhs());
      auto g = type(sig, t.rhs());
      if (!f || !g || g->second != f->first) return std::nullopt;
      return std::pair{g->first, f->second};
    }
    case Ctor::Ell: {
      if (sig != Signature::Self) return std::nullopt;
      auto f = type(sig, t.arg());
      if (!f) return std::nullopt;
      return std::pair{f->first + 1, f->second + 1};
    }
    case Ctor::Neg: {
      if (sig != Signature::Inv) return std::nullopt;
      auto f = type(sig, t.arg());
      if (!f) return std::nullopt;
      return std::pair{f->second + 1, f->first + 1};
    }
  }
  const bool down = t.ctor() == Ctor::Phi || t.ctor() == Ctor::Nr;
  return down ? std::pair{t.index() + 2, t.index()} : std::pair{t.index(), t.index() + 2};
}

/// Every tree of at most `max_size` nodes over the signature's constructors
/// with indices <= max_index, typed or not. Unordered.
inline std::vector<Term> all_trees(Signature sig, std::size_t max_size, Obj max_index) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  const Ctor down = sig == Signature::Self ? Ctor::Phi : Ctor::Nr;
  const Ctor up = sig == Signature::Self ? Ctor::Gamma : Ctor::Nl;
  const Ctor un = sig == Signature::Self ? Ctor::Ell : Ctor::Neg;
  for (Obj i = 0; i <= max_index; ++i) {
    for (Ctor c : {Ctor::Id, down, up}) by_size[1].push_back(Term::atom(c, i));
  }
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (const Term& a : by_size[n - 1]) by_size[n].push_back(Term::unary(un, a));
    for (std::size_t k = 1; k + 1 < n; ++k) {
      for (const Term& a : by_size[k]) {
        for (const Term& b : by_size[n - 1 - k]) by_size[n].push_back(Term::comp(a, b));
      }
    }
  }
  std::vector<Term> out;
  for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace oracle

#endif  // ADJCALC_TESTS_ORACLES_HPP_
