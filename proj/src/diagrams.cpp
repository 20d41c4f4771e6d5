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

#include "adjcalc/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

#include "adjcalc/translate.hpp"

namespace adjcalc {

bool is_planar_matching(Obj src, Obj tgt, const std::vector<std::uint32_t>& partner) {
  const std::uint32_t n = src + tgt;
  if (partner.size() != n || n % 2 != 0) return false;
  for (std::uint32_t p = 0; p < n; ++p) {
    const std::uint32_t q = partner[p];
    if (q >= n || q == p || partner[q] != p) return false;
  }
  // Cyclic position: T1..Tsrc, then Btgt down to B1.
  auto cyc = [&](std::uint32_t p) { return p < src ? p : src + (tgt - 1 - (p - src)); };
  std::vector<std::uint32_t> at(n);
  for (std::uint32_t p = 0; p < n; ++p) at[cyc(p)] = p;
  std::vector<std::uint32_t> open;
  for (std::uint32_t pos = 0; pos < n; ++pos) {
    const std::uint32_t other = cyc(partner[at[pos]]);
    if (other > pos) {
      open.push_back(pos);
    } else {
      if (open.empty() || open.back() != other) return false;
      open.pop_back();
    }
  }
  return open.empty();
}

TLDiagram::TLDiagram(Obj src, Obj tgt, std::vector<std::uint32_t> partner,
                     std::uint32_t circles)
    : src_(src), tgt_(tgt), partner_(std::move(partner)), circles_(circles) {
  if (!is_planar_matching(src_, tgt_, partner_)) {
    throw std::invalid_argument("TLDiagram: matching is not a planar perfect matching");
  }
}

TLDiagram TLDiagram::identity(Obj n) {
  std::vector<std::uint32_t> m(2 * n);
  for (Obj i = 0; i < n; ++i) {
    m[i] = n + i;
    m[n + i] = i;
  }
  return TLDiagram(n, n, std::move(m), 0);
}

std::string TLDiagram::label(std::uint32_t p) const {
  return p < src_ ? "T" + std::to_string(p + 1) : "B" + std::to_string(p - src_ + 1);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> TLDiagram::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t p = 0; p < points(); ++p) {
    if (p < partner_[p]) out.emplace_back(p, partner_[p]);
  }
  return out;
}

TLDiagram TLDiagram::without_circles() const {
  TLDiagram d = *this;
  d.circles_ = 0;
  return d;
}

TLDiagram phi_diagram(Obj n) {
  std::vector<std::uint32_t> m(2 * n + 2);
  m[0] = 1;
  m[1] = 0;
  for (Obj i = 0; i < n; ++i) {
    m[i + 2] = n + 2 + i;
    m[n + 2 + i] = i + 2;
  }
  return TLDiagram(n + 2, n, std::move(m), 0);
}

TLDiagram gamma_diagram(Obj n) {
  std::vector<std::uint32_t> m(2 * n + 2);
  m[n] = n + 1;
  m[n + 1] = n;
  for (Obj i = 0; i < n; ++i) {
    m[i] = n + 2 + i;
    m[n + 2 + i] = i;
  }
  return TLDiagram(n, n + 2, std::move(m), 0);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

TLDiagram compose(const TLDiagram& d_f, const TLDiagram& d_g) {
  if (d_g.tgt() != d_f.src()) {
    throw BoundaryMismatch("cannot stack a diagram with " + std::to_string(d_g.tgt()) +
                           " bottom points over one with " + std::to_string(d_f.src()) +
                           " top points");
  }
  // Points of d_g first, then points of d_f shifted by ng.
  const std::uint32_t ng = d_g.points();
  const std::uint32_t nf = d_f.points();
  UnionFind uf(ng + nf);
  for (std::uint32_t p = 0; p < ng; ++p) uf.unite(p, d_g.partner(p));
  for (std::uint32_t p = 0; p < nf; ++p) uf.unite(ng + p, ng + d_f.partner(p));
  const Obj middle = d_g.tgt();
  for (Obj i = 0; i < middle; ++i) uf.unite(d_g.src() + i, ng + i);

  const Obj src = d_g.src();
  const Obj tgt = d_f.tgt();
  auto outer = [&](std::uint32_t r) -> std::size_t {
    return r < src ? r : ng + d_f.src() + (r - src);
  };
  std::vector<std::uint32_t> partner(src + tgt);
  std::unordered_map<std::size_t, std::uint32_t> pending;
  for (std::uint32_t r = 0; r < src + tgt; ++r) {
    const std::size_t root = uf.find(outer(r));
    auto it = pending.find(root);
    if (it == pending.end()) {
      pending.emplace(root, r);
    } else {
      partner[r] = it->second;
      partner[it->second] = r;
      pending.erase(it);
    }
  }
  // Components touching no outer point are closed loops.
  std::vector<char> seen(ng + nf, 0);
  for (std::uint32_t r = 0; r < src + tgt; ++r) seen[uf.find(outer(r))] = 1;
  std::uint32_t loops = 0;
  for (Obj i = 0; i < middle; ++i) {
    const std::size_t root = uf.find(d_g.src() + i);
    if (!seen[root]) {
      seen[root] = 1;
      ++loops;
    }
  }
  return TLDiagram(src, tgt, std::move(partner), d_f.circles() + d_g.circles() + loops);
}

TLDiagram l_shift(const TLDiagram& d) {
  const Obj src = d.src() + 1;
  const Obj tgt = d.tgt() + 1;
  auto moved = [&](std::uint32_t p) { return p < d.src() ? p + 1 : p + 2; };
  std::vector<std::uint32_t> m(src + tgt);
  m[0] = src;
  m[src] = 0;
  for (std::uint32_t p = 0; p < d.points(); ++p) m[moved(p)] = moved(d.partner(p));
  return TLDiagram(src, tgt, std::move(m), d.circles());
}

namespace {

TLDiagram interp_self(const Term& t, CircleMode mode) {
  TLDiagram d = [&] {
    switch (t.ctor()) {
      case Ctor::Id: return TLDiagram::identity(t.index());
      case Ctor::Phi: return phi_diagram(t.index());
      case Ctor::Gamma: return gamma_diagram(t.index());
      case Ctor::Ell: return l_shift(interp_self(t.arg(), mode));
      case Ctor::Comp:
        return compose(interp_self(t.lhs(), mode), interp_self(t.rhs(), mode));
      default:
        throw SignatureViolation("interp: constructor of the other signature");
    }
  }();
  return mode == CircleMode::Drop ? d.without_circles() : d;
}

}  // namespace

TLDiagram interp(Signature sig, const Term& t, CircleMode mode) {
  type_of(sig, t);
  return interp_self(sig == Signature::Self ? t : functor_FS(t), mode);
}

bool diagram_eq(const TLDiagram& a, const TLDiagram& b, CircleMode mode) {
  if (a.src() != b.src() || a.tgt() != b.tgt() || a.matching() != b.matching()) {
    return false;
  }
  return mode == CircleMode::Drop || a.circles() == b.circles();
}

std::string to_json(const TLDiagram& d) {
  nlohmann::ordered_json j;
  j["src"] = d.src();
  j["tgt"] = d.tgt();
  auto pairs = nlohmann::ordered_json::array();
  for (auto [a, b] : d.pairs()) pairs.push_back({d.label(a), d.label(b)});
  j["pairs"] = std::move(pairs);
  j["circles"] = d.circles();
  return j.dump();
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_ascii(const TLDiagram& d) {
  // One column per boundary point: '|' is a through strand, '[' and ']' are
  // the two ends of a cap (top row) or cup (bottom row). Through strands
  // keep their left-to-right order, so the k-th '|' on top meets the k-th
  // '|' at the bottom.
  auto row = [&](std::uint32_t first, std::uint32_t count) {
    std::string s;
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::uint32_t p = first + i;
      const std::uint32_t q = d.partner(p);
      const bool same_row = d.is_top(p) == d.is_top(q);
      if (i) s += ' ';
      s += !same_row ? '|' : (q > p ? '[' : ']');
    }
    return s;
  };
  std::uint32_t through = 0;
  for (std::uint32_t p = 0; p < d.src(); ++p) through += d.is_top(d.partner(p)) ? 0 : 1;
  std::string mid;
  for (std::uint32_t i = 0; i < through; ++i) mid += i ? " |" : "|";

  std::ostringstream out;
  out << d.src() << " -> " << d.tgt() << '\n';
  out << "T  " << row(0, d.src()) << '\n';
  out << "   " << mid << '\n';
  out << "B  " << row(d.src(), d.tgt()) << '\n';
  if (d.circles() > 0) out << "(o × " << d.circles() << ")\n";
  return out.str();
}

std::string render_svg(const TLDiagram& d) {
  constexpr int kStep = 40;
  constexpr int kMargin = 30;
  constexpr int kTop = 20;
  constexpr int kRows = 120;
  constexpr int kBottom = kTop + kRows;
  const std::uint32_t columns = std::max<std::uint32_t>({d.src(), d.tgt(), 1});
  const std::uint32_t drawn_circles = std::min<std::uint32_t>(d.circles(), 8);
  const int width = 2 * kMargin + kStep * static_cast<int>(columns - 1) +
                    (d.circles() > 0 ? 60 : 0);
  const int height = kBottom + kTop;

  auto x_of = [&](std::uint32_t p) {
    const std::uint32_t i = d.is_top(p) ? p : p - d.src();
    return kMargin + kStep * static_cast<int>(i);
  };
  auto y_of = [&](std::uint32_t p) { return d.is_top(p) ? kTop : kBottom; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (auto [a, b] : d.pairs()) {
    const int xa = x_of(a), ya = y_of(a), xb = x_of(b), yb = y_of(b);
    if (ya == yb) {
      // Caps bend down, cups bend up; wider arcs bend further.
      const int bend = std::min(kRows / 2 - 5, (std::abs(xb - xa) * 2) / 5 + 10);
      const int yc = ya == kTop ? ya + bend : ya - bend;
      out << "    <path d=\"M " << xa << ' ' << ya << " C " << xa << ' ' << yc << ", " << xb
          << ' ' << yc << ", " << xb << ' ' << yb << "\"/>\n";
    } else {
      const int ym = (kTop + kBottom) / 2;
      out << "    <path d=\"M " << xa << ' ' << ya << " C " << xa << ' ' << ym << ", " << xb
          << ' ' << ym << ", " << xb << ' ' << yb << "\"/>\n";
    }
  }
  const int cx = 2 * kMargin + kStep * static_cast<int>(columns - 1) + 10;
  for (std::uint32_t i = 0; i < drawn_circles; ++i) {
    out << "    <circle cx=\"" << cx << "\" cy=\"" << kTop + 10 + 14 * static_cast<int>(i)
        << "\" r=\"5\"/>\n";
  }
  out << "  </g>\n";
  out << "  <g fill=\"black\">\n";
  for (std::uint32_t p = 0; p < d.points(); ++p) {
    out << "    <circle cx=\"" << x_of(p) << "\" cy=\"" << y_of(p) << "\" r=\"3\"/>\n";
  }
  out << "  </g>\n";
  if (d.circles() > 0) {
    out << "  <text x=\"" << cx - 8 << "\" y=\"" << kBottom << "\" font-family=\"monospace\""
        << " font-size=\"12\">o × " << d.circles() << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace adjcalc
