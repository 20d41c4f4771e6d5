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

// Temperley-Lieb diagram semantics.
//
// A diagram with src top points T1..Tsrc and tgt bottom points B1..Btgt is a
// perfect matching of those points, non-crossing when the boundary is read
// cyclically as T1..Tsrc, Btgt..B1, together with a count of free circles.
// Terms are interpreted with the outermost L as the leftmost strand:
//
//   1[n]   n through strands
//   phi[n] cap on T1-T2, then T(i+2)-Bi
//   gam[n] cup on B1-B2, then Ti-B(i+2)
//   L f    extra strand T1-B1 on the left of f
//   f . g  g stacked above f; loops closed by the gluing become circles
//
// Involutive terms are interpreted through functor_FS.

#ifndef ADJCALC_DIAGRAMS_HPP_
#define ADJCALC_DIAGRAMS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adjcalc/term.hpp"

namespace adjcalc {

enum class CircleMode : std::uint8_t {
  Count,  // circles are part of the value
  Drop,   // circles are erased after every construction step
};

class TLDiagram {
 public:
  /// Boundary points are numbered T1..Tsrc as 0..src-1, then B1..Btgt as
  /// src..src+tgt-1; `partner[p]` is the point matched with p. Throws
  /// std::invalid_argument unless the matching is perfect and planar.
  TLDiagram(Obj src, Obj tgt, std::vector<std::uint32_t> partner,
            std::uint32_t circles);

  static TLDiagram identity(Obj n);

  Obj src() const { return src_; }
  Obj tgt() const { return tgt_; }
  std::uint32_t circles() const { return circles_; }
  std::uint32_t points() const { return src_ + tgt_; }
  std::uint32_t partner(std::uint32_t p) const { return partner_[p]; }
  const std::vector<std::uint32_t>& matching() const { return partner_; }

  bool is_top(std::uint32_t p) const { return p < src_; }
  /// "T3" / "B1" style label of a point.
  std::string label(std::uint32_t p) const;

  /// Pairs (a, b) with a < b in canonical numbering, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

  TLDiagram without_circles() const;

  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;

 private:
  Obj src_;
  Obj tgt_;
  std::vector<std::uint32_t> partner_;
  std::uint32_t circles_;
};

/// True when `partner` is a fixed-point-free involution on src+tgt points
/// that does not cross in the cyclic order T1..Tsrc, Btgt..B1.
bool is_planar_matching(Obj src, Obj tgt, const std::vector<std::uint32_t>& partner);

TLDiagram phi_diagram(Obj n);
TLDiagram gamma_diagram(Obj n);

/// d_g stacked above d_f, i.e. the diagram of f . g. Throws
/// BoundaryMismatch unless tgt(d_g) == src(d_f).
TLDiagram compose(const TLDiagram& d_f, const TLDiagram& d_g);

/// Adds a leftmost through strand.
TLDiagram l_shift(const TLDiagram& d);

TLDiagram interp(Signature sig, const Term& t, CircleMode mode);

bool diagram_eq(const TLDiagram& a, const TLDiagram& b, CircleMode mode);

/// {"src": n, "tgt": m, "pairs": [["T1","T2"], ...], "circles": k}
std::string to_json(const TLDiagram& d);

std::string render_ascii(const TLDiagram& d);
std::string render_svg(const TLDiagram& d);

}  // namespace adjcalc

#endif  // ADJCALC_DIAGRAMS_HPP_
