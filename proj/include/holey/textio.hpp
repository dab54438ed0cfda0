#pragma once

#include <string>

#include "holey/polyomino.hpp"

namespace holey {

// poly-text v1:
//   polyomino v1 <n>
//   <x> <y>          (n lines, canonical order, normalized coordinates)
// LF endings, no trailing blank line.
std::string serialize(const Polyomino& p);

// Strict parser; rejects wrong ordering, non-normalized coordinates and any
// other malformation with ParseError carrying the offending line number.
Polyomino parse(const std::string& text);

// '#' tile, '.' empty, top row (max y) first.
std::string render_ascii(const Polyomino& p);

// One 10x10 rect per tile in canonical cell order, then one line per
// perimeter edge. Byte-stable for equal polyominoes.
std::string render_svg(const Polyomino& p);

}  // namespace holey
