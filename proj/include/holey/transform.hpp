#pragma once

#include <array>
#include <span>
#include <vector>

#include "holey/polyomino.hpp"

namespace holey {

// The dihedral group of the square lattice.
enum class Symmetry {
    Identity,
    Rot90,   // counterclockwise quarter turn
    Rot180,
    Rot270,
    FlipX,     // mirror across a vertical axis
    FlipY,     // mirror across a horizontal axis
    FlipDiag,  // mirror across y = x
    FlipAnti,  // mirror across y = -x
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::Identity, Symmetry::Rot90,  Symmetry::Rot180,   Symmetry::Rot270,
    Symmetry::FlipX,    Symmetry::FlipY,  Symmetry::FlipDiag, Symmetry::FlipAnti,
};

// Image of the polyomino under g, re-normalized. All metrics are invariant.
Polyomino transform(const Polyomino& p, Symmetry g);

// Rotates cells by quarter_turns * 90 degrees counterclockwise about the
// center of the pivot cell. Keeps absolute coordinates (no normalization);
// the pivot cell, if present, maps to itself.
std::vector<Cell> rotate_cells_about_tile_center(std::span<const Cell> cells, Cell pivot,
                                                 int quarter_turns);

// Same rotation on a whole polyomino, returning the normalized value.
Polyomino rotate_about_tile_center(const Polyomino& p, Cell pivot, int quarter_turns);

}  // namespace holey
