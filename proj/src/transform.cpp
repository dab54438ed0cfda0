#include "holey/transform.hpp"

#include "holey/error.hpp"

namespace holey {

namespace {

Cell apply(Symmetry g, Cell c) {
    switch (g) {
        case Symmetry::Identity: return c;
        case Symmetry::Rot90: return {-c.y, c.x};
        case Symmetry::Rot180: return {-c.x, -c.y};
        case Symmetry::Rot270: return {c.y, -c.x};
        case Symmetry::FlipX: return {-c.x, c.y};
        case Symmetry::FlipY: return {c.x, -c.y};
        case Symmetry::FlipDiag: return {c.y, c.x};
        case Symmetry::FlipAnti: return {-c.y, -c.x};
    }
    throw Error(ErrorKind::InternalInvariant, "unknown symmetry");
}

}  // namespace

Polyomino transform(const Polyomino& p, Symmetry g) {
    std::vector<Cell> out;
    out.reserve(p.cells().size());
    for (Cell c : p.cells()) out.push_back(apply(g, c));
    return Polyomino::from_cells_unchecked(std::move(out));
}

std::vector<Cell> rotate_cells_about_tile_center(std::span<const Cell> cells, Cell pivot,
                                                 int quarter_turns) {
    const int q = ((quarter_turns % 4) + 4) % 4;
    std::vector<Cell> out(cells.begin(), cells.end());
    for (Cell& c : out) {
        std::int32_t dx = c.x - pivot.x, dy = c.y - pivot.y;
        for (int i = 0; i < q; ++i) {
            // Quarter turn about a tile center maps lattice cells to lattice
            // cells: (dx, dy) -> (-dy, dx).
            std::int32_t t = dx;
            dx = -dy;
            dy = t;
        }
        c = {pivot.x + dx, pivot.y + dy};
    }
    return out;
}

Polyomino rotate_about_tile_center(const Polyomino& p, Cell pivot, int quarter_turns) {
    return Polyomino::from_cells_unchecked(
        rotate_cells_about_tile_center(p.cells(), pivot, quarter_turns));
}

}  // namespace holey
