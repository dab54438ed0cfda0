#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace holey {

// One unit square on the integer lattice, addressed by its lower-left corner.
struct Cell {
    std::int32_t x = 0;
    std::int32_t y = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    // Canonical order: ascending by y, then x.
    friend auto operator<=>(const Cell& a, const Cell& b) {
        if (a.y != b.y) return a.y <=> b.y;
        return a.x <=> b.x;
    }
};

// A finite edge-connected set of cells, stored translation-normalized
// (min x = 0, min y = 0) and sorted in canonical order. Immutable.
class Polyomino {
public:
    // Validates, normalizes and sorts. Throws Error with kind EmptyInput,
    // DuplicateCell or Disconnected.
    static Polyomino from_cells(std::vector<Cell> cells);

    // Skips the connectivity check; the cells must already form a valid
    // polyomino (in any translate). For internal producers whose output is
    // connected by construction.
    static Polyomino from_cells_unchecked(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::int64_t size() const { return static_cast<std::int64_t>(cells_.size()); }

    // Bounding box; min corner is (0, 0) by normalization.
    std::int32_t width() const { return width_; }
    std::int32_t height() const { return height_; }

    bool contains(Cell c) const;

    friend bool operator==(const Polyomino& a, const Polyomino& b) {
        return a.cells_ == b.cells_;
    }

private:
    Polyomino() = default;
    void normalize_sorted();

    std::vector<Cell> cells_;
    std::int32_t width_ = 0;
    std::int32_t height_ = 0;
};

// True iff the cell set is 4-connected (edge-connected dual graph). The
// input must be free of duplicates.
bool cells_connected(std::span<const Cell> cells);

}  // namespace holey
