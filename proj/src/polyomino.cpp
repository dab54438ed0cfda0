#include "holey/polyomino.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "holey/error.hpp"

namespace holey {

namespace {

std::uint64_t pack(Cell c) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
           static_cast<std::uint32_t>(c.y);
}

}  // namespace

bool cells_connected(std::span<const Cell> cells) {
    if (cells.empty()) return false;
    if (cells.size() == 1) return true;

    std::unordered_set<std::uint64_t> todo;
    todo.reserve(cells.size() * 2);
    for (Cell c : cells) todo.insert(pack(c));

    std::vector<Cell> stack{cells[0]};
    todo.erase(pack(cells[0]));
    std::size_t reached = 1;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        const Cell nbs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (Cell nb : nbs) {
            auto it = todo.find(pack(nb));
            if (it != todo.end()) {
                todo.erase(it);
                stack.push_back(nb);
                ++reached;
            }
        }
    }
    return reached == cells.size();
}

void Polyomino::normalize_sorted() {
    std::int32_t minx = std::numeric_limits<std::int32_t>::max();
    std::int32_t miny = minx;
    std::int32_t maxx = std::numeric_limits<std::int32_t>::min();
    std::int32_t maxy = maxx;
    for (Cell c : cells_) {
        minx = std::min(minx, c.x);
        miny = std::min(miny, c.y);
        maxx = std::max(maxx, c.x);
        maxy = std::max(maxy, c.y);
    }
    for (Cell& c : cells_) {
        c.x -= minx;
        c.y -= miny;
    }
    width_ = maxx - minx + 1;
    height_ = maxy - miny + 1;
}

Polyomino Polyomino::from_cells(std::vector<Cell> cells) {
    if (cells.empty()) throw Error(ErrorKind::EmptyInput, "polyomino must have at least one cell");
    std::sort(cells.begin(), cells.end());
    if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
        throw Error(ErrorKind::DuplicateCell, "duplicate cell in input");
    if (!cells_connected(cells))
        throw Error(ErrorKind::Disconnected, "cells do not form an edge-connected set");
    Polyomino p;
    p.cells_ = std::move(cells);
    p.normalize_sorted();
    return p;
}

Polyomino Polyomino::from_cells_unchecked(std::vector<Cell> cells) {
    if (cells.empty()) throw Error(ErrorKind::EmptyInput, "polyomino must have at least one cell");
    std::sort(cells.begin(), cells.end());
    Polyomino p;
    p.cells_ = std::move(cells);
    p.normalize_sorted();
    return p;
}

bool Polyomino::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

}  // namespace holey
