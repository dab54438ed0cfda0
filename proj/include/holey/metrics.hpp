#pragma once

#include <cstdint>
#include <vector>

#include "holey/polyomino.hpp"

namespace holey {

// Derived quantities for one polyomino. Always satisfies 4n = p + 2b and
// p = p_o + p_h.
struct MetricsReport {
    std::int64_t n = 0;       // tile count
    std::int64_t holes = 0;   // bounded complement components
    std::vector<std::vector<Cell>> hole_components;  // cells of each hole
    std::int64_t p = 0;    // perimeter edges (tile on exactly one side)
    std::int64_t b = 0;    // edges shared by two tiles
    std::int64_t p_h = 0;  // perimeter edges bounding a hole
    std::int64_t p_o = 0;  // perimeter edges bounding the outside
    std::int32_t bbox_w = 0;
    std::int32_t bbox_h = 0;
};

// Hole cells, grouped by 4-connectivity. Tiles are closed squares, so empty
// cells meeting only at a corner pinched by two tiles belong to distinct
// complement components; 4-connectivity of empty cells captures exactly
// that. Components are reported in canonical cell order.
std::pair<std::int64_t, std::vector<std::vector<Cell>>> holes(const Polyomino& p);

MetricsReport metrics(const Polyomino& p);

// Occupancy raster of the bounding box padded by one empty ring; shared by
// the metric and flood-fill routines. raster coordinates = cell + (1, 1).
class Raster {
public:
    explicit Raster(const Polyomino& p);

    std::int32_t w() const { return w_; }
    std::int32_t h() const { return h_; }
    bool occupied(std::int32_t x, std::int32_t y) const {
        return occ_[static_cast<std::size_t>(y) * w_ + x] != 0;
    }

private:
    std::int32_t w_, h_;
    std::vector<std::uint8_t> occ_;
};

}  // namespace holey
