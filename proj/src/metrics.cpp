#include "holey/metrics.hpp"

#include <algorithm>

#include "holey/error.hpp"

namespace holey {

Raster::Raster(const Polyomino& p) : w_(p.width() + 2), h_(p.height() + 2) {
    occ_.assign(static_cast<std::size_t>(w_) * h_, 0);
    for (Cell c : p.cells())
        occ_[static_cast<std::size_t>(c.y + 1) * w_ + (c.x + 1)] = 1;
}

std::pair<std::int64_t, std::vector<std::vector<Cell>>> holes(const Polyomino& p) {
    const Raster r(p);
    const std::int32_t w = r.w(), h = r.h();

    // 0 = empty, 1 = tile, 2 = empty reachable from the padding ring,
    // 3 = assigned to a hole component.
    std::vector<std::uint8_t> state(static_cast<std::size_t>(w) * h, 0);
    for (std::int32_t y = 0; y < h; ++y)
        for (std::int32_t x = 0; x < w; ++x)
            if (r.occupied(x, y)) state[static_cast<std::size_t>(y) * w + x] = 1;

    auto at = [&](std::int32_t x, std::int32_t y) -> std::uint8_t& {
        return state[static_cast<std::size_t>(y) * w + x];
    };

    std::vector<std::pair<std::int32_t, std::int32_t>> stack;
    auto flood = [&](std::int32_t sx, std::int32_t sy, std::uint8_t mark,
                     std::vector<Cell>* out) {
        at(sx, sy) = mark;
        stack.push_back({sx, sy});
        while (!stack.empty()) {
            auto [x, y] = stack.back();
            stack.pop_back();
            if (out) out->push_back({x - 1, y - 1});
            const std::int32_t nb[4][2] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
            for (auto [nx, ny] : nb) {
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                if (at(nx, ny) == 0) {
                    at(nx, ny) = mark;
                    stack.push_back({nx, ny});
                }
            }
        }
    };

    // The padding ring is all empty and 4-connected around the box.
    flood(0, 0, 2, nullptr);

    std::vector<std::vector<Cell>> components;
    for (std::int32_t y = 1; y < h - 1; ++y) {
        for (std::int32_t x = 1; x < w - 1; ++x) {
            if (at(x, y) == 0) {
                std::vector<Cell> comp;
                flood(x, y, 3, &comp);
                std::sort(comp.begin(), comp.end());
                components.push_back(std::move(comp));
            }
        }
    }
    return {static_cast<std::int64_t>(components.size()), std::move(components)};
}

MetricsReport metrics(const Polyomino& p) {
    MetricsReport m;
    m.n = p.size();
    m.bbox_w = p.width();
    m.bbox_h = p.height();

    const Raster r(p);
    for (Cell c : p.cells()) {
        const std::int32_t x = c.x + 1, y = c.y + 1;
        int occupied_nb = r.occupied(x + 1, y) + r.occupied(x - 1, y) +
                          r.occupied(x, y + 1) + r.occupied(x, y - 1);
        m.p += 4 - occupied_nb;
        m.b += occupied_nb;  // each shared edge seen from both sides
    }
    m.b /= 2;

    auto [count, comps] = holes(p);
    m.holes = count;
    // p_h: perimeter edges whose empty side is a hole cell.
    for (const auto& comp : comps) {
        for (Cell c : comp) {
            const std::int32_t x = c.x + 1, y = c.y + 1;
            m.p_h += r.occupied(x + 1, y) + r.occupied(x - 1, y) +
                     r.occupied(x, y + 1) + r.occupied(x, y - 1);
        }
    }
    m.hole_components = std::move(comps);
    m.p_o = m.p - m.p_h;

    if (4 * m.n != m.p + 2 * m.b)
        throw Error(ErrorKind::InternalInvariant, "4n = p + 2b violated");
    return m;
}

}  // namespace holey
