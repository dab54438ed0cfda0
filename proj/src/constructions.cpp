#include "holey/constructions.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "holey/bounds.hpp"
#include "holey/error.hpp"
#include "holey/metrics.hpp"
#include "holey/transform.hpp"

namespace holey {

namespace {

std::uint64_t pack(Cell c) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
           static_cast<std::uint32_t>(c.y);
}

ConstructionReport checked(Family family, ConstructionParams params, std::vector<Cell> cells,
                           std::int64_t expected_tiles, std::int64_t expected_holes,
                           const char* name) {
    Polyomino p = Polyomino::from_cells(std::move(cells));  // validates connectivity
    MetricsReport m = metrics(p);
    if (m.n != expected_tiles || m.holes != expected_holes) {
        throw Error(ErrorKind::ContractViolation,
                    std::string(name) + ": built " + std::to_string(m.n) + " tiles / " +
                        std::to_string(m.holes) + " holes, contract says " +
                        std::to_string(expected_tiles) + " / " + std::to_string(expected_holes));
    }
    return {family, params, std::move(p), expected_tiles, expected_holes};
}

// Raw (pre-normalization) cell set of S_k, anchored at (0, 0); the bounding
// square stays [0, 2^k]^2 through the recursion.
std::vector<Cell> raw_S(int k) {
    std::vector<Cell> cells;
    for (std::int32_t y = 0; y <= 2; ++y)
        for (std::int32_t x = 0; x <= 2; ++x)
            if (!(x == 1 && y == 1)) cells.push_back({x, y});

    for (int i = 2; i <= k; ++i) {
        const std::int32_t side = (1 << (i - 1)) + 1;
        const Cell pivot{side - 1, side - 1};
        std::unordered_set<std::uint64_t> seen;
        std::vector<Cell> merged;
        for (int q = 0; q < 4; ++q) {
            for (Cell c : rotate_cells_about_tile_center(cells, pivot, q)) {
                if (seen.insert(pack(c)).second) merged.push_back(c);
            }
        }
        std::erase(merged, pivot);
        cells = std::move(merged);
    }
    return cells;
}

}  // namespace

ConstructionReport build_S(int k) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "build_S: k must be >= 1");
    if (k > 12) throw Error(ErrorKind::CapExceeded, "build_S: k > 12");

    ConstructionReport r =
        checked(Family::S, {.k = k}, raw_S(k), nk(k), hk(k), "build_S");
    const std::int32_t side = (1 << k) + 1;
    if (r.polyomino.width() != side || r.polyomino.height() != side)
        throw Error(ErrorKind::ContractViolation, "build_S: bounding box is not square of side 2^k + 1");
    return r;
}

ConstructionReport build_A(int k) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "build_A: k must be >= 1");
    if (k > 12) throw Error(ErrorKind::CapExceeded, "build_A: k > 12");

    std::vector<Cell> cells = raw_S(k);
    // Leftmost tile of the top row.
    Cell top_left = cells.front();
    for (Cell c : cells) {
        if (c.y > top_left.y || (c.y == top_left.y && c.x < top_left.x)) top_left = c;
    }
    std::erase(cells, top_left);
    return checked(Family::A, {.k = k}, std::move(cells), nk(k) - 1, hk(k), "build_A");
}

std::int64_t mk(std::int64_t k) { return 40 * k * k + 20 * k; }
std::int64_t tk(std::int64_t k) { return 20 * k * k; }

std::int64_t extension_capacity(int k) { return 2ll * k * (2 * k - 1); }

namespace {

// R_k in raw coordinates. The 6k x 10k core [0,10k) x [0,6k) carries the
// period-(2,3) hole pattern (empty iff x even, y = 1 mod 3 or x odd,
// y = 2 mod 3): isolated empty cells, one third of the core, none in the
// bottom row. A top row and a left wall seal the upward and leftward leaks;
// 2k dominoes in column 10k seal the rightmost column and leave the
// staircase interface the extension sequence continues.
std::vector<Cell> raw_R(int k) {
    const std::int32_t W = 10 * k, H = 6 * k;
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(mk(k)));
    for (std::int32_t y = 0; y < H; ++y) {
        for (std::int32_t x = 0; x < W; ++x) {
            const bool empty = (x % 2 == 0) ? (y % 3 == 1) : (y % 3 == 2);
            if (!empty) cells.push_back({x, y});
        }
    }
    for (std::int32_t x = 0; x < W; ++x) cells.push_back({x, H});    // top row
    for (std::int32_t y = 0; y < H; ++y) cells.push_back({-1, y});   // left wall
    for (std::int32_t j = 0; j < 2 * k; ++j) {                       // dominoes
        cells.push_back({W, 3 * j + 2});
        cells.push_back({W, 3 * j + 3});
    }
    return cells;
}

// Fixed gap-filling order. Column c of the staircase (at x = 10k + c)
// holds 2k - c tile pairs; within a pair the sealing tile comes second, so
// every two tiles added close exactly one hole.
std::vector<Cell> extension_sequence(int k) {
    const std::int32_t W = 10 * k;
    std::vector<Cell> seq;
    seq.reserve(static_cast<std::size_t>(extension_capacity(k)));
    for (std::int32_t c = 1; c <= 2 * k - 1; ++c) {
        const std::int32_t d = c + c / 2 - 1;
        for (std::int32_t j = 1; j <= 2 * k - c; ++j) {
            const std::int32_t y_low = 3 * j + d;
            if (c % 2 == 1) {
                seq.push_back({W + c, y_low});      // support
                seq.push_back({W + c, y_low + 1});  // seals one cavity
            } else {
                seq.push_back({W + c, y_low + 1});
                seq.push_back({W + c, y_low});
            }
        }
    }
    return seq;
}

}  // namespace

ConstructionReport build_R(int k) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "build_R: k must be >= 1");
    if (k > 60) throw Error(ErrorKind::CapExceeded, "build_R: k > 60");
    return checked(Family::R, {.k = k}, raw_R(k), mk(k), tk(k), "build_R");
}

ConstructionReport build_R_ext(int k, std::int64_t l) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "build_R_ext: k must be >= 1");
    if (k > 60) throw Error(ErrorKind::CapExceeded, "build_R_ext: k > 60");
    if (l < 0) throw Error(ErrorKind::PreconditionViolation, "build_R_ext: l must be >= 0");
    if (l > extension_capacity(k))
        throw Error(ErrorKind::ExtensionCapacityExceeded,
                    "build_R_ext: l = " + std::to_string(l) + " exceeds capacity " +
                        std::to_string(extension_capacity(k)));

    std::vector<Cell> cells = raw_R(k);
    std::vector<Cell> seq = extension_sequence(k);
    cells.insert(cells.end(), seq.begin(), seq.begin() + l);
    return checked(Family::R_ext, {.k = k, .l = l}, std::move(cells), mk(k) + l,
                   tk(k) + l / 2, "build_R_ext");
}

ConstructionReport build_R_prime(std::int64_t n) {
    if (n < mk(42))
        throw Error(ErrorKind::BelowDomain,
                    "build_R_prime: defined only for n >= " + std::to_string(mk(42)));

    std::int64_t k = 42;
    while (mk(k + 1) <= n) ++k;
    if (k > 60)
        throw Error(ErrorKind::CapExceeded, "build_R_prime: n needs k > 60");

    ConstructionReport inner = build_R_ext(static_cast<int>(k), n - mk(k));
    return {Family::R_prime, {.k = static_cast<int>(k), .l = n - mk(k), .n = n},
            std::move(inner.polyomino), inner.expected_tiles, inner.expected_holes};
}

}  // namespace holey
