#pragma once

#include <cstdint>

#include "holey/polyomino.hpp"

namespace holey {

enum class Family { S, A, R, R_ext, R_prime };

struct ConstructionParams {
    int k = 0;
    std::int64_t l = 0;  // R_ext only
    std::int64_t n = 0;  // R_prime only
};

// Output of a builder; every builder measures its polyomino with the
// grid-core oracle and throws ContractViolation unless the measured tile
// and hole counts equal the expected ones.
struct ConstructionReport {
    Family family;
    ConstructionParams params;
    Polyomino polyomino;
    std::int64_t expected_tiles;
    std::int64_t expected_holes;
};

// S_1 is the 3x3 box minus its center. S_k is the union of S_{k-1} with its
// three quarter-turn images about the center of the top-right tile of its
// bounding square, minus that pivot tile. n_k tiles, h_k holes, square
// bounding box of side 2^k + 1. k in [1, 12].
ConstructionReport build_S(int k);

// A_k = S_k minus the leftmost tile of its top row: n_k - 1 tiles, h_k holes.
ConstructionReport build_A(int k);

// Rectangle family: 40k^2 + 20k tiles enclosing exactly 20k^2 single-cell
// holes, with a right-edge domino interface for build_R_ext. k in [1, 60].
ConstructionReport build_R(int k);

// Extension capacity of R_k: the first l tiles of the fixed gap-filling
// sequence may be added for any 0 <= l <= 2k(2k-1).
std::int64_t extension_capacity(int k);

// R_{k,l}: R_k plus the first l extension tiles; 40k^2 + 20k + l tiles and
// 20k^2 + floor(l/2) holes. Prefixes nest: cells(R_{k,l}) subset of
// cells(R_{k,l+1}), and every prefix is connected.
ConstructionReport build_R_ext(int k, std::int64_t l);

// m_k = 40k^2 + 20k.
std::int64_t mk(std::int64_t k);
// t_k = 20k^2.
std::int64_t tk(std::int64_t k);

// R'_n = R_{k,l} with k maximal such that m_k <= n and l = n - m_k.
// Defined for n >= m_42 = 71400.
ConstructionReport build_R_prime(std::int64_t n);

}  // namespace holey
