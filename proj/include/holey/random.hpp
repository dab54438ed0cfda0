#pragma once

#include <cstdint>

#include "holey/polyomino.hpp"

namespace holey {

// Deterministic random n-omino grown by uniform boundary-cell additions.
// Same (n, seed) always yields the same polyomino, on every platform.
Polyomino random_polyomino(std::int64_t n, std::uint64_t seed);

}  // namespace holey
