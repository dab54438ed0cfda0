#pragma once

#include <cstdint>

#include "holey/polyomino.hpp"

namespace holey::testsupport {

// Independent hole counter: union-find over 4-adjacent empty cells of the
// padded bounding box, then count classes not joined to the padding ring.
// Deliberately shares no code with the flood-fill path it cross-checks.
std::int64_t holes_by_union_find(const Polyomino& p);

}  // namespace holey::testsupport
