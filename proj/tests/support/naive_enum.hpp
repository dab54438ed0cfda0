#pragma once

#include <cstdint>
#include <vector>

#include "holey/polyomino.hpp"

namespace holey::testsupport {

// Naive fixed-polyomino generator: grow every (n-1)-omino by every boundary
// cell and deduplicate normalized forms in a set. Exponential in memory,
// fine up to n = 10; exists purely as an oracle for the Redelmeier path.
std::vector<Polyomino> naive_enumerate_fixed(int n);

std::int64_t naive_count_fixed(int n);

}  // namespace holey::testsupport
