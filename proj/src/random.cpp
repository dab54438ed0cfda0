#include "holey/random.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "holey/error.hpp"

namespace holey {

Polyomino random_polyomino(std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::PreconditionViolation, "n must be >= 1");

    std::mt19937_64 rng(seed);
    auto pack = [](Cell c) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
               static_cast<std::uint32_t>(c.y);
    };

    std::vector<Cell> cells{{0, 0}};
    std::unordered_set<std::uint64_t> occupied{pack({0, 0})};
    // Sorted candidate list keeps the pick independent of hash iteration order.
    std::vector<Cell> candidates{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::sort(candidates.begin(), candidates.end());

    while (static_cast<std::int64_t>(cells.size()) < n) {
        // Plain modulo: bias is irrelevant here, portability is not.
        std::size_t idx = static_cast<std::size_t>(rng() % candidates.size());
        Cell c = candidates[idx];
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(idx));
        cells.push_back(c);
        occupied.insert(pack(c));
        const Cell nbs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (Cell nb : nbs) {
            if (occupied.contains(pack(nb))) continue;
            auto it = std::lower_bound(candidates.begin(), candidates.end(), nb);
            if (it == candidates.end() || !(*it == nb)) candidates.insert(it, nb);
        }
    }
    return Polyomino::from_cells_unchecked(std::move(cells));
}

}  // namespace holey
