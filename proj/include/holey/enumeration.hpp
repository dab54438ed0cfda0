#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "holey/polyomino.hpp"

namespace holey {

// ~1.5e9 fixed 18-ominoes; anything larger is not desk scale.
inline constexpr int kEnumerationHardCap = 18;

struct CensusRow {
    int n = 0;
    std::int64_t total = 0;
    // counts_by_holes[h] = number of fixed n-ominoes with exactly h holes.
    std::vector<std::int64_t> counts_by_holes;
    std::int64_t f = 0;  // max hole count attained
    std::int64_t min_perimeter = 0;
};

struct EnumerationTable {
    int max_n = 0;
    std::vector<CensusRow> per_n;  // per_n[i] is the row for n = i + 1
};

// Visits every translation-inequivalent n-omino exactly once (Redelmeier),
// in a fixed deterministic order; returns the total count.
std::int64_t enumerate_fixed(int n, const std::function<void(const Polyomino&)>& visitor);

// Full census for 1 <= n <= max_n: totals, counts by hole number, f(n) and
// minimum perimeter. Work is sharded by the first two placement decisions
// of the search tree; results are identical for any worker count.
EnumerationTable census(int max_n, int workers = 1);

struct GTable {
    std::map<int, std::int64_t> per_m;  // m -> g(m)
};

// g(m) = least n with f(n) >= m, extracted from a census table. Throws
// InsufficientCensus if f never reaches max_m within the table.
GTable g_table(int max_m, const EnumerationTable& table);

struct SearchOptions {
    std::uint64_t node_budget = 1'000'000'000;
    // The optimistic completion bound (holes + remaining/2 + 1) is a
    // heuristic relaxation; disable for the strictly sound exhaustive scan.
    bool prune = true;
};

struct SearchResult {
    std::int64_t g = 0;
    Polyomino witness;
    std::int64_t witness_holes = 0;
    std::uint64_t nodes_visited = 0;
};

// Least n admitting an n-omino with m holes, by branch-and-bound upward
// from the first n with ub_fixed_point(n) >= m. Returns a witness.
SearchResult search_g(int m, const SearchOptions& opts = {});

}  // namespace holey
