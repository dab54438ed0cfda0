#include <doctest.h>

#include <set>

#include "holey/bounds.hpp"
#include "holey/enumeration.hpp"
#include "holey/error.hpp"
#include "holey/metrics.hpp"
#include "support/naive_enum.hpp"

using namespace holey;

namespace {

// Fixed polyomino counts, n = 1..14 (OEIS A001168).
constexpr std::int64_t kFixedCounts[] = {1,    2,     6,     19,     63,     216,     760,
                                         2725, 9910,  36446, 135268, 505861, 1903890, 7204874};

}  // namespace

TEST_CASE("enumerate_fixed counts match the naive fixed-point enumerator") {
    for (int n = 1; n <= 9; ++n) {
        std::int64_t count = enumerate_fixed(n, [](const Polyomino&) {});
        CHECK(count == testsupport::naive_count_fixed(n));
        CHECK(count == kFixedCounts[n - 1]);
    }
}

TEST_CASE("enumerate_fixed visits each n-omino exactly once, normalized") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<Cell>> seen;
        std::int64_t count = enumerate_fixed(n, [&](const Polyomino& p) {
            CHECK(static_cast<int>(p.size()) == n);
            std::vector<Cell> key(p.cells().begin(), p.cells().end());
            CHECK(seen.insert(std::move(key)).second);
        });
        CHECK(static_cast<std::int64_t>(seen.size()) == count);
        std::set<std::vector<Cell>> expected;
        for (const Polyomino& p : testsupport::naive_enumerate_fixed(n))
            expected.insert({p.cells().begin(), p.cells().end()});
        const bool matches_naive = seen == expected;
        CHECK(matches_naive);
    }
}

TEST_CASE("enumerate_fixed rejects out-of-range sizes") {
    CHECK_THROWS_AS((void)enumerate_fixed(0, [](const Polyomino&) {}), Error);
    CHECK_THROWS_AS((void)enumerate_fixed(kEnumerationHardCap + 1, [](const Polyomino&) {}),
                    Error);
}

TEST_CASE("census rows agree with direct measurement") {
    EnumerationTable table = census(8);
    REQUIRE(table.per_n.size() == 8);
    for (int n = 1; n <= 8; ++n) {
        const CensusRow& row = table.per_n[n - 1];
        CHECK(row.n == n);
        CHECK(row.total == kFixedCounts[n - 1]);

        std::vector<std::int64_t> by_holes;
        std::int64_t best_p = 1 << 20;
        enumerate_fixed(n, [&](const Polyomino& p) {
            MetricsReport m = metrics(p);
            if (static_cast<std::int64_t>(by_holes.size()) <= m.holes)
                by_holes.resize(m.holes + 1, 0);
            ++by_holes[m.holes];
            best_p = std::min(best_p, m.p);
        });
        CHECK(row.counts_by_holes == by_holes);
        CHECK(row.f == static_cast<std::int64_t>(by_holes.size()) - 1);
        CHECK(row.min_perimeter == best_p);
        CHECK(row.min_perimeter == p_min(n));
    }
}

TEST_CASE("hole census small values") {
    EnumerationTable table = census(9);
    // f(n) = 0 for n <= 6, 1 from n = 7.
    for (int n = 1; n <= 6; ++n) CHECK(table.per_n[n - 1].f == 0);
    CHECK(table.per_n[6].f == 1);
    CHECK(table.per_n[7].f == 1);
    CHECK(table.per_n[8].f == 1);
    // One free 7-omino has a hole (the ring minus a corner); its diagonal
    // symmetry leaves 4 fixed orientations.
    CHECK(table.per_n[6].counts_by_holes[1] == 4);
}

TEST_CASE("census is identical for any worker count") {
    EnumerationTable serial = census(9, 1);
    for (int workers : {2, 3, 7}) {
        EnumerationTable par = census(9, workers);
        REQUIRE(par.per_n.size() == serial.per_n.size());
        for (std::size_t i = 0; i < serial.per_n.size(); ++i) {
            CHECK(par.per_n[i].total == serial.per_n[i].total);
            CHECK(par.per_n[i].counts_by_holes == serial.per_n[i].counts_by_holes);
            CHECK(par.per_n[i].f == serial.per_n[i].f);
            CHECK(par.per_n[i].min_perimeter == serial.per_n[i].min_perimeter);
        }
    }
}

TEST_CASE("g table from census") {
    EnumerationTable table = census(11);
    GTable g = g_table(1, table);
    CHECK(g.per_m.at(1) == 7);
    CHECK(g_table(2, table).per_m.at(2) == 11);
    EnumerationTable shallow = census(10);
    CHECK_THROWS_AS((void)g_table(2, shallow), Error);  // f(10) = 1 < 2
}

TEST_CASE("search_g matches the census for small m") {
    EnumerationTable table = census(11);
    SearchResult r1 = search_g(1);
    CHECK(r1.g == 7);
    CHECK(r1.witness_holes >= 1);
    CHECK(r1.witness.size() == 7);
    CHECK(holes(r1.witness).first == r1.witness_holes);
    CHECK(r1.g == g_table(1, table).per_m.at(1));

    SearchResult r2 = search_g(2);
    CHECK(r2.g == 11);
    CHECK(r2.witness.size() == 11);
    CHECK(holes(r2.witness).first >= 2);

    // The pruned and exhaustive searches agree.
    SearchOptions noprune;
    noprune.prune = false;
    CHECK(search_g(2, noprune).g == 11);
}

TEST_CASE("search_g honors the node budget") {
    SearchOptions tiny;
    tiny.node_budget = 10;
    CHECK_THROWS_AS((void)search_g(3, tiny), Error);
}
