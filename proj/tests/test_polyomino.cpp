#include <doctest.h>

#include "holey/error.hpp"
#include "holey/polyomino.hpp"

using namespace holey;

namespace {

std::vector<Cell> box3_minus_center() {
    std::vector<Cell> cells;
    for (std::int32_t y = 0; y <= 2; ++y)
        for (std::int32_t x = 0; x <= 2; ++x)
            if (!(x == 1 && y == 1)) cells.push_back({x, y});
    return cells;
}

}  // namespace

TEST_CASE("single cell normalizes by translation") {
    Polyomino p = Polyomino::from_cells({{5, 5}});
    CHECK(p.cells() == std::vector<Cell>{{0, 0}});
    CHECK(p.width() == 1);
    CHECK(p.height() == 1);
}

TEST_CASE("cells sharing no edge are rejected") {
    CHECK_THROWS_WITH_AS(Polyomino::from_cells({{0, 0}, {2, 0}}), doctest::Contains("connected"),
                         Error);
    try {
        Polyomino::from_cells({{0, 0}, {1, 1}});
        FAIL("diagonal contact is not edge contact");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Disconnected);
    }
}

TEST_CASE("empty and duplicate inputs are rejected") {
    try {
        Polyomino::from_cells({});
        FAIL("expected EmptyInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyInput);
    }
    try {
        Polyomino::from_cells({{0, 0}, {1, 0}, {0, 0}});
        FAIL("expected DuplicateCell");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DuplicateCell);
    }
}

TEST_CASE("3x3 box minus center is a valid 8-omino") {
    Polyomino p = Polyomino::from_cells(box3_minus_center());
    CHECK(p.size() == 8);
    CHECK(p.width() == 3);
    CHECK(p.height() == 3);
}

TEST_CASE("canonical order is ascending (y, x)") {
    Polyomino p = Polyomino::from_cells({{1, 1}, {0, 1}, {0, 0}});
    CHECK(p.cells() == std::vector<Cell>{{0, 0}, {0, 1}, {1, 1}});
}
