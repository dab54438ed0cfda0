#include <doctest.h>

#include <cmath>

#include "holey/bounds.hpp"
#include "holey/error.hpp"

using namespace holey;

TEST_CASE("isqrt is exact near squares") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    for (std::uint64_t r = 1; r <= 100000; r += 997) {
        CHECK(isqrt(r * r) == r);
        CHECK(isqrt(r * r - 1) == r - 1);
        CHECK(isqrt(r * r + 1) == r);
    }
    // Values near 2^63 where a double round-trip would be off by one.
    std::uint64_t big = 3037000499ull;  // floor(sqrt(2^63 - 1))
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big + 2 * big) == big);
}

TEST_CASE("minimum perimeter values") {
    CHECK(p_min(1) == 4);
    CHECK(p_min(2) == 6);
    CHECK(p_min(3) == 8);
    CHECK(p_min(4) == 8);
    CHECK(p_min(5) == 10);
    CHECK(p_min(9) == 12);
    CHECK(p_min(10) == 14);
    CHECK(p_min(100) == 40);
    for (std::int64_t n = 1; n <= 5000; ++n) {
        std::int64_t expect = 2 * static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(double(n))));
        CHECK(p_min(n) == expect);
    }
}

TEST_CASE("b_min and p_max_upper") {
    CHECK(b_min(1) == 0);
    CHECK(b_min(7) == 6);
    CHECK(p_max_upper(1) == 4);
    CHECK(p_max_upper(7) == 16);
    for (std::int64_t n = 1; n <= 200; ++n) CHECK(4 * n == p_max_upper(n) - 2 + 2 * n);
}

TEST_CASE("n_k and h_k closed forms") {
    CHECK(nk(1) == 8);
    CHECK(nk(2) == 20);
    CHECK(nk(3) == 60);
    CHECK(nk(4) == 204);
    CHECK(nk(5) == 748);
    CHECK(hk(1) == 1);
    CHECK(hk(2) == 5);
    CHECK(hk(3) == 21);
    CHECK(hk(4) == 85);
    CHECK(hk(5) == 341);
    for (int k = 1; k <= 29; ++k) {
        // Recursions: n_{k+1} = 4 n_k - 2^(k+2) - 4, h_{k+1} = 4 h_k + 1.
        CHECK(nk(k + 1) == 4 * nk(k) - (std::int64_t(1) << (k + 2)) - 4);
        CHECK(hk(k + 1) == 4 * hk(k) + 1);
    }
    CHECK_THROWS_AS((void)nk(0), Error);
    CHECK_THROWS_AS((void)nk(31), Error);
}

TEST_CASE("g at h_k") {
    CHECK(g_of_hk(1) == 7);
    CHECK(g_of_hk(2) == 19);
    for (int k = 1; k <= 30; ++k) CHECK(g_of_hk(k) == nk(k) - 1);
}

TEST_CASE("upper bound from a lower bound") {
    // At n_k the bound pinches: feeding in h_k returns h_k, and at n_k - 2
    // it forces strictly below h_k.
    for (int k = 1; k <= 20; ++k) {
        CHECK(ub_from_lb(nk(k), hk(k)) == hk(k));
        CHECK(ub_from_lb(nk(k) - 1, hk(k)) == hk(k));
        // If f(n_k - 2) reached h_k the bound would contradict itself.
        CHECK(ub_from_lb(nk(k) - 2, hk(k)) < hk(k));
    }
    CHECK(ub_from_lb(8, 1) == 1);
    CHECK(ub_from_lb(20, 5) == 5);
    CHECK(ub_from_lb(60, 21) == 21);
}

TEST_CASE("fixed-point upper bound") {
    CHECK(ub_fixed_point(1) == 0);
    CHECK(ub_fixed_point(7) == 1);
    CHECK(ub_fixed_point(8) == 1);
    for (int k = 1; k <= 20; ++k) {
        CHECK(ub_fixed_point(nk(k)) == hk(k));
        CHECK(ub_fixed_point(nk(k) - 1) == hk(k));
        CHECK(ub_fixed_point(nk(k) - 2) == hk(k) - 1);
    }
    for (std::int64_t n = 1; n <= 400; ++n) {
        std::int64_t h = ub_fixed_point(n);
        CHECK(4 * h <= 2 * n + 2 - 2 * ceil_2sqrt(n + h));
        CHECK(4 * (h + 1) > 2 * n + 2 - 2 * ceil_2sqrt(n + h + 1));
        // The fixed point refines the one-shot bound seeded with itself.
        CHECK(h <= ub_from_lb(n, 0));
    }
}

TEST_CASE("exact formula at n_k") {
    for (int k = 1; k <= 25; ++k) {
        auto v = exact_formula_exact(nk(k));
        REQUIRE(v.has_value());
        CHECK(*v == hk(k));
        CHECK(exact_formula(nk(k)) == doctest::Approx(double(hk(k))).epsilon(1e-9));
    }
    CHECK_FALSE(exact_formula_exact(9).has_value());
    CHECK(exact_formula(100) == doctest::Approx(50.0 - std::sqrt(150.25) + 0.5));
}

TEST_CASE("theorem 1 values recompute from constructions") {
    for (int k = 1; k <= 6; ++k) {
        Theorem1Values t = theorem1_values(k);
        CHECK(t.f_at_nk == hk(k));
        CHECK(t.f_at_nk_minus_1 == hk(k));
        CHECK(t.f_at_nk_minus_2 == hk(k) - 1);
    }
}

TEST_CASE("theorem 2 sandwich at the domain edge") {
    double c1 = std::sqrt(2.5) + 0.01;
    double c2 = std::sqrt(1.5) - 0.01;
    Theorem2Check t = theorem2_check(71400, c1, c2);
    CHECK(t.lb_construction == 35280);
    CHECK(t.holds);
    CHECK(t.lower <= double(t.lb_construction) + kRealSlack);
    CHECK(double(t.ub) <= t.upper + kRealSlack);
    CHECK_THROWS_AS((void)theorem2_check(71399, c1, c2), Error);
    CHECK_THROWS_AS((void)theorem2_check(71400, std::sqrt(2.5), c2), Error);
    CHECK_THROWS_AS((void)theorem2_check(71400, c1, std::sqrt(1.5)), Error);
}

TEST_CASE("bounds report composes the pieces") {
    BoundsReport r = bounds_report(20, 5, false);
    CHECK(r.n == 20);
    CHECK(r.p_min == 18);
    CHECK(r.ub_fixed_point == 5);
    REQUIRE(r.ub_from_lb.has_value());
    CHECK(*r.ub_from_lb == 5);
    CHECK_FALSE(r.lb_construction.has_value());
}
