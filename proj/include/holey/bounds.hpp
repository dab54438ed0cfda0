#pragma once

#include <cstdint>
#include <optional>

namespace holey {

// floor(sqrt(v)), exact.
std::uint64_t isqrt(std::uint64_t v);

// ceil(2*sqrt(n)), exact integer arithmetic.
std::int64_t ceil_2sqrt(std::int64_t n);

// Minimum perimeter of an n-omino: 2*ceil(2*sqrt(n)).
std::int64_t p_min(std::int64_t n);

// Minimum shared-edge count: n - 1 (spanning tree of the dual graph).
std::int64_t b_min(std::int64_t n);

// Upper bound on the maximum perimeter: 2n + 2.
std::int64_t p_max_upper(std::int64_t n);

// Given any lower bound lb <= f(n), a valid upper bound on f(n):
// floor(n/2 - ceil(2*sqrt(n + lb))/2 + 1/2).
std::int64_t ub_from_lb(std::int64_t n, std::int64_t lb);

// Largest h in [0, n] with 4h <= 2n + 2 - 2*ceil(2*sqrt(n + h)); the right
// side is nonincreasing in h, so this is the self-consistent bound on f(n).
std::int64_t ub_fixed_point(std::int64_t n);

// n_k = (2^(2k+1) + 3*2^(k+1) + 4) / 3 and h_k = (2^(2k) - 1) / 3;
// both divisions are exact. k in [1, 30].
std::int64_t nk(int k);
std::int64_t hk(int k);

// g(h_k) = n_k - 1.
std::int64_t g_of_hk(int k);

// n/2 - sqrt(3n/2 + 1/4) + 1/2, the value f attains infinitely often.
double exact_formula(std::int64_t n);

// Exact-arithmetic evaluation of the same expression: defined whenever
// 6n + 1 is a perfect square (in particular at every n_k), where the result
// is the integer (n + 1 - sqrt(6n + 1)) / 2.
std::optional<std::int64_t> exact_formula_exact(std::int64_t n);

struct Theorem1Values {
    std::int64_t f_at_nk;
    std::int64_t f_at_nk_minus_1;
    std::int64_t f_at_nk_minus_2;
};

// (h_k, h_k, h_k - 1), recomputed from first principles: S_k and A_k are
// built and measured, and the upper-bound corollary is checked to pinch
// each value. Throws ConsistencyFailure if any recomputation disagrees.
Theorem1Values theorem1_values(int k);

struct Theorem2Check {
    double lower;                    // n/2 - C1*sqrt(n)
    double upper;                    // n/2 - C2*sqrt(n)
    std::int64_t lb_construction;    // holes of R'_n, oracle-measured
    std::int64_t ub;                 // ub_from_lb(n, lb_construction)
    bool holds;
};

// Evaluates both sides of the Theorem 2 sandwich at one n. Preconditions:
// n >= m_42 = 71400, C1 > sqrt(5/2), C2 < sqrt(3/2) (strict).
Theorem2Check theorem2_check(std::int64_t n, double c1, double c2);

struct BoundsReport {
    std::int64_t n;
    std::int64_t p_min;
    std::optional<std::int64_t> ub_from_lb;
    std::int64_t ub_fixed_point;
    std::optional<std::int64_t> lb_construction;
    double exact_formula_value;
};

// Everything the `bounds` CLI command prints. lb_construction is filled
// only when n is in the R'_n domain and with_construction is set.
BoundsReport bounds_report(std::int64_t n, std::optional<std::int64_t> lb,
                           bool with_construction);

// Comparison slack for the real-valued Theorem 2 checks.
inline constexpr double kRealSlack = 1e-9;

}  // namespace holey
