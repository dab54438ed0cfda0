#include "holey/bounds.hpp"

#include <cmath>
#include <string>

#include "holey/constructions.hpp"
#include "holey/error.hpp"
#include "holey/metrics.hpp"

namespace holey {

std::uint64_t isqrt(std::uint64_t v) {
    if (v == 0) return 0;
    // Float seed, then exact adjustment; sqrt(double) alone is wrong near
    // perfect squares for large v.
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r > v / r) --r;
    while ((r + 1) <= v / (r + 1)) ++r;
    return r;
}

std::int64_t ceil_2sqrt(std::int64_t n) {
    // smallest c with c^2 >= 4n
    auto v = static_cast<std::uint64_t>(4 * n);
    auto r = static_cast<std::int64_t>(isqrt(v));
    return (static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(r) == v) ? r : r + 1;
}

std::int64_t p_min(std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::PreconditionViolation, "p_min: n must be >= 1");
    return 2 * ceil_2sqrt(n);
}

std::int64_t b_min(std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::PreconditionViolation, "b_min: n must be >= 1");
    return n - 1;
}

std::int64_t p_max_upper(std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::PreconditionViolation, "p_max_upper: n must be >= 1");
    return 2 * n + 2;
}

std::int64_t ub_from_lb(std::int64_t n, std::int64_t lb) {
    if (n < 1 || lb < 0)
        throw Error(ErrorKind::PreconditionViolation, "ub_from_lb: need n >= 1, lb >= 0");
    // floor((n + 1 - ceil(2 sqrt(n + lb))) / 2), with floor toward -inf.
    std::int64_t num = n + 1 - ceil_2sqrt(n + lb);
    return num >= 0 ? num / 2 : -((-num + 1) / 2);
}

std::int64_t ub_fixed_point(std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::PreconditionViolation, "ub_fixed_point: n must be >= 1");
    for (std::int64_t h = std::min(n, (2 * n + 2) / 4); h >= 0; --h) {
        if (4 * h <= 2 * n + 2 - 2 * ceil_2sqrt(n + h)) return h;
    }
    throw Error(ErrorKind::InternalInvariant, "ub_fixed_point: no h >= 0 satisfies the bound");
}

std::int64_t nk(int k) {
    if (k < 1 || k > 30) throw Error(ErrorKind::PreconditionViolation, "nk: k must be in [1, 30]");
    return ((1ll << (2 * k + 1)) + 3 * (1ll << (k + 1)) + 4) / 3;
}

std::int64_t hk(int k) {
    if (k < 1 || k > 30) throw Error(ErrorKind::PreconditionViolation, "hk: k must be in [1, 30]");
    return ((1ll << (2 * k)) - 1) / 3;
}

std::int64_t g_of_hk(int k) { return nk(k) - 1; }

double exact_formula(std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::PreconditionViolation, "exact_formula: n must be >= 1");
    return 0.5 * static_cast<double>(n) - std::sqrt(1.5 * static_cast<double>(n) + 0.25) + 0.5;
}

std::optional<std::int64_t> exact_formula_exact(std::int64_t n) {
    if (n < 1) return std::nullopt;
    // sqrt(3n/2 + 1/4) = s/2 with s = sqrt(6n + 1) when that root is an
    // integer; then the formula value is (n + 1 - s) / 2.
    auto v = static_cast<std::uint64_t>(6 * n + 1);
    std::uint64_t s = isqrt(v);
    if (s * s != v) return std::nullopt;
    std::int64_t num = n + 1 - static_cast<std::int64_t>(s);
    if (num % 2 != 0) return std::nullopt;
    return num / 2;
}

Theorem1Values theorem1_values(int k) {
    if (k < 1) throw Error(ErrorKind::PreconditionViolation, "theorem1_values: k must be >= 1");
    const std::int64_t n_k = nk(k), h_k = hk(k);

    // f(n_k) = h_k: S_k supplies the lower bound, the corollary pinches it.
    MetricsReport s = metrics(build_S(k).polyomino);
    if (s.n != n_k || s.holes != h_k)
        throw Error(ErrorKind::ConsistencyFailure, "theorem1_values: S_k does not match (n_k, h_k)");
    if (ub_from_lb(n_k, s.holes) != h_k)
        throw Error(ErrorKind::ConsistencyFailure, "theorem1_values: ub_from_lb(n_k, h_k) != h_k");

    // f(n_k - 1) = h_k: A_k supplies h_k holes at n_k - 1 tiles and
    // monotonicity caps it by f(n_k).
    MetricsReport a = metrics(build_A(k).polyomino);
    if (a.n != n_k - 1 || a.holes != h_k)
        throw Error(ErrorKind::ConsistencyFailure, "theorem1_values: A_k does not match (n_k - 1, h_k)");

    // f(n_k - 2) = h_k - 1: were it h_k, the corollary would bound it below
    // h_k; the step lemma then forces h_k - 1.
    if (!(ub_from_lb(n_k - 2, h_k) < h_k))
        throw Error(ErrorKind::ConsistencyFailure, "theorem1_values: ub_from_lb(n_k - 2, h_k) not < h_k");

    return {h_k, h_k, h_k - 1};
}

Theorem2Check theorem2_check(std::int64_t n, double c1, double c2) {
    if (!(c1 > std::sqrt(2.5)))
        throw Error(ErrorKind::PreconditionViolation, "theorem2_check: need C1 > sqrt(5/2)");
    if (!(c2 < std::sqrt(1.5)))
        throw Error(ErrorKind::PreconditionViolation, "theorem2_check: need C2 < sqrt(3/2)");

    ConstructionReport rp = build_R_prime(n);
    auto [hole_count, comps] = holes(rp.polyomino);

    Theorem2Check out;
    out.lb_construction = hole_count;
    out.ub = ub_from_lb(n, hole_count);
    const double sqn = std::sqrt(static_cast<double>(n));
    out.lower = 0.5 * static_cast<double>(n) - c1 * sqn;
    out.upper = 0.5 * static_cast<double>(n) - c2 * sqn;
    out.holds = (out.lower <= static_cast<double>(out.lb_construction) + kRealSlack) &&
                (static_cast<double>(out.ub) <= out.upper + kRealSlack);
    return out;
}

BoundsReport bounds_report(std::int64_t n, std::optional<std::int64_t> lb,
                           bool with_construction) {
    BoundsReport r{.n = n,
                   .p_min = p_min(n),
                   .ub_from_lb = std::nullopt,
                   .ub_fixed_point = ub_fixed_point(n),
                   .lb_construction = std::nullopt,
                   .exact_formula_value = exact_formula(n)};
    if (with_construction && n >= mk(42)) {
        r.lb_construction = holes(build_R_prime(n).polyomino).first;
        if (!lb) lb = r.lb_construction;
    }
    if (lb) r.ub_from_lb = ub_from_lb(n, *lb);
    return r;
}

}  // namespace holey
