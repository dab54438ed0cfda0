// holey: construct, measure and verify hole-maximal polyominoes.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 construction contract violation, 4 domain error, 5 internal invariant
// breach.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "holey/bounds.hpp"
#include "holey/constructions.hpp"
#include "holey/enumeration.hpp"
#include "holey/error.hpp"
#include "holey/metrics.hpp"
#include "holey/random.hpp"
#include "holey/textio.hpp"
#include "holey/transform.hpp"

namespace {

using namespace holey;

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot open output file: " + path);
    out << data;
}

std::string read_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string format_polyomino(const Polyomino& p, const std::string& format) {
    if (format == "poly-text") return serialize(p);
    if (format == "ascii") return render_ascii(p);
    if (format == "svg") return render_svg(p);
    throw CLI::ValidationError("--format", "unknown format " + format);
}

int cmd_construct(const std::string& family, int k, std::int64_t l, std::int64_t n,
                  const std::string& format, const std::string& out) {
    ConstructionReport report = [&] {
        if (family == "s") return build_S(k);
        if (family == "a") return build_A(k);
        if (family == "r") return build_R(k);
        if (family == "rext") return build_R_ext(k, l);
        if (family == "rprime") return build_R_prime(n);
        throw CLI::ValidationError("--family", "unknown family " + family);
    }();
    MetricsReport m = metrics(report.polyomino);
    const bool ok = m.n == report.expected_tiles && m.holes == report.expected_holes;
    std::cerr << "family=" << family << " tiles=" << m.n << " holes=" << m.holes
              << " expected_tiles=" << report.expected_tiles
              << " expected_holes=" << report.expected_holes << ' ' << (ok ? "PASS" : "FAIL")
              << '\n';
    write_output(out, format_polyomino(report.polyomino, format));
    return ok ? 0 : 5;  // builders throw on mismatch; reaching FAIL is a bug
}

int cmd_analyze(const std::string& path) {
    Polyomino p = parse(read_input(path));
    MetricsReport m = metrics(p);
    if (4 * m.n != m.p + 2 * m.b || m.p != m.p_o + m.p_h)
        throw Error(ErrorKind::InternalInvariant, "metric identities violated");
    std::cout << "n=" << m.n << " holes=" << m.holes << " p=" << m.p << " b=" << m.b
              << " p_h=" << m.p_h << " p_o=" << m.p_o << '\n';
    return 0;
}

std::string census_csv(const EnumerationTable& table) {
    std::size_t max_h = 1;
    for (const CensusRow& row : table.per_n)
        max_h = std::max(max_h, row.counts_by_holes.size());
    std::string csv = "n,total";
    for (std::size_t h = 0; h < max_h; ++h) csv += ",holes_" + std::to_string(h);
    csv += ",f,min_perimeter\n";
    for (const CensusRow& row : table.per_n) {
        csv += std::to_string(row.n) + ',' + std::to_string(row.total);
        for (std::size_t h = 0; h < max_h; ++h) {
            csv += ',';
            csv += std::to_string(h < row.counts_by_holes.size() ? row.counts_by_holes[h] : 0);
        }
        csv += ',' + std::to_string(row.f) + ',' + std::to_string(row.min_perimeter) + '\n';
    }
    return csv;
}

int cmd_enumerate(int max_n, int workers, const std::string& out) {
    write_output(out, census_csv(census(max_n, workers)));
    return 0;
}

int cmd_gtable(int max_m, int max_n, bool search, std::uint64_t node_budget,
               const std::string& out) {
    std::string csv = "m,g\n";
    if (search) {
        for (int m = 1; m <= max_m; ++m) {
            SearchResult r = search_g(m, {.node_budget = node_budget, .prune = true});
            csv += std::to_string(m) + ',' + std::to_string(r.g) + '\n';
        }
    } else {
        GTable g = g_table(max_m, census(max_n, static_cast<int>(std::thread::hardware_concurrency())));
        for (auto [m, gv] : g.per_m) csv += std::to_string(m) + ',' + std::to_string(gv) + '\n';
    }
    write_output(out, csv);
    return 0;
}

int cmd_bounds(std::int64_t n, std::optional<std::int64_t> lb, bool construct_lb,
               const std::string& out) {
    BoundsReport r = bounds_report(n, lb, construct_lb);
    std::string csv = "n,p_min,ub_fixed_point,lb_construction,ub_from_lb\n";
    csv += std::to_string(r.n) + ',' + std::to_string(r.p_min) + ',' +
           std::to_string(r.ub_fixed_point) + ',';
    if (r.lb_construction) csv += std::to_string(*r.lb_construction);
    csv += ',';
    if (r.ub_from_lb) csv += std::to_string(*r.ub_from_lb);
    csv += '\n';
    write_output(out, csv);
    return 0;
}

int cmd_render(const std::string& in, const std::string& format, const std::string& out) {
    write_output(out, format_polyomino(parse(read_input(in)), format));
    return 0;
}

struct Verifier {
    int checks = 0, failures = 0;

    void check(const std::string& name, bool ok) {
        ++checks;
        if (!ok) ++failures;
        std::cout << name << ' ' << (ok ? "PASS" : "FAIL") << '\n';
    }
    int finish() const {
        std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures))
                  << " (" << checks << " checks)\n";
        return failures == 0 ? 0 : 1;
    }
};

int verify_theorem1(int k_max) {
    Verifier v;
    for (int k = 1; k <= k_max; ++k) {
        Theorem1Values t = theorem1_values(k);
        v.check("theorem1 k=" + std::to_string(k) + " f(n_k)=h_k", t.f_at_nk == hk(k));
        v.check("theorem1 k=" + std::to_string(k) + " f(n_k-1)=h_k", t.f_at_nk_minus_1 == hk(k));
        v.check("theorem1 k=" + std::to_string(k) + " f(n_k-2)=h_k-1",
                t.f_at_nk_minus_2 == hk(k) - 1);
    }
    return v.finish();
}

int verify_theorem2(std::int64_t n_from, std::int64_t n_to, double c1, double c2) {
    Verifier v;
    for (std::int64_t n = n_from; n <= n_to; ++n) {
        Theorem2Check t = theorem2_check(n, c1, c2);
        v.check("theorem2 n=" + std::to_string(n), t.holds);
    }
    return v.finish();
}

int verify_table1(int m_max, int max_n) {
    Verifier v;
    EnumerationTable table = census(max_n, static_cast<int>(std::thread::hardware_concurrency()));
    GTable g = g_table(m_max, table);
    const std::int64_t expected[] = {0, 7, 11, 14, 17, 19, 23, 25, 28};  // Table values g(1..8)
    for (int m = 1; m <= m_max; ++m)
        v.check("table1 g(" + std::to_string(m) + ")=" + std::to_string(expected[m]),
                m <= 8 && g.per_m[m] == expected[m]);
    return v.finish();
}

int verify_identities(int samples, std::uint64_t seed) {
    Verifier v;
    std::mt19937_64 rng(seed);
    bool all_ok = true;
    for (int i = 0; i < samples; ++i) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 200);
        Polyomino p = random_polyomino(n, rng());
        MetricsReport m = metrics(p);
        bool ok = 4 * m.n == m.p + 2 * m.b && m.p == m.p_o + m.p_h && m.b >= m.n - 1 &&
                  m.p_h >= 4 * m.holes;
        if (!ok) all_ok = false;
    }
    v.check("identities samples=" + std::to_string(samples), all_ok);
    return v.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extremal hole-maximizing polyominoes: constructions, bounds, enumeration"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "Build a family member and emit it");
    std::string family, format = "poly-text", out;
    int k = 1;
    std::int64_t l = 0, n = 0;
    construct->add_option("--family", family, "s | a | r | rext | rprime")->required();
    construct->add_option("--k", k, "family index k");
    construct->add_option("--l", l, "extension length (rext)");
    construct->add_option("--n", n, "tile count (rprime)");
    construct->add_option("--format", format, "poly-text | ascii | svg");
    construct->add_option("--out", out, "output path (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Print metrics of a poly-text file");
    std::string analyze_path;
    analyze->add_option("path", analyze_path, "poly-text v1 file")->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Census of fixed polyominoes");
    int max_n = 14, workers = 1;
    std::string enum_out;
    enumerate->add_option("--max-n", max_n, "largest size to census")->required();
    enumerate->add_option("--workers", workers, "worker threads");
    enumerate->add_option("--out", enum_out, "census CSV path (default stdout)");

    // gtable
    auto* gtable = app.add_subcommand("gtable", "g(m) table");
    int max_m = 3, gtable_max_n = 14;
    bool gtable_search = false;
    std::uint64_t node_budget = 1'000'000'000;
    std::string gtable_out;
    gtable->add_option("--max-m", max_m, "largest m")->required();
    gtable->add_option("--max-n", gtable_max_n, "census depth");
    gtable->add_flag("--search", gtable_search, "use branch-and-bound instead of census");
    gtable->add_option("--node-budget", node_budget, "search node budget");
    gtable->add_option("--out", gtable_out, "CSV path (default stdout)");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Bound values for one n");
    std::int64_t bounds_n = 1;
    std::int64_t lb_value = -1;
    bool construct_lb = false;
    std::string bounds_out;
    bounds_cmd->add_option("--n", bounds_n, "tile count")->required();
    bounds_cmd->add_option("--lb", lb_value, "known lower bound on f(n)");
    bounds_cmd->add_flag("--construct-lb", construct_lb, "measure R'_n for the lower bound");
    bounds_cmd->add_option("--out", bounds_out, "CSV path (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run an acceptance check suite");
    std::string target;
    int k_max = 6, m_max = 3, verify_max_n = 14, samples = 1000;
    std::int64_t n_from = 71400, n_to = 71410;
    double c1 = 1.6, c2 = 1.2;
    std::uint64_t seed = 1;
    verify->add_option("target", target, "theorem1 | theorem2 | table1 | identities")->required();
    verify->add_option("--k-max", k_max, "theorem1: largest k");
    verify->add_option("--n-from", n_from, "theorem2: first n");
    verify->add_option("--n-to", n_to, "theorem2: last n");
    verify->add_option("--c1", c1, "theorem2: C1 > sqrt(5/2)");
    verify->add_option("--c2", c2, "theorem2: C2 < sqrt(3/2)");
    verify->add_option("--m-max", m_max, "table1: largest m");
    verify->add_option("--max-n", verify_max_n, "table1: census depth");
    verify->add_option("--samples", samples, "identities: sample count");
    verify->add_option("--seed", seed, "identities: RNG seed");

    // render
    auto* render = app.add_subcommand("render", "Re-render a poly-text file");
    std::string render_in, render_format = "ascii", render_out;
    render->add_option("--in", render_in, "poly-text v1 file")->required();
    render->add_option("--format", render_format, "poly-text | ascii | svg");
    render->add_option("--out", render_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (*construct) return cmd_construct(family, k, l, n, format, out);
        if (*analyze) return cmd_analyze(analyze_path);
        if (*enumerate) return cmd_enumerate(max_n, workers, enum_out);
        if (*gtable) return cmd_gtable(max_m, gtable_max_n, gtable_search, node_budget, gtable_out);
        if (*bounds_cmd)
            return cmd_bounds(bounds_n,
                              lb_value >= 0 ? std::optional<std::int64_t>(lb_value) : std::nullopt,
                              construct_lb, bounds_out);
        if (*verify) {
            if (target == "theorem1") return verify_theorem1(k_max);
            if (target == "theorem2") return verify_theorem2(n_from, n_to, c1, c2);
            if (target == "table1") return verify_table1(m_max, verify_max_n);
            if (target == "identities") return verify_identities(samples, seed);
            std::cerr << "unknown verify target: " << target << '\n';
            return 2;
        }
        if (*render) return cmd_render(render_in, render_format, render_out);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const holey::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return holey::exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 5;
    }
}
