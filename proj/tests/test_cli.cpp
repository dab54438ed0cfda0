#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    auto out_path = dir / ("holey_cli_out_" + std::to_string(counter));
    auto err_path = dir / ("holey_cli_err_" + std::to_string(counter));
    ++counter;
    std::string cmd = std::string(HOLEY_CLI_PATH) + " " + args + " > " + out_path.string() +
                      " 2> " + err_path.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
}

}  // namespace

TEST_CASE("construct emits poly-text and a PASS summary") {
    RunResult r = run("construct --family s --k 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 15) == "polyomino v1 8\n");
    CHECK(r.err.find("tiles=8 holes=1") != std::string::npos);
    CHECK(r.err.find("PASS") != std::string::npos);
}

TEST_CASE("construct ascii renders the ring") {
    RunResult r = run("construct --family s --k 1 --format ascii");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "###\n#.#\n###\n");
}

TEST_CASE("construct rejects out-of-domain parameters with exit 4") {
    CHECK(run("construct --family rprime --n 71399").exit_code == 4);
    CHECK(run("construct --family rext --k 1 --l 3").exit_code == 4);
}

TEST_CASE("construct rejects unknown family with usage error") {
    CHECK(run("construct --family z --k 1").exit_code == 2);
}

TEST_CASE("analyze prints the metric line") {
    auto p = write_temp("holey_cli_ring.poly",
                        "polyomino v1 8\n0 0\n1 0\n2 0\n0 1\n2 1\n0 2\n1 2\n2 2\n");
    RunResult r = run("analyze " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n=8 holes=1 p=16 b=8 p_h=4 p_o=12\n");
    std::filesystem::remove(p);
}

TEST_CASE("analyze rejects malformed input with exit 2") {
    auto p = write_temp("holey_cli_bad.poly", "polyomino v1 2\n0 0\n");
    CHECK(run("analyze " + p.string()).exit_code == 2);
    std::filesystem::remove(p);
    CHECK(run("analyze /nonexistent/file.poly").exit_code == 2);
}

TEST_CASE("enumerate writes the census CSV") {
    RunResult r = run("enumerate --max-n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,total,holes_0,f,min_perimeter\n") == 0);
    CHECK(r.out.find("\n1,1,1,0,4\n") != std::string::npos);
    CHECK(r.out.find("\n5,63,63,0,10\n") != std::string::npos);
}

TEST_CASE("enumerate with workers matches serial output") {
    RunResult serial = run("enumerate --max-n 8 --workers 1");
    RunResult par = run("enumerate --max-n 8 --workers 4");
    CHECK(serial.exit_code == 0);
    CHECK(par.exit_code == 0);
    CHECK(serial.out == par.out);
}

TEST_CASE("enumerate rejects a size beyond the hard cap") {
    CHECK(run("enumerate --max-n 19").exit_code == 4);
}

TEST_CASE("gtable from census and from search agree") {
    RunResult census = run("gtable --max-m 2 --max-n 11");
    CHECK(census.exit_code == 0);
    CHECK(census.out == "m,g\n1,7\n2,11\n");
    RunResult search = run("gtable --max-m 2 --search");
    CHECK(search.exit_code == 0);
    CHECK(search.out == census.out);
}

TEST_CASE("gtable fails cleanly when the census is too shallow") {
    CHECK(run("gtable --max-m 2 --max-n 9").exit_code == 4);
}

TEST_CASE("bounds prints one CSV row") {
    RunResult r = run("bounds --n 20 --lb 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,p_min,ub_fixed_point,lb_construction,ub_from_lb\n20,18,5,,5\n");
}

TEST_CASE("verify theorem1 passes") {
    RunResult r = run("verify theorem1 --k-max 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ALL PASS") != std::string::npos);
    CHECK(r.out.find("FAIL\n") == std::string::npos);
}

TEST_CASE("verify theorem2 passes on a window") {
    RunResult r = run("verify theorem2 --n-from 71400 --n-to 71402");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ALL PASS") != std::string::npos);
}

TEST_CASE("verify identities passes") {
    RunResult r = run("verify identities --samples 200 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ALL PASS") != std::string::npos);
}

TEST_CASE("render round-trips poly-text") {
    auto p = write_temp("holey_cli_bar.poly", "polyomino v1 3\n0 0\n1 0\n2 0\n");
    RunResult r = run("render --in " + p.string() + " --format poly-text");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "polyomino v1 3\n0 0\n1 0\n2 0\n");
    RunResult a = run("render --in " + p.string() + " --format ascii");
    CHECK(a.out == "###\n");
    std::filesystem::remove(p);
}

TEST_CASE("missing subcommand is a usage error") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}
