#include <doctest.h>

#include <fstream>

#include "cli_support.hpp"

using namespace sparse_lms::testing;

namespace {

std::size_t line_count(const std::string& s) {
    std::size_t n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("cli writes one averaged curve") {
    const auto dir = scratch_dir("cli_one");
    const auto r = run_cli("--runs 2 --iterations 300 --sr 1/16 --algorithms lms --out " + dir.string());
    REQUIRE_MESSAGE(r.exit_code == 0, r.output);
    const std::string csv = read_file(dir / "msd.csv");
    CHECK(line_count(csv) == 301);
    CHECK(csv.rfind("algorithm,sr_numerator,sr_denominator,iteration,msd\nlms,1,16,1,", 0) == 0);
    CHECK_FALSE(std::filesystem::exists(dir / "msd.svg"));
}

TEST_CASE("cli is deterministic for a fixed seed") {
    const auto a = scratch_dir("cli_det_a");
    const auto b = scratch_dir("cli_det_b");
    const std::string args = "--seed 99 --runs 3 --iterations 200 --sr 4/16,16/16 ";
    REQUIRE(run_cli(args + "--out " + a.string()).exit_code == 0);
    REQUIRE(run_cli(args + "--threads 2 --out " + b.string()).exit_code == 0);
    CHECK(read_file(a / "msd.csv") == read_file(b / "msd.csv"));

    const auto c = scratch_dir("cli_det_c");
    REQUIRE(run_cli("--seed 100 --runs 3 --iterations 200 --sr 4/16,16/16 --out " + c.string())
                .exit_code == 0);
    CHECK(read_file(a / "msd.csv") != read_file(c / "msd.csv"));
}

TEST_CASE("cli plot and summary") {
    const auto dir = scratch_dir("cli_plot");
    const auto r = run_cli("--runs 2 --iterations 100 --db --summary --out " + dir.string());
    REQUIRE_MESSAGE(r.exit_code == 0, r.output);
    const std::string svg = read_file(dir / "msd.svg");
    CHECK(svg.find("MSD (dB)") != std::string::npos);
    CHECK(r.output.find("algorithm") != std::string::npos);
    CHECK(r.output.find("lp_like_llms") != std::string::npos);
    CHECK(line_count(r.output) == 17);
}

TEST_CASE("cli reads a config file and applies overrides") {
    const auto dir = scratch_dir("cli_config");
    {
        std::ofstream conf(dir / "run.conf");
        conf << "runs = 50\niterations = 120\nsteady_state_window = 20\n[lms.1]\nmu = 0.02\n";
    }
    const auto r = run_cli("--config " + (dir / "run.conf").string() +
                           " --runs 1 --algorithms lms --sr 1/16 --summary --out " +
                           (dir / "out").string());
    REQUIRE_MESSAGE(r.exit_code == 0, r.output);
    CHECK(line_count(read_file(dir / "out" / "msd.csv")) == 121);
}

TEST_CASE("cli diagnostics") {
    const auto dir = scratch_dir("cli_errors");
    auto r = run_cli("--sr 3/7 --out " + dir.string());
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("denominator") != std::string::npos);
    CHECK(line_count(r.output) == 1);

    r = run_cli("--algorithms nlms --out " + dir.string());
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("nlms") != std::string::npos);

    {
        std::ofstream conf(dir / "bad.conf");
        conf << "[lp_like_lms]\np = 1.5\n";
    }
    r = run_cli("--config " + (dir / "bad.conf").string() + " --out " + dir.string());
    CHECK(r.exit_code != 0);
    CHECK(r.output.find("0 < p < 1") != std::string::npos);

    r = run_cli("--runs 1 --iterations 10 --sr 1/16 --algorithms lms --out /proc/nope");
    CHECK(r.exit_code != 0);
}
