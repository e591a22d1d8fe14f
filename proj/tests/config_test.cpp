#include <doctest.h>

#include <string>

#include "sparse_lms/config.hpp"
#include "sparse_lms/errors.hpp"

using namespace sparse_lms;

namespace {

std::string message_of(std::string_view text) {
    try {
        (void)parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("empty document yields the published protocol") {
    const ExperimentConfig cfg = parse_config("");
    CHECK(cfg.n_taps == 16);
    CHECK(cfg.iterations == 8000);
    CHECK(cfg.runs == 200);
    CHECK(cfg.sparsity_levels == std::vector<std::size_t>{1, 4, 8, 16});
    CHECK(cfg.ar_coeff == 0.8);
    CHECK(cfg.drive_variance == 1e-3);
    CHECK(cfg.noise_variance == 1e-2);
    CHECK(cfg.steady_state_window == 500);
    CHECK(cfg.schedule == default_schedule());
    CHECK(parse_config("# only a comment\n\n   \n").schedule == default_schedule());
}

TEST_CASE("top-level overrides") {
    const ExperimentConfig cfg = parse_config("runs = 1\n");
    CHECK(cfg.runs == 1);
    CHECK(cfg.iterations == 8000);
    CHECK(cfg.schedule == default_schedule());

    const ExperimentConfig more = parse_config(
        "[experiment]\n"
        "iterations = 1000   # shorter\n"
        "steady_state_window = 100\n"
        "sparsity_levels = 1, 16\n"
        "master_seed = 18446744073709551615\n"
        "noise_variance = 0\n");
    CHECK(more.iterations == 1000);
    CHECK(more.steady_state_window == 100);
    CHECK(more.sparsity_levels == std::vector<std::size_t>{1, 16});
    CHECK(more.master_seed == 18446744073709551615ULL);
    CHECK(more.noise_variance == 0.0);
}

TEST_CASE("algorithm sections") {
    const ExperimentConfig cfg = parse_config(
        "[lp_like_llms]\n"
        "leak_sign = minus\n"
        "[lp_like_llms.4]\n"
        "leak_sign = plus\n"
        "rho_pl = 0.0025\n"
        "[lms.1]\n"
        "mu = 0.01\n");
    CHECK(cfg.schedule.at({Variant::LpLikeLlms, 1}).leak_sign == LeakSign::Minus);
    CHECK(cfg.schedule.at({Variant::LpLikeLlms, 16}).leak_sign == LeakSign::Minus);
    CHECK(cfg.schedule.at({Variant::LpLikeLlms, 4}).leak_sign == LeakSign::Plus);
    CHECK(cfg.schedule.at({Variant::LpLikeLlms, 4}).rho_pl == 0.0025);
    CHECK(cfg.schedule.at({Variant::LpLikeLlms, 16}).rho_pl == 0.0001);
    CHECK(cfg.schedule.at({Variant::Lms, 1}).mu == 0.01);
    CHECK(cfg.schedule.at({Variant::Lms, 4}).mu == 0.015);
}

TEST_CASE("new levels get baseline entries") {
    const ExperimentConfig cfg = parse_config(
        "n_taps = 32\n"
        "sparsity_levels = 2\n"
        "[llms.2]\n"
        "gamma = 0.01\n"
        "[lms.2]\n"
        "[lp_like_lms.2]\n"
        "[lp_like_llms.2]\n");
    CHECK(cfg.schedule.at({Variant::Llms, 2}).gamma == 0.01);
    CHECK(cfg.schedule.at({Variant::Llms, 2}).mu == 0.015);
    CHECK(cfg.schedule.at({Variant::LpLikeLlms, 2}) == base_config(Variant::LpLikeLlms));
    // levels outside the table need at least one section per variant
    CHECK(message_of("sparsity_levels = 2\n").find("no schedule entry") != std::string::npos);
}

TEST_CASE("errors name the key or constraint") {
    CHECK(message_of("bogus = 3\n").find("bogus") != std::string::npos);
    CHECK(message_of("[lms]\nrho = 3\n").find("'rho'") != std::string::npos);
    CHECK(message_of("[nlms]\nmu = 1\n").find("nlms") != std::string::npos);
    CHECK(message_of("p = 1.5\n").find("p") != std::string::npos);
    CHECK(message_of("[lp_like_lms]\np = 1.5\n").find("0 < p < 1") != std::string::npos);
    CHECK(message_of("[lp_like_llms.4]\ngamma = 1.0\n").find("gamma < 1") != std::string::npos);
    CHECK(message_of("runs = many\n").find("runs") != std::string::npos);
    CHECK(message_of("runs = 0\n").find("runs") != std::string::npos);
    CHECK(message_of("ar_coeff = 1.0\n").find("ar_coeff") != std::string::npos);
    CHECK(message_of("[lms\n").find("line 1") != std::string::npos);
    CHECK(message_of("runs 5\n").find("key = value") != std::string::npos);
    CHECK(message_of("[lms.x]\n").find("sparsity level") != std::string::npos);
    CHECK(message_of("[llms]\nleak_sign = sideways\n").find("leak_sign") != std::string::npos);
    CHECK(message_of("iterations = 100\n").find("steady_state_window") != std::string::npos);
}

TEST_CASE("load_config reads files") {
    CHECK_THROWS_AS(load_config("/nonexistent/dir/run.conf"), IoError);
}

TEST_CASE("sparsity ratios") {
    CHECK(parse_sparsity_ratio("1/16", 16) == 1);
    CHECK(parse_sparsity_ratio(" 16/16 ", 16) == 16);
    CHECK(parse_sparsity_list("1/16,4/16", 16) == std::vector<std::size_t>{1, 4});
    CHECK_THROWS_AS(parse_sparsity_ratio("3/7", 16), ConfigError);
    CHECK_THROWS_AS(parse_sparsity_ratio("0/16", 16), ConfigError);
    CHECK_THROWS_AS(parse_sparsity_ratio("17/16", 16), ConfigError);
    CHECK_THROWS_AS(parse_sparsity_ratio("half", 16), ConfigError);
}

TEST_CASE("variant lists") {
    CHECK(parse_variant_list("lms") == std::vector<Variant>{Variant::Lms});
    CHECK(parse_variant_list("lp_like_llms, llms") ==
          std::vector<Variant>{Variant::LpLikeLlms, Variant::Llms});
    CHECK_THROWS_AS(parse_variant_list("lms,nlms"), ConfigError);
}
