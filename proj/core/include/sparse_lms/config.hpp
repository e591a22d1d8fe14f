#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "sparse_lms/experiment.hpp"

namespace sparse_lms {

/// Parses a run configuration.
///
/// The document is a list of `key = value` lines grouped under optional
/// `[section]` or `[section.subsection]` headers; `#` starts a comment.
///
///     runs = 50
///     sparsity_levels = 1, 4
///
///     [lp_like_llms]        # every sparsity level of one variant
///     leak_sign = minus
///
///     [lp_like_lms.4]       # one (variant, level) entry
///     rho_pl = 0.0025
///
/// Keys before the first header (or under `[experiment]`) set experiment
/// parameters. Anything left unset keeps its default, including the tabulated
/// per-level schedule. Throws ConfigError naming the offending key or the
/// violated constraint.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::filesystem::path& path);

/// "K/N" -> K. N must equal n_taps and 1 <= K <= N.
std::size_t parse_sparsity_ratio(std::string_view text, std::size_t n_taps);

/// Comma-separated list such as "1/16,4/16".
std::vector<std::size_t> parse_sparsity_list(std::string_view text, std::size_t n_taps);

/// Comma-separated variant names such as "lms,lp_like_llms".
std::vector<Variant> parse_variant_list(std::string_view text);

}  // namespace sparse_lms
