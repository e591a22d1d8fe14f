#include "sparse_lms/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "sparse_lms/errors.hpp"

namespace sparse_lms {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
    T value{};
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
    return value;
}

struct Entry {
    std::size_t line;
    std::string key;
    std::string value;
};

struct Section {
    std::size_t line;
    std::string name;                 // "" or "experiment" for top-level keys
    std::optional<Variant> variant;
    std::optional<std::size_t> level; // set for [variant.level]
    std::vector<Entry> entries;
};

[[noreturn]] void fail_at(std::size_t line, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

template <typename T>
T number_or_fail(const Entry& e) {
    auto v = parse_number<T>(e.value);
    if (!v) fail_at(e.line, "invalid value '" + e.value + "' for key '" + e.key + "'");
    return *v;
}

std::vector<Section> tokenize(std::string_view text) {
    std::vector<Section> sections;
    sections.push_back(Section{0, "", std::nullopt, std::nullopt, {}});
    std::size_t line_no = 0;
    for (std::string_view raw : split(text, '\n')) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail_at(line_no, "unterminated section header");
            const std::string_view name = trim(line.substr(1, line.size() - 2));
            Section sec{line_no, std::string(name), std::nullopt, std::nullopt, {}};
            if (name == "experiment") {
                sections.push_back(std::move(sec));
                continue;
            }
            const auto dot = name.find('.');
            const std::string_view head = name.substr(0, dot);
            sec.variant = variant_from_string(head);
            if (!sec.variant) fail_at(line_no, "unknown section '" + std::string(name) + "'");
            if (dot != std::string_view::npos) {
                const std::string_view sub = name.substr(dot + 1);
                sec.level = parse_number<std::size_t>(sub);
                if (!sec.level || *sec.level == 0) {
                    fail_at(line_no, "section '" + std::string(name) +
                                         "' needs a positive sparsity level after the dot");
                }
            }
            sections.push_back(std::move(sec));
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail_at(line_no, "expected 'key = value'");
        Entry e{line_no, std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))};
        if (e.key.empty()) fail_at(line_no, "missing key before '='");
        sections.back().entries.push_back(std::move(e));
    }
    return sections;
}

void apply_experiment_key(ExperimentConfig& cfg, const Entry& e) {
    if (e.key == "n_taps") {
        cfg.n_taps = number_or_fail<std::size_t>(e);
    } else if (e.key == "sparsity_levels") {
        cfg.sparsity_levels.clear();
        for (std::string_view item : split(e.value, ',')) {
            auto v = parse_number<std::size_t>(item);
            if (!v) fail_at(e.line, "invalid sparsity level '" + std::string(item) + "'");
            cfg.sparsity_levels.push_back(*v);
        }
    } else if (e.key == "iterations") {
        cfg.iterations = number_or_fail<std::size_t>(e);
    } else if (e.key == "runs") {
        cfg.runs = number_or_fail<std::size_t>(e);
    } else if (e.key == "ar_coeff") {
        cfg.ar_coeff = number_or_fail<double>(e);
    } else if (e.key == "drive_variance") {
        cfg.drive_variance = number_or_fail<double>(e);
    } else if (e.key == "noise_variance") {
        cfg.noise_variance = number_or_fail<double>(e);
    } else if (e.key == "master_seed") {
        cfg.master_seed = number_or_fail<std::uint64_t>(e);
    } else if (e.key == "steady_state_window") {
        cfg.steady_state_window = number_or_fail<std::size_t>(e);
    } else {
        fail_at(e.line, "unknown key '" + e.key + "'");
    }
}

void apply_algorithm_key(AlgorithmConfig& algo, const Entry& e) {
    if (e.key == "mu") {
        algo.mu = number_or_fail<double>(e);
    } else if (e.key == "gamma") {
        algo.gamma = number_or_fail<double>(e);
    } else if (e.key == "rho_pl") {
        algo.rho_pl = number_or_fail<double>(e);
    } else if (e.key == "epsilon_pl") {
        algo.epsilon_pl = number_or_fail<double>(e);
    } else if (e.key == "p") {
        algo.p = number_or_fail<double>(e);
    } else if (e.key == "leak_sign") {
        auto s = leak_sign_from_string(e.value);
        if (!s) fail_at(e.line, "leak_sign must be 'plus' or 'minus', got '" + e.value + "'");
        algo.leak_sign = *s;
    } else {
        fail_at(e.line, "unknown key '" + e.key + "'");
    }
}

AlgorithmConfig& entry_for(Schedule& schedule, Variant v, std::size_t level) {
    auto [it, inserted] = schedule.try_emplace(CellKey{v, level}, base_config(v));
    return it->second;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
    const std::vector<Section> sections = tokenize(text);
    ExperimentConfig cfg;

    for (const Section& sec : sections) {
        if (sec.variant) continue;
        for (const Entry& e : sec.entries) apply_experiment_key(cfg, e);
    }

    // Variant-wide sections first, so a [variant.level] section always has the last word.
    for (const Section& sec : sections) {
        if (!sec.variant || sec.level) continue;
        std::set<std::size_t> levels(cfg.sparsity_levels.begin(), cfg.sparsity_levels.end());
        for (const auto& [key, algo] : cfg.schedule) {
            if (key.variant == *sec.variant) levels.insert(key.sparsity_level);
        }
        for (std::size_t level : levels) {
            AlgorithmConfig& algo = entry_for(cfg.schedule, *sec.variant, level);
            for (const Entry& e : sec.entries) apply_algorithm_key(algo, e);
        }
    }
    for (const Section& sec : sections) {
        if (!sec.variant || !sec.level) continue;
        AlgorithmConfig& algo = entry_for(cfg.schedule, *sec.variant, *sec.level);
        for (const Entry& e : sec.entries) apply_algorithm_key(algo, e);
    }

    for (const auto& [key, algo] : cfg.schedule) {
        try {
            validate(algo);
        } catch (const ParameterError& err) {
            throw ConfigError("[" + std::string(to_string(key.variant)) + "." +
                              std::to_string(key.sparsity_level) + "] " + err.what());
        }
    }
    try {
        validate(cfg);
    } catch (const ParameterError& err) {
        throw ConfigError(err.what());
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::size_t parse_sparsity_ratio(std::string_view text, std::size_t n_taps) {
    const auto parts = split(text, '/');
    if (parts.size() != 2) {
        throw ConfigError("sparsity ratio '" + std::string(text) + "' must look like K/N");
    }
    const auto num = parse_number<std::size_t>(parts[0]);
    const auto den = parse_number<std::size_t>(parts[1]);
    if (!num || !den) {
        throw ConfigError("sparsity ratio '" + std::string(text) + "' must look like K/N");
    }
    if (*den != n_taps) {
        throw ConfigError("sparsity ratio '" + std::string(text) +
                          "': denominator must equal n_taps (" + std::to_string(n_taps) + ")");
    }
    if (*num == 0 || *num > *den) {
        throw ConfigError("sparsity ratio '" + std::string(text) + "' needs 1 <= K <= N");
    }
    return *num;
}

std::vector<std::size_t> parse_sparsity_list(std::string_view text, std::size_t n_taps) {
    std::vector<std::size_t> levels;
    for (std::string_view item : split(text, ',')) levels.push_back(parse_sparsity_ratio(item, n_taps));
    return levels;
}

std::vector<Variant> parse_variant_list(std::string_view text) {
    std::vector<Variant> out;
    for (std::string_view item : split(text, ',')) {
        auto v = variant_from_string(item);
        if (!v) throw ConfigError("unknown algorithm '" + std::string(item) + "'");
        out.push_back(*v);
    }
    return out;
}

}  // namespace sparse_lms
