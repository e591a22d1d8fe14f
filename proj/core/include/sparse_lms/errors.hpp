#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sparse_lms {

/// Vector lengths that must agree do not.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A scalar parameter lies outside its admissible range.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A weight update produced a non-finite value.
class NumericDivergence : public std::runtime_error {
public:
    NumericDivergence(std::uint64_t iteration, const std::string& what)
        : std::runtime_error(what), iteration_(iteration) {}

    std::uint64_t iteration() const noexcept { return iteration_; }

private:
    std::uint64_t iteration_;
};

/// Malformed or invalid configuration document.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sparse_lms
