#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Exact polynomial division left a remainder.
struct NotDivisible : std::domain_error {
    NotDivisible() : std::domain_error("exact division leaves a remainder") {}
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

// A polynomial in s kept an odd power, so it has no preimage under s^2 = q.
struct OddPowerPresent : std::domain_error {
    OddPowerPresent() : std::domain_error("odd power of s present, cannot lower to q") {}
    explicit OddPowerPresent(const std::string& what) : std::domain_error(what) {}
};

// Two combinatorial objects that must have equal size do not.
struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// An index or argument lies outside its documented range.
struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Malformed textual input (partition, bicomposition or skew shape syntax).
struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hecke
