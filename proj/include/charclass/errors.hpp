#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "charclass/ints.hpp"

namespace charclass {

// Misuse of the library surface: mismatched caps, unmapped formal variables,
// malformed CLI input. The CLI maps these to exit code 64.
struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// invert() on a series whose constant term is not +-1.
struct not_invertible_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Chern classes requested for an expression with real trivial summands.
struct not_complex_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Rejection of (n, k, l) parameters. The CLI maps these to exit code 2.
struct validation_error : std::domain_error {
    enum class reason { not_a_manifold, invalid_parameters };

    validation_error(reason r, const std::string& msg)
        : std::domain_error(msg), why(r) {}
    validation_error(reason r, const std::string& msg, Int g)
        : std::domain_error(msg), why(r), gcd(std::move(g)) {}

    reason why;
    std::optional<Int> gcd;  // set when the gcd condition failed
};

}  // namespace charclass
