#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Division by zero and other violations of exact field arithmetic.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A truncated-series operation was called outside its domain
/// (non-unit leading coefficient, logarithmic term, bad index, ...).
class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The order-by-order solve for B and S broke down, or the generated pair
/// failed its self-checks.
class GenerationFailure : public std::runtime_error {
public:
    GenerationFailure(const std::string& what, int degree)
        : std::runtime_error(what + " (degree " + std::to_string(degree) + ")"), degree_(degree) {}

    [[nodiscard]] int degree() const noexcept { return degree_; }

private:
    int degree_;
};

/// Malformed serialized input (JSON, rational text, moment files).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace blowup
