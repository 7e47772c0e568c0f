#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace absim {

/// Invalid numeric input to a model function (negative mass, zero speed, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A deployment that does not fit the platform's mass budget.
class FeasibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected configuration. Carries every violation found, not just the first.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    explicit ValidationError(const std::string& message)
        : ValidationError(std::vector<std::string>{message}) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "configuration invalid:";
        for (const auto& msg : v) {
            out += "\n  - " + msg;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

inline void check_finite(double value, const char* name) {
    if (!std::isfinite(value)) {
        throw DomainError(std::string(name) + " must be finite, got " + std::to_string(value));
    }
}

inline void check_positive(double value, const char* name) {
    if (!(value > 0.0) || std::isinf(value)) {
        throw DomainError(std::string(name) + " must be positive and finite, got " +
                          std::to_string(value));
    }
}

inline void check_non_negative(double value, const char* name) {
    check_finite(value, name);
    if (value < 0.0) {
        throw DomainError(std::string(name) + " must be >= 0, got " + std::to_string(value));
    }
}

inline void check_unit_interval(double value, const char* name) {
    check_finite(value, name);
    if (value < 0.0 || value > 1.0) {
        throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

}  // namespace absim
