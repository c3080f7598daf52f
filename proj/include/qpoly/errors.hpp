#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpoly {

struct QpolyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed intersection-array text.
struct ParseError : QpolyError {
    using QpolyError::QpolyError;
};

// Diameter below 3; the Gram criterion needs D >= 3.
struct DiameterError : QpolyError {
    using QpolyError::QpolyError;
};

// The array violates a structural rule or the p-table recursion
// produced a non-integer / negative value.
struct FeasibilityError : QpolyError {
    std::vector<std::pair<std::string, std::string>> violations;  // (rule-id, detail)

    explicit FeasibilityError(std::vector<std::pair<std::string, std::string>> v)
        : QpolyError(join(v)), violations(std::move(v)) {}

  private:
    static std::string join(const std::vector<std::pair<std::string, std::string>>& v) {
        std::string s = "infeasible intersection array:";
        for (const auto& [rule, detail] : v) s += " [" + rule + "] " + detail + ";";
        return s;
    }
};

// Division by an interval containing zero, and similar domain violations.
struct DomainError : QpolyError {
    using QpolyError::QpolyError;
};

// Interval refinement budget exhausted before a decision could be made.
struct PrecisionError : QpolyError {
    using QpolyError::QpolyError;
};

// Input fails the primitivity hypothesis of the main criterion.
// Carries det(G) as a decimal string for information only.
struct HypothesisError : QpolyError {
    std::string det_g;

    HypothesisError(const std::string& msg, std::string det)
        : QpolyError(msg), det_g(std::move(det)) {}
};

struct UnsupportedError : QpolyError {
    using QpolyError::QpolyError;
};

struct NotDistanceRegularError : QpolyError {
    using QpolyError::QpolyError;
};

}  // namespace qpoly
