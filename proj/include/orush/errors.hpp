#pragma once

#include <stdexcept>
#include <string>

namespace orush {

// Base for everything thrown by the library on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent inputs: mismatched coefficient rings, non-units
// where units are required, unsupported orders, bad expressions.
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// A desk-scale budget was exhausted (trial-division bound, sample budget,
// degree bound) before the computation could finish.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

// A truncated series was read past its precision, or an input was
// indistinguishable from zero at the available precision.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

// Hensel lifting hit a non-simple root mod the uniformizer.
struct LiftingError : Error {
    explicit LiftingError(const std::string& msg) : Error(msg) {}
};

}  // namespace orush
