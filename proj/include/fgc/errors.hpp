#pragma once

#include <stdexcept>
#include <string>

#include "fgc/int.hpp"

namespace fgc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FactorBudgetExceeded : Error {
    Int cofactor; // part left unfactored
    FactorBudgetExceeded(const std::string& msg, Int c) : Error(msg), cofactor(std::move(c)) {}
};

struct PrecisionExhausted : Error {
    long precision_bits;
    PrecisionExhausted(const std::string& msg, long bits) : Error(msg), precision_bits(bits) {}
};

struct ConfigError : Error {
    using Error::Error;
};

struct UnsupportedInput : Error {
    using Error::Error;
};

} // namespace fgc
