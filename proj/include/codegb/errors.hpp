#pragma once

#include <stdexcept>
#include <string>

namespace codegb {

// Operands with incompatible lengths/shapes.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed textual input (code files, monomial strings, bit strings).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a contract
// (rank-deficient parity-check matrix, trivial code, wrong ordering).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive operation refused because the instance exceeds desk scale.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace codegb
