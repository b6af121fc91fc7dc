#pragma once

#include <stdexcept>
#include <string>

#include "parabolica/sparse_poly.hpp"

namespace parabolica {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Expression grammar over x, y with + - * ^, parentheses, and integer or
// rational literals ("3", "5/2"). Decimal literals and negative exponents
// are rejected with a positioned ParseError.
SparsePoly parse_poly(const std::string& text);

// Same grammar extended with the parameter t.
ParamPoly parse_param(const std::string& text);

}  // namespace parabolica
