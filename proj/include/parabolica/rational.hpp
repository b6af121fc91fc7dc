#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace parabolica {

// Exact rational scalar. All symbolic computation in the library runs on
// these; floating point only ever appears inside interval enclosures.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline int rat_sign(const Rat& q) { return sgn(q); }

// q^e for integer e (negative e allowed when q != 0).
Rat rat_pow(const Rat& q, long e);

// Parses "p", "-p", "p/q" with integer p, q (q > 0 after normalisation).
// Returns nullopt on malformed input; never accepts decimal notation.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical form: "p" or "p/q" with gcd(p, q) = 1, q > 0.
std::string rat_to_string(const Rat& q);

struct RatPoint {
    Rat x;
    Rat y;
};

}  // namespace parabolica
