#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabolica/rational.hpp"
#include "parabolica/uni_poly.hpp"

namespace parabolica {

// Exponent pair of a monomial x^i y^j. Ordering is graded lexicographic on
// (i + j, i), which fixes the canonical term order used everywhere
// (printing, exchange files, golden tests).
struct Exp2 {
    int i = 0;
    int j = 0;

    friend bool operator==(const Exp2& a, const Exp2& b) { return a.i == b.i && a.j == b.j; }
    friend bool operator<(const Exp2& a, const Exp2& b) {
        int da = a.i + a.j, db = b.i + b.j;
        if (da != db) return da < db;
        return a.i < b.i;
    }
};

using LatticeSet = std::set<Exp2>;

inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const UniPoly& c) { return c.is_zero(); }

// Sparse bivariate polynomial with coefficients in C. Stored coefficients
// are never zero; the zero polynomial has an empty term map.
template <typename C>
struct PolyT {
    std::map<Exp2, C> terms;

    bool is_zero() const { return terms.empty(); }

    // Total degree; nullopt is the "minus infinity" degree of the zero
    // polynomial.
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms) {
            int t = e.i + e.j;
            if (!d || t > *d) d = t;
        }
        return d;
    }

    LatticeSet support() const {
        LatticeSet s;
        for (const auto& [e, c] : terms) s.insert(e);
        return s;
    }

    void add_term(const Exp2& e, const C& c) {
        if (e.i < 0 || e.j < 0) throw std::domain_error("negative exponent in polynomial term");
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }

    PolyT operator-() const {
        PolyT r;
        for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }

    PolyT& operator+=(const PolyT& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }

    PolyT& operator-=(const PolyT& o) {
        for (const auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }

    friend PolyT operator+(PolyT a, const PolyT& b) { return a += b; }
    friend PolyT operator-(PolyT a, const PolyT& b) { return a -= b; }

    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        PolyT r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) r.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
        return r;
    }

    bool operator==(const PolyT& o) const { return terms == o.terms; }
};

using SparsePoly = PolyT<Rat>;
using ParamPoly = PolyT<UniPoly>;

enum class Axis { X, Y };

template <typename C>
PolyT<C> derivative(const PolyT<C>& p, Axis v) {
    PolyT<C> r;
    for (const auto& [e, c] : p.terms) {
        if (v == Axis::X) {
            if (e.i == 0) continue;
            r.add_term({e.i - 1, e.j}, c * Rat(e.i));
        } else {
            if (e.j == 0) continue;
            r.add_term({e.i, e.j - 1}, c * Rat(e.j));
        }
    }
    return r;
}

template <typename C>
PolyT<C> restrict_to(const PolyT<C>& p, const LatticeSet& mask) {
    PolyT<C> r;
    for (const auto& [e, c] : p.terms)
        if (mask.count(e)) r.terms.emplace(e, c);
    return r;
}

template <typename C>
PolyT<C> scale(const PolyT<C>& p, const Rat& c) {
    PolyT<C> r;
    if (c == 0) return r;
    for (const auto& [e, v] : p.terms) r.terms.emplace(e, v * c);
    return r;
}

SparsePoly poly_const(const Rat& c);
SparsePoly poly_monomial(const Rat& c, int i, int j);
SparsePoly poly_pow(const SparsePoly& p, unsigned e);

Rat eval(const SparsePoly& p, const RatPoint& q);

// Substitution x -> sx * x, y -> sy * y; exact.
SparsePoly scale_xy(const SparsePoly& p, const Rat& sx, const Rat& sy);

// (min i, min j) over the support; {0, 0} for the zero polynomial.
Exp2 monomial_content(const SparsePoly& p);
// p divided by x^a y^b; requires the content to cover (a, b).
SparsePoly strip_monomial(const SparsePoly& p, const Exp2& content);

// --- ParamPoly specifics -------------------------------------------------

ParamPoly to_param(const SparsePoly& p);

// Multiplies every term by t^k.
ParamPoly times_t_power(const ParamPoly& p, unsigned k);

SparsePoly specialize(const ParamPoly& p, const Rat& t0);

struct QuasihomothetyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Term a x^i y^j picks up t^(r + i*alpha + j*beta); existing t powers of a
// ParamPoly input compose additively. Throws QuasihomothetyError when any
// total t exponent would be negative.
ParamPoly quasihomothety(const SparsePoly& p, int alpha, int beta, int r);
ParamPoly quasihomothety(const ParamPoly& p, int alpha, int beta, int r);

// --- canonical text form --------------------------------------------------

std::string to_string(const SparsePoly& p);
std::string to_string(const ParamPoly& p);

// Machine exchange format: one term per line, "num/den i j" for SparsePoly
// and "num/den i j t_exp" for ParamPoly.
std::string to_exchange(const SparsePoly& p);
std::string to_exchange(const ParamPoly& p);
SparsePoly sparse_from_exchange(const std::string& text);
ParamPoly param_from_exchange(const std::string& text);

}  // namespace parabolica
