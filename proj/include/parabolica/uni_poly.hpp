#pragma once

#include <vector>

#include "parabolica/rational.hpp"

namespace parabolica {

// Univariate polynomial over Rat, dense in ascending powers, no trailing
// zeros. Doubles as the t-coefficient ring of ParamPoly and as the
// specialised slices used by the resultant-based degeneracy check.
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(Rat constant);
    UniPoly(std::vector<Rat> coeffs);  // trimmed on construction

    static UniPoly monomial(const Rat& c, unsigned power);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is represented as -1 here; callers that
    // need the minus-infinity convention check is_zero() first.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const;
    Rat coeff(unsigned power) const;

    Rat eval(const Rat& t) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rat& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    // Multiplication by t^k.
    UniPoly shifted(unsigned k) const;

   private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Quotient and remainder with respect to a nonzero divisor.
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly uni_gcd(UniPoly a, UniPoly b);

// Resultant of a and b.
Rat uni_resultant(UniPoly a, UniPoly b);

}  // namespace parabolica
