#include "parabolica/uni_poly.hpp"

#include <stdexcept>

namespace parabolica {

UniPoly::UniPoly(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rat& c, unsigned power) {
    UniPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(power + 1, Rat(0));
    p.coeffs_[power] = c;
    return p;
}

const Rat& UniPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("UniPoly::leading on zero polynomial");
    return coeffs_.back();
}

Rat UniPoly::coeff(unsigned power) const {
    if (power >= coeffs_.size()) return Rat(0);
    return coeffs_[power];
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rat& c) const {
    if (c == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& v : r.coeffs_) v *= c;
    return r;
}

UniPoly UniPoly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rat> out(coeffs_.size() + k, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return UniPoly(std::move(out));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("uni_divmod: division by zero polynomial");
    std::vector<Rat> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), a};
    std::vector<Rat> quot(a.degree() - db + 1, Rat(0));
    const Rat& lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat c = rem[k + db] / lead;
        if (c == 0) continue;
        quot[k] = c;
        for (int j = 0; j <= db; ++j) rem[k + j] -= c * b.coeffs()[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = uni_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.leading());
}

Rat uni_resultant(UniPoly a, UniPoly b) {
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Rat res(1);
    bool negate = false;
    while (b.degree() > 0) {
        UniPoly r = uni_divmod(a, b).second;
        int da = a.degree(), db = b.degree();
        int dr = r.is_zero() ? -1 : r.degree();
        if ((da % 2) && (db % 2)) negate = !negate;
        if (r.is_zero()) return Rat(0);
        res *= rat_pow(b.leading(), da - dr);
        a = std::move(b);
        b = std::move(r);
    }
    // b is now a nonzero constant.
    res *= rat_pow(b.coeff(0), a.degree());
    return negate ? Rat(-res) : res;
}

}  // namespace parabolica
