#include "parabolica/sparse_poly.hpp"

#include <sstream>

namespace parabolica {

SparsePoly poly_const(const Rat& c) {
    SparsePoly p;
    p.add_term({0, 0}, c);
    return p;
}

SparsePoly poly_monomial(const Rat& c, int i, int j) {
    SparsePoly p;
    p.add_term({i, j}, c);
    return p;
}

SparsePoly poly_pow(const SparsePoly& p, unsigned e) {
    SparsePoly r = poly_const(Rat(1));
    SparsePoly acc = p;
    while (e > 0) {
        if (e & 1u) r = r * acc;
        e >>= 1;
        if (e) acc = acc * acc;
    }
    return r;
}

Rat eval(const SparsePoly& p, const RatPoint& q) {
    // Powers are cached; supports the dense high-degree systems produced by
    // the differential operators without repeated exponentiation.
    std::vector<Rat> xp{Rat(1)}, yp{Rat(1)};
    auto power = [](std::vector<Rat>& cache, const Rat& base, int e) -> const Rat& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Rat acc(0);
    for (const auto& [e, c] : p.terms) acc += c * power(xp, q.x, e.i) * power(yp, q.y, e.j);
    return acc;
}

SparsePoly scale_xy(const SparsePoly& p, const Rat& sx, const Rat& sy) {
    SparsePoly r;
    for (const auto& [e, c] : p.terms) r.add_term(e, c * rat_pow(sx, e.i) * rat_pow(sy, e.j));
    return r;
}

Exp2 monomial_content(const SparsePoly& p) {
    if (p.is_zero()) return {0, 0};
    int mi = -1, mj = -1;
    for (const auto& [e, c] : p.terms) {
        mi = (mi < 0 || e.i < mi) ? e.i : mi;
        mj = (mj < 0 || e.j < mj) ? e.j : mj;
    }
    return {mi, mj};
}

SparsePoly strip_monomial(const SparsePoly& p, const Exp2& content) {
    SparsePoly r;
    for (const auto& [e, c] : p.terms) {
        if (e.i < content.i || e.j < content.j)
            throw std::domain_error("strip_monomial: content does not divide polynomial");
        r.terms.emplace(Exp2{e.i - content.i, e.j - content.j}, c);
    }
    return r;
}

ParamPoly to_param(const SparsePoly& p) {
    ParamPoly r;
    for (const auto& [e, c] : p.terms) r.terms.emplace(e, UniPoly(c));
    return r;
}

ParamPoly times_t_power(const ParamPoly& p, unsigned k) {
    ParamPoly r;
    for (const auto& [e, c] : p.terms) r.terms.emplace(e, c.shifted(k));
    return r;
}

SparsePoly specialize(const ParamPoly& p, const Rat& t0) {
    SparsePoly r;
    for (const auto& [e, c] : p.terms) r.add_term(e, c.eval(t0));
    return r;
}

namespace {

ParamPoly quasihomothety_impl(const ParamPoly& p, int alpha, int beta, int r) {
    ParamPoly out;
    for (const auto& [e, c] : p.terms) {
        long shift = static_cast<long>(r) + static_cast<long>(alpha) * e.i +
                     static_cast<long>(beta) * e.j;
        for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
            if (c.coeffs()[k] == 0) continue;
            long tot = shift + static_cast<long>(k);
            if (tot < 0) {
                std::ostringstream msg;
                msg << "quasihomothety: negative t exponent " << tot << " at term x^" << e.i
                    << "*y^" << e.j;
                throw QuasihomothetyError(msg.str());
            }
            UniPoly add = UniPoly::monomial(c.coeffs()[k], static_cast<unsigned>(tot));
            auto [it, inserted] = out.terms.try_emplace(e, add);
            if (!inserted) it->second += add;
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        if (it->second.is_zero())
            it = out.terms.erase(it);
        else
            ++it;
    }
    return out;
}

}  // namespace

ParamPoly quasihomothety(const SparsePoly& p, int alpha, int beta, int r) {
    return quasihomothety_impl(to_param(p), alpha, beta, r);
}

ParamPoly quasihomothety(const ParamPoly& p, int alpha, int beta, int r) {
    return quasihomothety_impl(p, alpha, beta, r);
}

namespace {

// Canonical monomial text, shared by both printers. Empty for the constant
// monomial.
std::string monomial_text(const Exp2& e) {
    std::string s;
    if (e.i > 0) {
        s += "x";
        if (e.i > 1) s += "^" + std::to_string(e.i);
    }
    if (e.j > 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (e.j > 1) s += "^" + std::to_string(e.j);
    }
    return s;
}

// One t-power with coefficient, e.g. "3/2", "t", "-t^2", "2*t".
std::string t_term_text(const Rat& c, unsigned k, bool leading) {
    std::string s;
    Rat a = rat_abs(c);
    bool neg = c < 0;
    if (k == 0) {
        s = rat_to_string(a);
    } else {
        std::string tp = (k == 1) ? "t" : "t^" + std::to_string(k);
        s = (a == 1) ? tp : rat_to_string(a) + "*" + tp;
    }
    if (leading) return neg ? "-" + s : s;
    return (neg ? " - " : " + ") + s;
}

std::string uni_text(const UniPoly& u) {
    std::string s;
    bool first = true;
    for (std::size_t k = 0; k < u.coeffs().size(); ++k) {
        if (u.coeffs()[k] == 0) continue;
        s += t_term_text(u.coeffs()[k], static_cast<unsigned>(k), first);
        first = false;
    }
    return s;
}

int uni_term_count(const UniPoly& u) {
    int n = 0;
    for (const auto& c : u.coeffs())
        if (c != 0) ++n;
    return n;
}

}  // namespace

std::string to_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        std::string mono = monomial_text(e);
        Rat a = rat_abs(c);
        std::string body;
        if (mono.empty())
            body = rat_to_string(a);
        else if (a == 1)
            body = mono;
        else
            body = rat_to_string(a) + "*" + mono;
        if (first)
            s += (c < 0 ? "-" : "") + body;
        else
            s += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

std::string to_string(const ParamPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        std::string mono = monomial_text(e);
        int nterms = uni_term_count(c);
        std::string body;
        bool neg = false;
        if (nterms == 1) {
            std::size_t k = 0;
            while (c.coeffs()[k] == 0) ++k;
            Rat v = c.coeffs()[k];
            neg = v < 0;
            std::string coeff = t_term_text(rat_abs(v), static_cast<unsigned>(k), true);
            if (mono.empty())
                body = coeff;
            else if (coeff == "1")
                body = mono;
            else
                body = coeff + "*" + mono;
        } else {
            std::string coeff = "(" + uni_text(c) + ")";
            body = mono.empty() ? coeff : coeff + "*" + mono;
        }
        if (first)
            s += (neg ? "-" : "") + body;
        else
            s += (neg ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

std::string to_exchange(const SparsePoly& p) {
    std::string s;
    for (const auto& [e, c] : p.terms)
        s += rat_to_string(c) + " " + std::to_string(e.i) + " " + std::to_string(e.j) + "\n";
    return s;
}

std::string to_exchange(const ParamPoly& p) {
    std::string s;
    for (const auto& [e, c] : p.terms)
        for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
            if (c.coeffs()[k] == 0) continue;
            s += rat_to_string(c.coeffs()[k]) + " " + std::to_string(e.i) + " " +
                 std::to_string(e.j) + " " + std::to_string(k) + "\n";
        }
    return s;
}

namespace {

std::vector<std::vector<std::string>> exchange_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (!tok.empty() && tok[0][0] == '#') continue;
        if (!tok.empty()) rows.push_back(std::move(tok));
    }
    return rows;
}

int parse_exp(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size() || v < 0) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("exchange format: bad ") + what + " '" + s + "'");
    }
}

}  // namespace

SparsePoly sparse_from_exchange(const std::string& text) {
    SparsePoly p;
    for (const auto& row : exchange_rows(text)) {
        if (row.size() != 3) throw std::runtime_error("exchange format: expected 'coeff i j'");
        auto c = parse_rational(row[0]);
        if (!c) throw std::runtime_error("exchange format: bad coefficient '" + row[0] + "'");
        p.add_term({parse_exp(row[1], "exponent"), parse_exp(row[2], "exponent")}, *c);
    }
    return p;
}

ParamPoly param_from_exchange(const std::string& text) {
    ParamPoly p;
    for (const auto& row : exchange_rows(text)) {
        if (row.size() != 3 && row.size() != 4)
            throw std::runtime_error("exchange format: expected 'coeff i j [t_exp]'");
        auto c = parse_rational(row[0]);
        if (!c) throw std::runtime_error("exchange format: bad coefficient '" + row[0] + "'");
        int te = row.size() == 4 ? parse_exp(row[3], "t exponent") : 0;
        Exp2 e{parse_exp(row[1], "exponent"), parse_exp(row[2], "exponent")};
        UniPoly add = UniPoly::monomial(*c, static_cast<unsigned>(te));
        auto [it, inserted] = p.terms.try_emplace(e, add);
        if (!inserted) {
            it->second += add;
            if (it->second.is_zero()) p.terms.erase(it);
        }
    }
    return p;
}

}  // namespace parabolica
