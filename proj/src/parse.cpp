#include "parabolica/parse.hpp"

#include <cctype>
#include <map>
#include <tuple>

namespace parabolica {

namespace {

struct Exp3 {
    int i = 0, j = 0, k = 0;
    friend bool operator<(const Exp3& a, const Exp3& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    }
};

// Intermediate expansion over x, y, t.
struct Poly3 {
    std::map<Exp3, Rat> terms;

    void add(const Exp3& e, const Rat& c) {
        if (c == 0) return;
        auto [it, ins] = terms.try_emplace(e, c);
        if (!ins) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Poly3 operator+(const Poly3& o) const {
        Poly3 r = *this;
        for (const auto& [e, c] : o.terms) r.add(e, c);
        return r;
    }

    Poly3 operator-(const Poly3& o) const {
        Poly3 r = *this;
        for (const auto& [e, c] : o.terms) r.add(e, -c);
        return r;
    }

    Poly3 operator*(const Poly3& o) const {
        Poly3 r;
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : o.terms)
                r.add({ea.i + eb.i, ea.j + eb.j, ea.k + eb.k}, ca * cb);
        return r;
    }

    Poly3 negated() const {
        Poly3 r;
        for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
        return r;
    }

    Poly3 pow(long e) const {
        Poly3 r;
        r.add({0, 0, 0}, Rat(1));
        Poly3 acc = *this;
        while (e > 0) {
            if (e & 1) r = r * acc;
            e >>= 1;
            if (e) acc = acc * acc;
        }
        return r;
    }
};

class Parser {
   public:
    Parser(const std::string& text, bool allow_t) : text_(text), allow_t_(allow_t) {}

    Poly3 run() {
        Poly3 p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

   private:
    Poly3 expr() {
        skip_ws();
        Poly3 acc;
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        acc = neg ? term().negated() : term();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly3 t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    Poly3 term() {
        Poly3 acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly3 factor() {
        Poly3 base = atom();
        skip_ws();
        if (peek() == '^') {
            std::size_t caret = pos_;
            ++pos_;
            skip_ws();
            if (peek() == '-') fail("negative exponent", pos_);
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent", caret + 1);
            long e = read_natural();
            return base.pow(e);
        }
        return base;
    }

    Poly3 atom() {
        skip_ws();
        char c = peek();
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Poly3 inner = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return atom().negated();
        }
        if (c == 'x' || c == 'y' || c == 't') {
            if (c == 't' && !allow_t_) fail("unknown variable 't'", at);
            ++pos_;
            Poly3 p;
            p.add({c == 'x' ? 1 : 0, c == 'y' ? 1 : 0, c == 't' ? 1 : 0}, Rat(1));
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat v = read_rational();
            Poly3 p;
            p.add({0, 0, 0}, v);
            return p;
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
        return {};
    }

    Rat read_rational() {
        std::size_t at = pos_;
        Int num = read_integer();
        if (peek() == '.') fail("non-rational literal", pos_);
        if (peek() == '/') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
            Int den = read_integer();
            if (peek() == '.') fail("non-rational literal", pos_);
            if (den == 0) fail("zero denominator", at);
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        return Rat(num);
    }

    Int read_integer() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        return Int(digits);
    }

    long read_natural() {
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        if (digits.size() > 6) fail("exponent too large", pos_ - digits.size());
        return std::stol(digits);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) const {
        throw ParseError(what, at);
    }

    const std::string& text_;
    bool allow_t_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(const std::string& text) {
    Poly3 p = Parser(text, false).run();
    SparsePoly out;
    for (const auto& [e, c] : p.terms) out.add_term({e.i, e.j}, c);
    return out;
}

ParamPoly parse_param(const std::string& text) {
    Poly3 p = Parser(text, true).run();
    ParamPoly out;
    for (const auto& [e, c] : p.terms) {
        UniPoly add = UniPoly::monomial(c, static_cast<unsigned>(e.k));
        auto [it, ins] = out.terms.try_emplace(Exp2{e.i, e.j}, add);
        if (!ins) it->second += add;
    }
    return out;
}

}  // namespace parabolica
