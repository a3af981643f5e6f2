#include "hmink/scalar.hpp"

#include <cctype>

namespace hmink {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("scalar with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    if (!den_.is_one()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = *num_.divexact(g);
            den_ = *den_.divexact(g);
        }
        GRat lc = den_.lt().c;
        if (!lc.is_one()) {
            num_ = num_.scale(lc.inv());
            den_ = den_.scale(lc.inv());
        }
    }
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.num_ = -num_;
    s.den_ = den_;
    return s;
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.den_.is_one() && y.den_.is_one()) {
        Scalar s;
        s.num_ = x.num_ + y.num_;
        return s;
    }
    return Scalar(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.den_.is_one() && y.den_.is_one()) {
        Scalar s;
        s.num_ = x.num_ * y.num_;
        return s;
    }
    return Scalar(x.num_ * y.num_, x.den_ * y.den_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("division by zero scalar");
    return Scalar(den_, num_);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inv(); }

Scalar Scalar::conj() const {
    return Scalar(num_.conj(), den_.conj());
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    Scalar out(1), base = *this;
    while (e) {
        if (e & 1) out = out * base;
        if (e >>= 1) base = base * base;
    }
    return out;
}

Scalar Scalar::substitute(int v, const Rat& value) const {
    return Scalar(num_.substitute(v, value), den_.substitute(v, value));
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw Error("parse error at position " + std::to_string(pos) + ": " + what +
                    " in \"" + std::string(s) + "\"");
    }

    Scalar parse_expr() {
        char c = peek();
        bool neg = false;
        while (c == '+' || c == '-') {
            if (c == '-') neg = !neg;
            ++pos;
            c = peek();
        }
        Scalar v = parse_term();
        if (neg) v = -v;
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Scalar t = parse_term();
                v = (c == '+') ? v + t : v - t;
            } else {
                return v;
            }
        }
    }

    // term: factors joined by '*', '/', or juxtaposition
    Scalar parse_term() {
        Scalar v = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos;
                Scalar f = parse_factor();
                v = (c == '*') ? v * f : v / f;
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                v = v * parse_factor();
            } else {
                return v;
            }
        }
    }

    Scalar parse_factor() {
        Scalar b = parse_base();
        if (peek() == '^') {
            ++pos;
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos;
            }
            long e = parse_integer();
            b = b.pow(int(neg ? -e : e));
        }
        return b;
    }

    long parse_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(std::string(s.substr(start, pos - start)));
    }

    Scalar parse_base() {
        char c = peek();
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (c == '(') {
            ++pos;
            Scalar v = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Scalar(GRat(Rat(std::string(s.substr(start, pos - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            skip_ws();
            ++pos;
            if (c == 'i') return Scalar::i();
            for (int v = 0; v < kNumVars; ++v)
                if (kVarNames[v][0] == c) return Scalar::variable(v);
            fail(std::string("unknown symbol '") + c + "'");
        }
        fail("unexpected character");
    }
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
    Parser p{text};
    Scalar v = p.parse_expr();
    if (!p.eof()) p.fail("trailing input");
    return v;
}

Rat parse_rational(std::string_view text) {
    Scalar v = parse_scalar(text);
    if (!v.is_polynomial() || !v.num().is_constant())
        throw Error("expected a rational number, got " + v.str());
    GRat c = v.num().constant_value();
    if (!c.is_real()) throw Error("expected a real rational number");
    return c.re;
}

}  // namespace hmink
