#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hmink {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rat = mpq_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Gaussian rational a + b*i with exact rational parts.
struct GRat {
    Rat re, im;

    GRat() : re(0), im(0) {}
    GRat(long n) : re(n), im(0) {}
    GRat(const Rat& r) : re(r), im(0) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GRat i() { return GRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GRat operator-() const { return GRat(-re, -im); }
    GRat conj() const { return GRat(re, -im); }

    GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
    GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
    friend GRat operator+(GRat x, const GRat& y) { x += y; return x; }
    friend GRat operator-(GRat x, const GRat& y) { x -= y; return x; }
    friend GRat operator*(const GRat& x, const GRat& y) {
        return GRat(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    GRat inv() const {
        Rat n = re * re + im * im;
        if (n == 0) throw Error("division by zero Gaussian rational");
        return GRat(re / n, -im / n);
    }
    friend GRat operator/(const GRat& x, const GRat& y) { return x * y.inv(); }
    friend bool operator==(const GRat& x, const GRat& y) { return x.re == y.re && x.im == y.im; }
    friend bool operator!=(const GRat& x, const GRat& y) { return !(x == y); }

    // Canonical text: "p/q", "p/q*i", or "p/q+P/Q*i" (minus signs folded in).
    std::string str() const {
        if (im == 0) return rat_str(re);
        std::string imp = rat_str(im) + "*i";
        if (re == 0) return imp;
        return rat_str(re) + (im > 0 ? "+" : "") + imp;
    }
};

}  // namespace hmink
