#pragma once

#include <string>
#include <string_view>

#include "hmink/poly.hpp"

namespace hmink {

// Element of the fraction field of Q(i)[h,r,...]. Kept reduced (numerator and
// denominator coprime) with a monic denominator, so representation equality is
// value equality.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long n) : num_(GRat(n)), den_(Poly::one()) {}
    explicit Scalar(GRat c) : num_(std::move(c)), den_(Poly::one()) {}
    explicit Scalar(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
    Scalar(Poly num, Poly den);  // reduces; throws on zero denominator

    static Scalar variable(int v) { return Scalar(Poly::variable(v)); }
    static Scalar i() { return Scalar(GRat::i()); }
    static Scalar rational(const Rat& q) { return Scalar(GRat(q)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);  // throws on zero divisor
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar inv() const;
    Scalar conj() const;
    Scalar pow(int e) const;
    Scalar substitute(int v, const Rat& value) const;

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    // canonical text: "num" when the denominator is 1, else "(num)/(den)"
    std::string str() const;

  private:
    Poly num_;
    Poly den_ = Poly::one();
};

// Parses +, -, *, /, ^, parentheses, integers, i, and the variable names,
// with implicit multiplication by juxtaposition ("2h", "h(r-h^2)").
Scalar parse_scalar(std::string_view text);
Rat parse_rational(std::string_view text);

}  // namespace hmink
