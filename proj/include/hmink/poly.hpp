#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hmink/gaussian.hpp"

namespace hmink {

// Fixed variable alphabet. h, r are the deformation parameters; z, l, a, u, v
// are auxiliary symbols used by the representation module (central values,
// one-dimensional representation parameters).
inline constexpr int kNumVars = 7;
enum Var : int { var_h = 0, var_r, var_z, var_l, var_a, var_u, var_v };
extern const char* const kVarNames[kNumVars];

// Monomial with exponents packed into one 64-bit key:
//   (total degree << 56) | e_h << 48 | e_r << 40 | ... | e_v
// so unsigned comparison of keys is graded-lex order with h highest.
struct Mono {
    uint64_t key = 0;

    static Mono one() { return {}; }
    static Mono var(int v, int e = 1);

    int deg() const { return int(key >> 56); }
    int exp(int v) const { return int((key >> (8 * (6 - v))) & 0xff); }
    bool is_one() const { return key == 0; }
    bool divides(const Mono& m) const;
    Mono mul(const Mono& m) const;  // throws on exponent overflow
    Mono div(const Mono& m) const;  // this/m; pre: m.divides(*this)
    static Mono gcd(const Mono& x, const Mono& y);
    std::string str() const;

    auto operator<=>(const Mono&) const = default;
};

struct Term {
    Mono m;
    GRat c;
};

// Sparse multivariate polynomial over Gaussian rationals with terms kept in
// descending graded-lex order. Value type; all operations pure.
class Poly {
  public:
    Poly() = default;
    explicit Poly(GRat c);
    static Poly zero() { return {}; }
    static Poly one() { return Poly(GRat(1)); }
    static Poly constant(GRat c) { return Poly(std::move(c)); }
    static Poly variable(int v, int e = 1);
    static Poly from_terms(std::vector<Term> ts);  // sorts and merges

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    GRat constant_value() const;  // pre: is_constant
    int deg() const { return terms_.empty() ? -1 : terms_.front().m.deg(); }
    int deg_in(int v) const;
    size_t num_terms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lt() const;  // leading term; pre: !is_zero
    GRat coeff(const Mono& m) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& x, const Poly& y);
    friend Poly operator-(const Poly& x, const Poly& y);
    friend Poly operator*(const Poly& x, const Poly& y);
    Poly scale(const GRat& c) const;
    Poly mul_mono(const Mono& m, const GRat& c) const;
    Poly pow(unsigned e) const;
    Poly conj() const;
    Poly substitute(int v, const Rat& value) const;

    friend bool operator==(const Poly& x, const Poly& y);
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    // division / gcd machinery (gcd is monic; constants have gcd 1)
    std::optional<Poly> divexact(const Poly& divisor) const;
    static Poly gcd(const Poly& x, const Poly& y);
    Poly monic() const;  // scale so the leading coefficient is 1

    std::string str() const;

  private:
    std::vector<Term> terms_;
    void normalize();  // sort desc, merge, drop zeros
};

}  // namespace hmink
