#include "hmink/poly.hpp"

#include <algorithm>
#include <map>

namespace hmink {

const char* const kVarNames[kNumVars] = {"h", "r", "z", "l", "a", "u", "v"};

Mono Mono::var(int v, int e) {
    if (v < 0 || v >= kNumVars) throw Error("variable index out of range");
    if (e < 0 || e > 255) throw Error("monomial exponent out of range");
    Mono m;
    m.key = (uint64_t(e) << 56) | (uint64_t(e) << (8 * (6 - v)));
    return m;
}

bool Mono::divides(const Mono& m) const {
    for (int v = 0; v < kNumVars; ++v)
        if (exp(v) > m.exp(v)) return false;
    return true;
}

Mono Mono::mul(const Mono& m) const {
    if (deg() + m.deg() > 255) throw Error("monomial degree overflow");
    Mono out;
    out.key = key + m.key;  // packed bytes cannot carry once total degree fits
    return out;
}

Mono Mono::div(const Mono& m) const {
    if (!m.divides(*this)) throw Error("monomial division is not exact");
    Mono out;
    out.key = key - m.key;
    return out;
}

Mono Mono::gcd(const Mono& x, const Mono& y) {
    Mono out;
    uint64_t k = 0;
    int d = 0;
    for (int v = 0; v < kNumVars; ++v) {
        int e = std::min(x.exp(v), y.exp(v));
        k |= uint64_t(e) << (8 * (6 - v));
        d += e;
    }
    out.key = k | (uint64_t(d) << 56);
    return out;
}

std::string Mono::str() const {
    std::string s;
    for (int v = 0; v < kNumVars; ++v) {
        int e = exp(v);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += kVarNames[v];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

Poly::Poly(GRat c) {
    if (!c.is_zero()) terms_.push_back({Mono::one(), std::move(c)});
}

Poly Poly::variable(int v, int e) {
    Poly p;
    if (e == 0) return one();
    p.terms_.push_back({Mono::var(v, e), GRat(1)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.m.key > b.m.key; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_one() && terms_[0].c.is_one();
}

GRat Poly::constant_value() const {
    if (terms_.empty()) return GRat(0);
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_[0].c;
}

int Poly::deg_in(int v) const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.m.exp(v));
    return d;
}

const Term& Poly::lt() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return terms_.front();
}

GRat Poly::coeff(const Mono& m) const {
    for (auto& t : terms_)
        if (t.m == m) return t.c;
    return GRat(0);
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.c = -t.c;
    return out;
}

Poly operator+(const Poly& x, const Poly& y) {
    // merge of two descending term lists
    Poly out;
    out.terms_.reserve(x.terms_.size() + y.terms_.size());
    size_t i = 0, j = 0;
    while (i < x.terms_.size() && j < y.terms_.size()) {
        if (x.terms_[i].m.key > y.terms_[j].m.key)
            out.terms_.push_back(x.terms_[i++]);
        else if (x.terms_[i].m.key < y.terms_[j].m.key)
            out.terms_.push_back(y.terms_[j++]);
        else {
            GRat c = x.terms_[i].c + y.terms_[j].c;
            if (!c.is_zero()) out.terms_.push_back({x.terms_[i].m, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < x.terms_.size(); ++i) out.terms_.push_back(x.terms_[i]);
    for (; j < y.terms_.size(); ++j) out.terms_.push_back(y.terms_[j]);
    return out;
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly::zero();
    std::map<uint64_t, Term> acc;
    for (auto& a : x.terms_)
        for (auto& b : y.terms_) {
            Mono m = a.m.mul(b.m);
            auto it = acc.find(m.key);
            if (it == acc.end())
                acc.emplace(m.key, Term{m, a.c * b.c});
            else
                it->second.c += a.c * b.c;
        }
    Poly out;
    out.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.c.is_zero()) out.terms_.push_back(std::move(it->second));
    return out;
}

Poly Poly::scale(const GRat& c) const {
    if (c.is_zero()) return zero();
    Poly out = *this;
    for (auto& t : out.terms_) t.c = t.c * c;
    return out;
}

Poly Poly::mul_mono(const Mono& m, const GRat& c) const {
    if (c.is_zero()) return zero();
    Poly out = *this;
    for (auto& t : out.terms_) {
        t.m = t.m.mul(m);
        t.c = t.c * c;
    }
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly out = one(), base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = (e >>= 1) ? base * base : base;
    }
    return out;
}

Poly Poly::conj() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.c = t.c.conj();
    return out;
}

Poly Poly::substitute(int v, const Rat& value) const {
    Poly out;
    std::vector<Term> ts;
    for (auto& t : terms_) {
        int e = t.m.exp(v);
        if (e == 0) {
            ts.push_back(t);
            continue;
        }
        Rat p(1);
        for (int k = 0; k < e; ++k) p *= value;
        Mono m = t.m.div(Mono::var(v, e));
        ts.push_back({m, t.c * GRat(p)});
    }
    return from_terms(std::move(ts));
}

bool operator==(const Poly& x, const Poly& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (size_t i = 0; i < x.terms_.size(); ++i)
        if (x.terms_[i].m != y.terms_[i].m || x.terms_[i].c != y.terms_[i].c) return false;
    return true;
}

std::optional<Poly> Poly::divexact(const Poly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    Poly rem = *this, quo;
    std::vector<Term> qt;
    const Term& dlt = divisor.lt();
    while (!rem.is_zero()) {
        const Term& rlt = rem.lt();
        if (!dlt.m.divides(rlt.m)) return std::nullopt;
        Term t{rlt.m.div(dlt.m), rlt.c / dlt.c};
        qt.push_back(t);
        rem = rem - divisor.mul_mono(t.m, t.c);
    }
    return from_terms(std::move(qt));
}

Poly Poly::monic() const {
    if (is_zero()) return zero();
    return scale(lt().c.inv());
}

namespace {

// univariate view in variable v: exponent -> coefficient polynomial
std::vector<Poly> coeffs_in(const Poly& p, int v) {
    std::vector<Poly> out(size_t(p.deg_in(v)) + 1);
    std::vector<std::vector<Term>> buckets(out.size());
    for (auto& t : p.terms()) {
        int e = t.m.exp(v);
        buckets[e].push_back({t.m.div(Mono::var(v, e)), t.c});
    }
    for (size_t e = 0; e < out.size(); ++e) out[e] = Poly::from_terms(std::move(buckets[e]));
    return out;
}

Poly recombine(const std::vector<Poly>& cs, int v) {
    Poly out;
    for (size_t e = 0; e < cs.size(); ++e)
        out = out + cs[e] * Poly::variable(v, int(e));
    return out;
}

int top_var(const Poly& p) {
    for (int v = kNumVars - 1; v >= 0; --v)
        if (p.deg_in(v) > 0) return v;
    return -1;
}

Poly content_of(const std::vector<Poly>& cs) {
    Poly g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : Poly::gcd(g, c);
        if (g.is_one()) break;
    }
    return g.is_zero() ? Poly::one() : g;
}

// pseudo-remainder of a by b in variable v (scaling factors are irrelevant
// because callers take primitive parts)
Poly prem(Poly a, const Poly& b, int v) {
    int db = b.deg_in(v);
    auto bc = coeffs_in(b, v);
    const Poly& lcb = bc[size_t(db)];
    while (!a.is_zero()) {
        int da = a.deg_in(v);
        if (da < db) break;
        auto ac = coeffs_in(a, v);
        const Poly& lca = ac[size_t(da)];
        a = a * lcb - b * (lca * Poly::variable(v, da - db));
    }
    return a;
}

}  // namespace

Poly Poly::gcd(const Poly& x, const Poly& y) {
    if (x.is_zero()) return y.monic();
    if (y.is_zero()) return x.monic();

    // split off the common monomial factor
    Mono mx = x.terms()[0].m, my = y.terms()[0].m;
    for (auto& t : x.terms()) mx = Mono::gcd(mx, t.m);
    for (auto& t : y.terms()) my = Mono::gcd(my, t.m);
    Mono shared = Mono::gcd(mx, my);
    Poly a = Poly::from_terms([&] {
        std::vector<Term> ts;
        for (auto& t : x.terms()) ts.push_back({t.m.div(mx), t.c});
        return ts;
    }());
    Poly b = Poly::from_terms([&] {
        std::vector<Term> ts;
        for (auto& t : y.terms()) ts.push_back({t.m.div(my), t.c});
        return ts;
    }());

    Poly mono_part = Poly::from_terms({{shared, GRat(1)}});
    if (a.is_constant() || b.is_constant()) return mono_part.monic();

    int v = std::max(top_var(a), top_var(b));
    auto ca = coeffs_in(a, v), cb = coeffs_in(b, v);
    Poly conta = content_of(ca), contb = content_of(cb);
    Poly ppa = *a.divexact(conta), ppb = *b.divexact(contb);
    Poly gc = gcd(conta, contb);

    Poly P = ppa, Q = ppb;
    if (P.deg_in(v) < Q.deg_in(v)) std::swap(P, Q);
    while (true) {
        if (Q.is_zero()) break;
        Poly R = prem(P, Q, v);
        P = Q;
        if (R.is_zero()) {
            Q = Poly::zero();
        } else {
            Q = *R.divexact(content_of(coeffs_in(R, v)));
        }
    }
    if (P.deg_in(v) == 0) return (mono_part * gc).monic();
    Poly pp = *P.divexact(content_of(coeffs_in(P, v)));
    return (mono_part * gc * pp).monic();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& t : terms_) {
        std::string cs;
        bool gauss = !t.c.is_real();
        bool neg = false;
        GRat c = t.c;
        if (!gauss && c.re < 0) {
            neg = true;
            c = -c;
        }
        if (t.m.is_one()) {
            cs = gauss ? "(" + c.str() + ")" : c.str();
        } else if (!gauss && c.re == 1) {
            cs = t.m.str();
        } else if (gauss) {
            cs = "(" + c.str() + ")*" + t.m.str();
        } else {
            cs = c.str() + "*" + t.m.str();
        }
        if (first) {
            s = (neg ? "-" : "") + cs;
            first = false;
        } else {
            s += (neg ? "-" : "+") + cs;
        }
    }
    return s;
}

}  // namespace hmink
