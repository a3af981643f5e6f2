#include "hmink/rmat.hpp"

namespace hmink {
namespace rmat {

namespace {

ExactMatrix from4(const std::vector<std::string>& rows) {
    return matrix_from_strings(4, 4, rows, Pairing::pair2);
}
ExactMatrix from2(const std::vector<std::string>& rows) { return matrix_from_strings(2, 2, rows); }

const ExactMatrix& perm4() {
    static const ExactMatrix p = ExactMatrix::permutation(2);
    return p;
}

ExactMatrix rh() {
    return from4({"1", "-h", "h", "h^2",
                  "0", "1", "0", "-h",
                  "0", "0", "1", "h",
                  "0", "0", "0", "1"});
}

ExactMatrix r3(Deformation d) {
    if (d == Deformation::j1)
        return from4({"1", "0", "0", "0",
                      "0", "1", "r", "0",
                      "0", "0", "1", "0",
                      "0", "0", "0", "1"});
    return from4({"1", "0", "-h", "0",
                  "-h", "1", "0", "h",
                  "0", "0", "1", "0",
                  "0", "0", "h", "1"});
}

ExactMatrix epsh() { return from2({"h", "1", "-1", "0"}); }
ExactMatrix epshinv() { return from2({"0", "-1", "1", "h"}); }

// h-trace weight: D_h = tr_(2)( P ((Rh^t1)^-1)^t1 )
ExactMatrix dh() { return (perm4() * rh().t1().inverse().t1()).partial_trace_space2(); }

ExactMatrix repshat(Deformation d) {
    ExactMatrix jac = ExactMatrix::identity(2).kron(epshinv().transpose());
    ExactMatrix jacd = ExactMatrix::identity(2).kron(epshinv().conj_transpose());
    return jac * (perm4() * r3(d)) * jacd;
}

ExactMatrix twist_f() {
    return from4({"1", "h/2", "-h/2", "0",
                  "0", "1", "0", "h/2",
                  "0", "0", "1", "-h/2",
                  "0", "0", "0", "1"});
}

ExactMatrix twist_g() {
    return from4({"1", "0", "0", "0",
                  "h/2", "1", "0", "0",
                  "-h/2", "0", "1", "0",
                  "h^2/2", "h/2", "-h/2", "1"});
}

}  // namespace

std::optional<Name> name_from_string(const std::string& s) {
    static const std::pair<const char*, Name> table[] = {
        {"rh", Name::rh}, {"rhat", Name::rhat}, {"r2", Name::r2}, {"r3", Name::r3},
        {"r4", Name::r4}, {"epsh", Name::epsh}, {"epshinv", Name::epshinv},
        {"dh", Name::dh}, {"dhtilde", Name::dhtilde}, {"phplus", Name::phplus},
        {"phminus", Name::phminus}, {"f", Name::f}, {"g", Name::g},
        {"repshat", Name::repshat}, {"repshatinv", Name::repshatinv},
    };
    for (auto& [k, v] : table)
        if (s == k) return v;
    return std::nullopt;
}

const char* to_string(Name n) {
    switch (n) {
        case Name::rh: return "rh";
        case Name::rhat: return "rhat";
        case Name::r2: return "r2";
        case Name::r3: return "r3";
        case Name::r4: return "r4";
        case Name::epsh: return "epsh";
        case Name::epshinv: return "epshinv";
        case Name::dh: return "dh";
        case Name::dhtilde: return "dhtilde";
        case Name::phplus: return "phplus";
        case Name::phminus: return "phminus";
        case Name::f: return "f";
        case Name::g: return "g";
        case Name::repshat: return "repshat";
        case Name::repshatinv: return "repshatinv";
    }
    return "?";
}

bool needs_deformation(Name n) {
    return n == Name::r2 || n == Name::r3 || n == Name::repshat || n == Name::repshatinv;
}

ExactMatrix build(Name n, std::optional<Deformation> d) {
    if (needs_deformation(n) && !d)
        throw Error(std::string("matrix '") + to_string(n) + "' requires a deformation case");
    switch (n) {
        case Name::rh: return rh();
        case Name::rhat: return perm4() * rh();
        case Name::r2: return perm4() * r3(*d) * perm4();
        case Name::r3: return r3(*d);
        case Name::r4: return rh().conj_transpose();
        case Name::epsh: return epsh();
        case Name::epshinv: return epshinv();
        case Name::dh: return dh();
        case Name::dhtilde: return dh().conj_transpose();
        case Name::phplus: return (ExactMatrix::identity(4, Pairing::pair2) + perm4() * rh()).scale(Scalar(GRat(Rat(1, 2))));
        case Name::phminus: return (ExactMatrix::identity(4, Pairing::pair2) - perm4() * rh()).scale(Scalar(GRat(Rat(1, 2))));
        case Name::f: return twist_f();
        case Name::g: return twist_g();
        case Name::repshat: return repshat(*d);
        case Name::repshatinv: return repshat(*d).inverse();
    }
    throw Error("unknown matrix name");
}

ExactMatrix embed12(const ExactMatrix& R) { return R.kron(ExactMatrix::identity(2)); }
ExactMatrix embed23(const ExactMatrix& R) { return ExactMatrix::identity(2).kron(R); }
ExactMatrix embed13(const ExactMatrix& R) {
    ExactMatrix s23 = ExactMatrix::identity(2).kron(ExactMatrix::permutation(2));
    return s23 * embed12(R) * s23;
}

namespace {
// first differing entry as a witness string
std::string diff_witness(const ExactMatrix& a, const ExactMatrix& b) {
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j))
                return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       "): lhs = " + a.at(i, j).str() + ", rhs = " + b.at(i, j).str();
    return "";
}
}  // namespace

CheckReport check_ybe(const ExactMatrix& R) {
    if (R.rows() != 4 || R.cols() != 4) throw Error("Yang-Baxter check requires a 4x4 matrix");
    ExactMatrix lhs = embed12(R) * embed13(R) * embed23(R);
    ExactMatrix rhs = embed23(R) * embed13(R) * embed12(R);
    if (lhs == rhs) return CheckReport::ok("yang-baxter");
    return CheckReport::fail("yang-baxter", diff_witness(lhs, rhs));
}

CheckReport check_frt_mixed(const ExactMatrix& Rh, const ExactMatrix& R3) {
    if (Rh.rows() != 4 || R3.rows() != 4) throw Error("mixed FRT check requires 4x4 matrices");
    ExactMatrix lhs = embed12(Rh) * embed13(R3) * embed23(R3);
    ExactMatrix rhs = embed23(R3) * embed13(R3) * embed12(Rh);
    if (lhs == rhs) return CheckReport::ok("frt-mixed");
    return CheckReport::fail("frt-mixed", diff_witness(lhs, rhs));
}

CheckReport check_projectors() {
    ExactMatrix pp = build(Name::phplus), pm = build(Name::phminus);
    ExactMatrix rhat = build(Name::rhat);
    ExactMatrix id = ExactMatrix::identity(4, Pairing::pair2);
    auto bad = [](std::string w) { return CheckReport::fail("projectors", std::move(w)); };
    if (pp * pp != pp) return bad("P+ is not idempotent");
    if (pm * pm != pm) return bad("P- is not idempotent");
    if (!(pp * pm).is_zero() || !(pm * pp).is_zero()) return bad("P+ P- != 0");
    if (pp - pm != rhat) return bad("P+ - P- != Rhat");
    if (!(rhat * rhat).is_identity()) return bad("Rhat^2 != I");
    if (pp.rank() != 3) return bad("rank P+ != 3");
    if (pm.rank() != 1) return bad("rank P- != 1");
    // P-_{ij,kl} = -1/2 eps_{ij} epsinv_{kl}
    ExactMatrix eps = build(Name::epsh), einv = build(Name::epshinv);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    Scalar want = Scalar(GRat(Rat(-1, 2))) * eps.at(i - 1, j - 1) * einv.at(k - 1, l - 1);
                    if (pm.pp(i, j, k, l) != want)
                        return bad("P- symplectic outer product fails at ((" + std::to_string(i) +
                                   std::to_string(j) + "),(" + std::to_string(k) + std::to_string(l) + "))");
                }
    // (P- P-^dag)^2 = ((2+h^2)/2)^2 P- P-^dag
    ExactMatrix ppd = pm * pm.conj_transpose();
    Scalar c = parse_scalar("((2+h^2)/2)^2");
    if (ppd * ppd != ppd.scale(c)) return bad("projector square identity for P- P-^dag fails");
    return CheckReport::ok("projectors");
}

CheckReport check_twist4(const ExactMatrix& R, const ExactMatrix& F) {
    const ExactMatrix& p = perm4();
    ExactMatrix rhs = F * p * F.inverse() * p;
    if (R == rhs) return CheckReport::ok("twist4");
    return CheckReport::fail("twist4", diff_witness(R, rhs));
}

CheckReport check_triangular4(const ExactMatrix& R, const std::string& label) {
    const ExactMatrix& p = perm4();
    if ((R * (p * R * p)).is_identity()) return CheckReport::ok("triangular:" + label);
    return CheckReport::fail("triangular:" + label, "R (P R P) != I");
}

}  // namespace rmat
}  // namespace hmink
