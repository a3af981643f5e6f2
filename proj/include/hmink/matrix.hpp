#pragma once

#include <vector>

#include "hmink/scalar.hpp"

namespace hmink {

// Pairing tag for tensor-square axes: an axis of size 4 is the flattened index
// pair (i,j), i,j in {1,2}, flat = 2(i-1)+j; size 16 is the flattened pair of
// pairs applied recursively.
enum class Pairing { none, pair2, pair4 };

inline int pair_flat(int i, int j) { return 2 * (i - 1) + (j - 1); }

// Dense matrix over Scalar. Value type; all operations pure and exact.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols, Pairing p = Pairing::none);

    static ExactMatrix identity(int n, Pairing p = Pairing::none);
    // permutation operator on (C^dim2)^{x2}: P (A x B) P = B x A, P^2 = I.
    // dim2 = 2 gives the 4x4 pair swap, dim2 = 4 the 16x16 double-pair swap.
    static ExactMatrix permutation(int dim2);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Pairing pairing() const { return pairing_; }
    ExactMatrix with_pairing(Pairing p) const;

    Scalar& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    // pair-indexed access on a 4x4 matrix: rows (ij), cols (kl), i..l in {1,2}
    const Scalar& pp(int i, int j, int k, int l) const { return at(pair_flat(i, j), pair_flat(k, l)); }

    friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y);
    friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y);
    ExactMatrix scale(const Scalar& c) const;
    ExactMatrix mul(const ExactMatrix& y) const;         // OpenMP above a size threshold
    ExactMatrix mul_serial(const ExactMatrix& y) const;  // reference implementation
    friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) { return x.mul(y); }

    ExactMatrix kron(const ExactMatrix& y) const;  // (A x B)_{(ik),(jl)} = A_ij B_kl
    ExactMatrix transpose() const;
    ExactMatrix conj_transpose() const;
    ExactMatrix conj() const;
    ExactMatrix t1() const;  // partial transpose in space 1 (4x4 pair-indexed)
    ExactMatrix t2() const;  // partial transpose in space 2
    ExactMatrix partial_trace_space2() const;  // (tr2 A)_{ik} = sum_j A_{(ij),(kj)}
    ExactMatrix inverse() const;  // fraction-free elimination; throws SingularError
    int rank() const;             // generic rank over the fraction field
    Scalar trace() const;

    ExactMatrix substitute(int v, const Rat& value) const;
    bool is_identity() const;
    bool is_zero() const;
    friend bool operator==(const ExactMatrix& x, const ExactMatrix& y);
    friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

    std::string str() const;  // aligned text table

  private:
    int rows_ = 0, cols_ = 0;
    Pairing pairing_ = Pairing::none;
    std::vector<Scalar> e_;
    void require_pair4() const;
};

struct SingularError : Error {
    explicit SingularError(const std::string& what) : Error(what) {}
};

// builds a matrix from row-major entry expressions (parsed)
ExactMatrix matrix_from_strings(int rows, int cols, const std::vector<std::string>& entries,
                                Pairing p = Pairing::none);

}  // namespace hmink
