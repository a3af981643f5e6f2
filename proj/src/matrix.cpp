#include "hmink/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hmink {

namespace {
Pairing pairing_for_dim(int n) {
    if (n == 4) return Pairing::pair2;
    if (n == 16) return Pairing::pair4;
    return Pairing::none;
}
}  // namespace

ExactMatrix::ExactMatrix(int rows, int cols, Pairing p)
    : rows_(rows), cols_(cols), pairing_(p), e_(size_t(rows) * cols) {}

ExactMatrix ExactMatrix::identity(int n, Pairing p) {
    ExactMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::permutation(int dim2) {
    if (dim2 != 2 && dim2 != 4) throw Error("permutation operator defined for dim2 in {2,4}");
    int n = dim2 * dim2;
    ExactMatrix m(n, n, dim2 == 2 ? Pairing::pair2 : Pairing::pair4);
    for (int i = 0; i < dim2; ++i)
        for (int j = 0; j < dim2; ++j) m.at(i * dim2 + j, j * dim2 + i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::with_pairing(Pairing p) const {
    ExactMatrix m = *this;
    m.pairing_ = p;
    return m;
}

ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix shape mismatch in +");
    ExactMatrix m = x;
    for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] += y.e_[k];
    return m;
}

ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix shape mismatch in -");
    ExactMatrix m = x;
    for (size_t k = 0; k < m.e_.size(); ++k) m.e_[k] -= y.e_[k];
    return m;
}

ExactMatrix ExactMatrix::scale(const Scalar& c) const {
    ExactMatrix m = *this;
    for (auto& e : m.e_) e *= c;
    return m;
}

ExactMatrix ExactMatrix::mul_serial(const ExactMatrix& y) const {
    if (cols_ != y.rows_) throw Error("matrix shape mismatch in *");
    ExactMatrix m(rows_, y.cols_, pairing_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < y.cols_; ++j) {
            Scalar acc;
            for (int k = 0; k < cols_; ++k) {
                const Scalar& a = at(i, k);
                const Scalar& b = y.at(k, j);
                if (!a.is_zero() && !b.is_zero()) acc += a * b;
            }
            m.at(i, j) = std::move(acc);
        }
    return m;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& y) const {
    if (cols_ != y.rows_) throw Error("matrix shape mismatch in *");
    if (size_t(rows_) * y.cols_ < 64) return mul_serial(y);
    ExactMatrix m(rows_, y.cols_, pairing_);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < y.cols_; ++j) {
            Scalar acc;
            for (int k = 0; k < cols_; ++k) {
                const Scalar& a = at(i, k);
                const Scalar& b = y.at(k, j);
                if (!a.is_zero() && !b.is_zero()) acc += a * b;
            }
            m.at(i, j) = std::move(acc);
        }
    return m;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& y) const {
    ExactMatrix m(rows_ * y.rows_, cols_ * y.cols_,
                  pairing_for_dim(rows_ * y.rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            for (int k = 0; k < y.rows_; ++k)
                for (int l = 0; l < y.cols_; ++l)
                    m.at(i * y.rows_ + k, j * y.cols_ + l) = at(i, j) * y.at(k, l);
        }
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(cols_, rows_, pairing_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix m = *this;
    for (auto& e : m.e_) e = e.conj();
    return m;
}

ExactMatrix ExactMatrix::conj_transpose() const { return conj().transpose(); }

void ExactMatrix::require_pair4() const {
    if (rows_ != 4 || cols_ != 4) throw Error("partial operation requires a 4x4 pair-indexed matrix");
}

ExactMatrix ExactMatrix::t1() const {
    require_pair4();
    ExactMatrix m(4, 4, Pairing::pair2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    m.at(pair_flat(i, j), pair_flat(k, l)) = pp(k, j, i, l);
    return m;
}

ExactMatrix ExactMatrix::t2() const {
    require_pair4();
    ExactMatrix m(4, 4, Pairing::pair2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    m.at(pair_flat(i, j), pair_flat(k, l)) = pp(i, l, k, j);
    return m;
}

ExactMatrix ExactMatrix::partial_trace_space2() const {
    require_pair4();
    ExactMatrix m(2, 2);
    for (int i = 1; i <= 2; ++i)
        for (int k = 1; k <= 2; ++k) {
            Scalar acc;
            for (int j = 1; j <= 2; ++j) acc += pp(i, j, k, j);
            m.at(i - 1, k - 1) = acc;
        }
    return m;
}

Scalar ExactMatrix::trace() const {
    if (rows_ != cols_) throw Error("trace of non-square matrix");
    Scalar acc;
    for (int i = 0; i < rows_; ++i) acc += at(i, i);
    return acc;
}

// Fraction-free (Bareiss) forward elimination on the denominator-cleared
// augmented system, then back substitution over the fraction field.
ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    const int n = rows_;
    // clear denominators row by row: row_i(A) * D_i is polynomial
    std::vector<std::vector<Poly>> a(size_t(n), std::vector<Poly>(size_t(2 * n)));
    for (int i = 0; i < n; ++i) {
        Poly D = Poly::one();
        for (int j = 0; j < n; ++j) {
            const Poly& d = at(i, j).den();
            Poly g = Poly::gcd(D, d);
            D = *(D * d).divexact(g);
        }
        for (int j = 0; j < n; ++j) {
            const Scalar& s = at(i, j);
            a[i][j] = s.num() * *D.divexact(s.den());
        }
        a[i][size_t(n) + i] = D;
    }
    Poly prev = Poly::one();
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (!a[i][k].is_zero()) { p = i; break; }
        if (p < 0) {
            throw SingularError("singular matrix: pivot polynomial vanishes in column " +
                                std::to_string(k + 1) + " (all candidates reduce to 0)");
        }
        std::swap(a[k], a[p]);
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < 2 * n; ++j) {
                Poly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto q = t.divexact(prev);
                if (!q) throw Error("fraction-free elimination lost exactness");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k];
    }
    // back substitution over the fraction field
    ExactMatrix inv(n, n, pairing_);
    for (int c = 0; c < n; ++c) {
        std::vector<Scalar> x(size_t(n));
        for (int i = n - 1; i >= 0; --i) {
            Scalar acc(Poly(a[i][size_t(n) + c]));
            for (int j = i + 1; j < n; ++j) acc -= Scalar(Poly(a[i][j])) * x[j];
            x[i] = acc / Scalar(Poly(a[i][i]));
        }
        for (int i = 0; i < n; ++i) inv.at(i, c) = std::move(x[i]);
    }
    return inv;
}

int ExactMatrix::rank() const {
    std::vector<std::vector<Scalar>> a(size_t(rows_), std::vector<Scalar>(size_t(cols_)));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) a[i][j] = at(i, j);
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int p = -1;
        for (int i = rank; i < rows_; ++i)
            if (!a[i][col].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[rank], a[p]);
        Scalar inv_piv = a[rank][col].inv();
        for (int j = col; j < cols_; ++j) a[rank][j] *= inv_piv;
        for (int i = 0; i < rows_; ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            Scalar f = a[i][col];
            for (int j = col; j < cols_; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

ExactMatrix ExactMatrix::substitute(int v, const Rat& value) const {
    ExactMatrix m = *this;
    for (auto& e : m.e_) e = e.substitute(v, value);
    return m;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool ExactMatrix::is_zero() const {
    for (auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (size_t k = 0; k < x.e_.size(); ++k)
        if (x.e_[k] != y.e_[k]) return false;
    return true;
}

std::string ExactMatrix::str() const {
    std::vector<std::string> cells(e_.size());
    std::vector<size_t> width(size_t(cols_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            cells[size_t(i) * cols_ + j] = at(i, j).str();
            width[size_t(j)] = std::max(width[size_t(j)], cells[size_t(i) * cols_ + j].size());
        }
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) {
            const std::string& c = cells[size_t(i) * cols_ + j];
            os << c << std::string(width[size_t(j)] - c.size() + (j + 1 < cols_ ? 2 : 0), ' ');
        }
        os << "]\n";
    }
    return os.str();
}

ExactMatrix matrix_from_strings(int rows, int cols, const std::vector<std::string>& entries, Pairing p) {
    if (entries.size() != size_t(rows) * size_t(cols)) throw Error("entry count mismatch");
    ExactMatrix m(rows, cols, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = parse_scalar(entries[size_t(i) * cols + j]);
    return m;
}

}  // namespace hmink
