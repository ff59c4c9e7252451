#pragma once

#include <vector>

#include "mop/ratfun.hpp"

namespace mop {

// Dense rectangular matrix over an exact coefficient ring T.
// T is one of CRat, Poly, RatFun; dimensions are fixed at construction.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw arith_error("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (!is_square()) return false;
        return *this == identity(rows_);
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw arith_error("matrix size mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& f = a.at(i, k);
                if (f.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += f * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& v : r.a_) v = v * s;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // conjugate transpose, with conj acting coefficientwise
    Matrix conj_transpose() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = conj(at(i, j));
        return r;
    }

    template <typename F>
    auto map(F&& fn) const {
        using U = std::decay_t<decltype(fn(std::declval<const T&>()))>;
        Matrix<U> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(i, j) = fn(at(i, j));
        return r;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw arith_error("matrix shape mismatch");
    }
    int rows_, cols_;
    std::vector<T> a_;
};

using CMat = Matrix<CRat>;
using PolyMat = Matrix<Poly>;
using RFMat = Matrix<RatFun>;

// Exact Gaussian elimination over a field (T = CRat or RatFun).

template <typename T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw arith_error("determinant of non-square matrix");
    int n = m.rows();
    T det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return T(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        T inv = T(1) / m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            T f = m.at(r, col) * inv;
            for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return det;
}

// Solves A X = B; errors when A is singular.
template <typename T>
Matrix<T> linear_solve(Matrix<T> a, Matrix<T> b) {
    if (!a.is_square() || a.rows() != b.rows()) throw arith_error("bad linear system shape");
    int n = a.rows(), w = b.cols();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw arith_error("singular linear system");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            for (int j = 0; j < w; ++j) std::swap(b.at(pivot, j), b.at(col, j));
        }
        T inv = T(1) / a.at(col, col);
        for (int j = 0; j < n; ++j) a.at(col, j) = a.at(col, j) * inv;
        for (int j = 0; j < w; ++j) b.at(col, j) = b.at(col, j) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            T f = a.at(r, col);
            for (int j = 0; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
            for (int j = 0; j < w; ++j) b.at(r, j) -= f * b.at(col, j);
        }
    }
    return b;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw arith_error("inverse of non-square matrix");
    try {
        return linear_solve(m, Matrix<T>::identity(m.rows()));
    } catch (const arith_error&) {
        throw arith_error("singular matrix");
    }
}

// Consistent least-structure solve of a possibly rectangular system A x = b
// (single column). Returns false when inconsistent. free_vars, when given,
// receives the dimension of the solution space.
template <typename T>
bool solve_consistent(Matrix<T> a, Matrix<T> b, Matrix<T>& x_out, int* free_vars = nullptr) {
    int rows = a.rows(), cols = a.cols();
    if (b.rows() != rows || b.cols() != 1) throw arith_error("bad rhs shape");
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
            std::swap(b.at(pivot, 0), b.at(rank, 0));
        }
        T inv = T(1) / a.at(rank, col);
        for (int j = 0; j < cols; ++j) a.at(rank, j) = a.at(rank, j) * inv;
        b.at(rank, 0) = b.at(rank, 0) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a.at(r, col).is_zero()) continue;
            T f = a.at(r, col);
            for (int j = 0; j < cols; ++j) a.at(r, j) -= f * a.at(rank, j);
            b.at(r, 0) -= f * b.at(rank, 0);
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (!b.at(r, 0).is_zero()) return false;
    if (free_vars) *free_vars = cols - rank;
    x_out = Matrix<T>(cols, 1);
    for (int r = 0; r < rank; ++r) x_out.at(pivot_col[r], 0) = b.at(r, 0);
    return true;
}

// Basis of the right nullspace of A, one column per basis vector.
template <typename T>
std::vector<Matrix<T>> nullspace(Matrix<T> a) {
    int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        T inv = T(1) / a.at(rank, col);
        for (int j = 0; j < cols; ++j) a.at(rank, j) = a.at(rank, j) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a.at(r, col).is_zero()) continue;
            T f = a.at(r, col);
            for (int j = 0; j < cols; ++j) a.at(r, j) -= f * a.at(rank, j);
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<Matrix<T>> basis;
    for (int col = 0; col < cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        Matrix<T> v(cols, 1);
        v.at(col, 0) = T(1);
        for (int c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v.at(c, 0) = -a.at(pivot_of_col[c], col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// conversions
CMat poly_mat_coeff(const PolyMat& m, int k);
PolyMat cmat_to_poly(const CMat& m);
RFMat cmat_to_rf(const CMat& m);
RFMat poly_to_rf(const PolyMat& m);
PolyMat rf_to_poly(const RFMat& m);  // requires polynomial entries
CMat rf_to_cmat(const RFMat& m);     // requires constant entries
int poly_mat_degree(const PolyMat& m);
CMat eval_poly_mat(const PolyMat& m, const CRat& x);

// Hermitian test for exact matrices: M equals its conjugate transpose.
template <typename T>
bool is_hermitian(const Matrix<T>& m) {
    return m.is_square() && m == m.conj_transpose();
}

// Exact positive-definiteness of a Hermitian CRat matrix via leading
// principal minors (Sylvester).
bool is_positive_definite(const CMat& m);

}  // namespace mop
