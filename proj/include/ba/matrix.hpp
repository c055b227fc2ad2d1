#pragma once

#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "ba/errors.hpp"
#include "ba/field.hpp"

namespace ba {

/// Dense matrix over an exact field. Values are immutable in spirit: the
/// algorithms below copy their input and never mutate arguments.
template <FieldType F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix(const F& field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), field.zero()) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }

    static Matrix identity(const F& field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Element& operator()(int i, int j) {
        check_index(i, j);
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const Element& operator()(int i, int j) const {
        check_index(i, j);
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_upper_triangular() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < std::min(i, cols_); ++j)
                if (!is_zero((*this)(i, j))) return false;
        return true;
    }

    Matrix transposed() const {
        Matrix t(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix out(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Element& a = (*this)(i, k);
                if (is_zero(a)) continue;
                for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

    /// Matrix-vector product A*x.
    std::vector<Element> apply(const std::vector<Element>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<Element> out(static_cast<std::size_t>(rows_), field_.zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.e_.size(); ++k)
            if (!(a.e_[k] == b.e_[k])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (int i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " ") << "[";
            for (int j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]" << (i + 1 == m.rows_ ? "]" : "\n");
        }
        return os;
    }

private:
    void check_index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw IndexOutOfRange("matrix index out of range");
    }

    F field_;
    int rows_, cols_;
    std::vector<Element> e_;
};

/// Square block of A with rows 0..j-i and columns i..j. A itself must be
/// square of size d+1 with 0 <= i <= j <= d; the block at (j,j) is the 1x1
/// [A_{0j}], and the block at (0,d) is A.
template <FieldType F>
Matrix<F> window(const Matrix<F>& a, int i, int j) {
    if (!a.is_square()) throw DimensionMismatch("window of a non-square matrix");
    int d = a.rows() - 1;
    if (i < 0 || j > d || i > j) throw IndexOutOfRange("window indices must satisfy 0 <= i <= j <= d");
    Matrix<F> w(a.field(), j - i + 1, j - i + 1);
    for (int k = 0; k <= j - i; ++k)
        for (int l = i; l <= j; ++l) w(k, l - i) = a(k, l);
    return w;
}

/// Exact determinant by Gaussian elimination with exact division.
/// The empty 0x0 matrix has determinant 1.
template <FieldType F>
typename F::Element det(const Matrix<F>& a) {
    if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const F& f = a.field();
    int n = a.rows();
    Matrix<F> m = a;
    auto result = f.one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!is_zero(m(row, col))) { pivot = row; break; }
        if (pivot < 0) return f.zero();
        if (pivot != col) {
            for (int j = col; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            result = -result;
        }
        result = result * m(col, col);
        for (int row = col + 1; row < n; ++row) {
            if (is_zero(m(row, col))) continue;
            auto factor = m(row, col) / m(col, col);
            for (int j = col; j < n; ++j) m(row, j) -= factor * m(col, j);
        }
    }
    return result;
}

namespace detail {

// Gauss-Jordan to reduced row-echelon form; returns pivot columns.
template <FieldType F>
std::vector<int> rref_in_place(Matrix<F>& m) {
    const F& f = m.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (!is_zero(m(r, col))) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
        auto inv = f.one() / m(row, col);
        for (int j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            auto factor = m(r, col);
            for (int j = 0; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

/// Unique reduced row-echelon form (same shape; zero rows at the bottom).
template <FieldType F>
Matrix<F> rref(const Matrix<F>& a) {
    Matrix<F> m = a;
    detail::rref_in_place(m);
    return m;
}

template <FieldType F>
int rank(const Matrix<F>& a) {
    Matrix<F> m = a;
    return static_cast<int>(detail::rref_in_place(m).size());
}

/// Basis of the right null space {x : A x = 0}, returned as the rows of a
/// matrix in reduced row-echelon form (0 rows when the kernel is trivial).
template <FieldType F>
Matrix<F> kernel(const Matrix<F>& a) {
    const F& f = a.field();
    Matrix<F> m = a;
    std::vector<int> pivots = detail::rref_in_place(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    int n_free = a.cols() - static_cast<int>(pivots.size());
    Matrix<F> basis(f, n_free, a.cols());
    int row = 0;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        basis(row, c) = f.one();
        for (std::size_t k = 0; k < pivots.size(); ++k) basis(row, pivots[k]) = -m(static_cast<int>(k), c);
        ++row;
    }
    detail::rref_in_place(basis);
    return basis;
}

/// Solves A x = b for square nonsingular A.
template <FieldType F>
std::vector<typename F::Element> linsolve(const Matrix<F>& a, const std::vector<typename F::Element>& b) {
    if (!a.is_square()) throw DimensionMismatch("linsolve requires a square matrix");
    if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("right-hand side has wrong length");
    int n = a.rows();
    Matrix<F> aug(a.field(), n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::vector<int> pivots = detail::rref_in_place(aug);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() == n))
        throw SingularMatrix("linsolve on a singular matrix");
    std::vector<typename F::Element> x(static_cast<std::size_t>(n), a.field().zero());
    for (int i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

template <FieldType F>
Matrix<F> inverse(const Matrix<F>& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    int n = a.rows();
    Matrix<F> aug(a.field(), n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = a.field().one();
    }
    std::vector<int> pivots = detail::rref_in_place(aug);
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
        throw SingularMatrix("inverse of a singular matrix");
    Matrix<F> inv(a.field(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// First singular window in lexicographic (i, j) order; scans only the
/// right-anchored windows (j = d) when right_anchored_only is set.
template <FieldType F>
std::optional<std::pair<int, int>> first_singular_window(const Matrix<F>& a, bool right_anchored_only = false) {
    if (!a.is_square()) throw DimensionMismatch("windows of a non-square matrix");
    int d = a.rows() - 1;
    for (int i = 0; i <= d; ++i)
        for (int j = right_anchored_only ? d : i; j <= d; ++j)
            if (is_zero(det(window(a, i, j)))) return std::make_pair(i, j);
    return std::nullopt;
}

/// True iff every right-anchored window A[i,d] is invertible.
template <FieldType F>
bool is_good(const Matrix<F>& a) {
    return !first_singular_window(a, true).has_value();
}

/// True iff every window A[i,j], 0 <= i <= j <= d, is invertible.
template <FieldType F>
bool is_very_good(const Matrix<F>& a) {
    return !first_singular_window(a, false).has_value();
}

}  // namespace ba
