#pragma once

#include <array>
#include <utility>
#include <vector>

#include "ba/errors.hpp"
#include "ba/matrix.hpp"
#include "ba/triangle.hpp"

namespace ba {

/// Subspace of F^n in canonical form: the basis rows are the unique reduced
/// row-echelon form of any generating set, so equality of subspaces is
/// structural equality of bases.
template <FieldType F>
class Subspace {
public:
    using Element = typename F::Element;

    static Subspace zero(const F& field, int ambient) { return Subspace(Matrix<F>(field, 0, ambient)); }

    static Subspace full(const F& field, int ambient) {
        return Subspace(Matrix<F>::identity(field, ambient));
    }

    /// Row space of the given generators.
    static Subspace span(const Matrix<F>& generators) {
        Matrix<F> m = generators;
        int r = static_cast<int>(detail::rref_in_place(m).size());
        Matrix<F> basis(m.field(), r, m.cols());
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < m.cols(); ++j) basis(i, j) = m(i, j);
        return Subspace(std::move(basis));
    }

    static Subspace span_vector(const F& field, const std::vector<Element>& v) {
        Matrix<F> m(field, 1, static_cast<int>(v.size()));
        for (int j = 0; j < m.cols(); ++j) m(0, j) = v[j];
        return span(m);
    }

    int dim() const { return basis_.rows(); }
    int ambient() const { return basis_.cols(); }
    bool is_zero_space() const { return dim() == 0; }
    const Matrix<F>& basis() const { return basis_; }
    const F& field() const { return basis_.field(); }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    explicit Subspace(Matrix<F> basis) : basis_(std::move(basis)) {}
    Matrix<F> basis_;  // rref, no zero rows
};

/// Exact intersection, via the left kernel of the stacked bases.
template <FieldType F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatch("intersection in different ambient spaces");
    const F& f = a.field();
    int n = a.ambient();
    Matrix<F> stacked(f, a.dim() + b.dim(), n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < n; ++j) stacked(i, j) = a.basis()(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < n; ++j) stacked(a.dim() + i, j) = b.basis()(i, j);
    // z in ker(stacked^T) splits as (x, y) with x*A + y*B = 0, so x*A lies
    // in both row spaces.
    Matrix<F> left_kernel = kernel(stacked.transposed());
    Matrix<F> gens(f, left_kernel.rows(), n);
    for (int i = 0; i < left_kernel.rows(); ++i)
        for (int j = 0; j < n; ++j) {
            auto acc = f.zero();
            for (int k = 0; k < a.dim(); ++k) acc += left_kernel(i, k) * a.basis()(k, j);
            gens(i, j) = acc;
        }
    return Subspace<F>::span(gens);
}

/// Nested chain W_0 c W_1 c ... c W_m with dim W_i = i+1. The chain length
/// determines the flag's diameter; the ambient space may be larger when the
/// flag lives on a subspace.
template <FieldType F>
class Flag {
public:
    explicit Flag(std::vector<Subspace<F>> components) : comps_(std::move(components)) {
        if (comps_.empty()) throw DimensionMismatch("flag needs at least one component");
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (comps_[i].dim() != static_cast<int>(i) + 1)
                throw DimensionMismatch("flag component has wrong dimension");
            if (i > 0 && intersect(comps_[i - 1], comps_[i]) != comps_[i - 1])
                throw DimensionMismatch("flag components are not nested");
        }
    }

    int diameter() const { return static_cast<int>(comps_.size()) - 1; }
    int ambient() const { return comps_.front().ambient(); }
    const Subspace<F>& operator[](int i) const { return comps_.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const Flag& a, const Flag& b) { return a.comps_ == b.comps_; }
    friend bool operator!=(const Flag& a, const Flag& b) { return !(a == b); }

private:
    std::vector<Subspace<F>> comps_;
};

/// Flag induced by an ordered basis (the rows of `vectors`):
/// W_i = span of the first i+1 rows.
template <FieldType F>
Flag<F> flag_from_basis(const Matrix<F>& vectors) {
    if (vectors.rows() != vectors.cols() || rank(vectors) != vectors.rows()) throw NotABasis();
    std::vector<Subspace<F>> comps;
    for (int i = 0; i < vectors.rows(); ++i) {
        Matrix<F> head(vectors.field(), i + 1, vectors.cols());
        for (int k = 0; k <= i; ++k)
            for (int j = 0; j < vectors.cols(); ++j) head(k, j) = vectors(k, j);
        comps.push_back(Subspace<F>::span(head));
    }
    return Flag<F>(std::move(comps));
}

/// The three flags attached to an invertible upper triangular T, with the
/// u-basis fixed as the standard basis and v_j = column j of T:
///   first:  U_i   = <u_0, ..., u_i>
///   second: U'_i  = <u_d, ..., u_{d-i}>
///   third:  U''_i = <v_d, ..., v_{d-i}>
template <FieldType F>
std::array<Flag<F>, 3> flags_from_matrix(const Matrix<F>& t) {
    if (!t.is_square()) throw DimensionMismatch("flags need a square matrix");
    if (!t.is_upper_triangular()) throw NotUpperTriangular();
    int n = t.rows();
    for (int i = 0; i < n; ++i)
        if (is_zero(t(i, i))) throw SingularMatrix("upper triangular matrix with zero diagonal");
    const F& f = t.field();
    Matrix<F> fwd = Matrix<F>::identity(f, n);
    Matrix<F> rev(f, n, n);
    Matrix<F> cols_rev(f, n, n);
    for (int i = 0; i < n; ++i) {
        rev(i, n - 1 - i) = f.one();
        for (int j = 0; j < n; ++j) cols_rev(i, j) = t(j, n - 1 - i);  // row i = column d-i of T
    }
    return {flag_from_basis(fwd), flag_from_basis(rev), flag_from_basis(cols_rev)};
}

/// Oppositeness via the middle-layer criterion: W_i meets W'_{d-1-i}
/// trivially for 0 <= i <= d-1 (equivalent to the full i+j < d condition).
template <FieldType F>
bool is_opposite(const Flag<F>& a, const Flag<F>& b) {
    if (a.diameter() != b.diameter() || a.ambient() != b.ambient())
        throw DimensionMismatch("flags of different shape");
    int d = a.diameter();
    for (int i = 0; i + 1 <= d; ++i)
        if (!intersect(a[i], b[d - 1 - i]).is_zero_space()) return false;
    return true;
}

template <FieldType F>
bool is_totally_opposite(const Flag<F>& a, const Flag<F>& b, const Flag<F>& c) {
    if (a.diameter() != b.diameter() || b.diameter() != c.diameter() ||
        a.ambient() != b.ambient() || b.ambient() != c.ambient())
        throw DimensionMismatch("flags of different shape");
    int d = a.diameter();
    for (int r = 0; r <= d; ++r)
        for (int s = 0; s <= d; ++s)
            for (int t = 0; t <= d; ++t) {
                if (r + s + t <= d) continue;
                if (!intersect(intersect(a[d - r], b[d - s]), c[d - t]).is_zero_space()) return false;
            }
    return true;
}

/// Table assigning a subspace to every location of the triangle.
template <FieldType F>
class SubspaceTable {
public:
    SubspaceTable(int d, std::vector<Subspace<F>> cells) : d_(d), cells_(std::move(cells)) {
        if (static_cast<int>(cells_.size()) != triangle_size(d)) throw DimensionMismatch("wrong table size");
    }
    int d() const { return d_; }
    const Subspace<F>& at(const Location& x) const {
        return cells_[static_cast<std::size_t>(location_index(x, d_))];
    }

private:
    int d_;
    std::vector<Subspace<F>> cells_;
};

/// The billiard table of three totally opposite flags: the cell at
/// (r, s, t) is W_{d-r} n W'_{d-s} n W''_{d-t}, one-dimensional throughout.
template <FieldType F>
SubspaceTable<F> billiard_from_flags(const Flag<F>& a, const Flag<F>& b, const Flag<F>& c) {
    if (!is_totally_opposite(a, b, c)) throw NotTotallyOpposite();
    int d = a.diameter();
    std::vector<Subspace<F>> cells;
    cells.reserve(triangle_size(d));
    for (const Location& x : locations(d)) {
        Subspace<F> cell = intersect(intersect(a[d - x.r], b[d - x.s]), c[d - x.t]);
        if (cell.dim() != 1) throw InternalError("billiard cell is not one-dimensional");
        cells.push_back(std::move(cell));
    }
    return SubspaceTable<F>(d, std::move(cells));
}

}  // namespace ba
