#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ba/errors.hpp"
#include "ba/matrix.hpp"
#include "ba/triangle.hpp"

namespace ba {

/// Table assigning a nonzero scalar to every location of the triangle of
/// diameter d, stored in the canonical enumeration order.
template <FieldType F>
class ValueFunction {
public:
    using Element = typename F::Element;

    ValueFunction(const F& field, int d, std::vector<Element> values)
        : field_(field), d_(d), values_(std::move(values)) {
        if (static_cast<int>(values_.size()) != triangle_size(d))
            throw DimensionMismatch("value table has wrong size");
        for (const Element& v : values_)
            if (is_zero(v)) throw ZeroValue();
    }

    static ValueFunction constant(const F& field, int d, const Element& value) {
        return ValueFunction(field, d, std::vector<Element>(static_cast<std::size_t>(triangle_size(d)), value));
    }

    int d() const { return d_; }
    const F& field() const { return field_; }
    const std::vector<Element>& values() const { return values_; }

    const Element& at(const Location& x) const {
        return values_[static_cast<std::size_t>(location_index(x, d_))];
    }

    /// Value at x, or 1 for locations outside the triangle.
    Element value_or_one(const Location& x) const {
        return in_triangle(x, d_) ? at(x) : field_.one();
    }

    friend bool operator==(const ValueFunction& a, const ValueFunction& b) {
        return a.d_ == b.d_ && a.values_ == b.values_;
    }
    friend bool operator!=(const ValueFunction& a, const ValueFunction& b) { return !(a == b); }

private:
    F field_;
    int d_;
    std::vector<Element> values_;
};

/// The window-determinant table of a very good matrix:
/// (r, s, t) -> det T[t, d-r]. Every value is nonzero.
template <FieldType F>
ValueFunction<F> window_determinants(const Matrix<F>& t) {
    if (!t.is_square()) throw DimensionMismatch("window determinants of a non-square matrix");
    if (!is_very_good(t)) throw NotVeryGood();
    int d = t.rows() - 1;
    std::vector<typename F::Element> values;
    values.reserve(triangle_size(d));
    for (const Location& x : locations(d)) values.push_back(det(window(t, x.t, d - x.r)));
    return ValueFunction<F>(t.field(), d, std::move(values));
}

/// Inverse of window_determinants: the unique very good upper triangular T
/// whose window-determinant table equals f. Solved entry by entry in order
/// of increasing i+j; det T[j-i,j] is affine in its bottom-right entry T_ij
/// with coefficient det T[j-i,j-1], already known and nonzero.
template <FieldType F>
Matrix<F> matrix_from_determinants(const ValueFunction<F>& f) {
    const F& fld = f.field();
    int d = f.d();
    Matrix<F> t(fld, d + 1, d + 1);
    t(0, 0) = f.at({d, 0, 0});
    for (int j = 1; j <= d; ++j) t(0, j) = f.at({d - j, 0, j});
    for (int sum = 2; sum <= 2 * d; ++sum) {
        for (int i = 1; i <= d; ++i) {
            int j = sum - i;
            if (j < i || j > d) continue;
            auto target = f.at({d - j, i, j - i});
            auto pivot = det(window(t, j - i, j - 1));
            if (is_zero(pivot)) throw InternalError("zero pivot while inverting a determinant table");
            auto rest = det(window(t, j - i, j));  // T_ij still zero here
            t(i, j) = (target - rest) / pivot;
        }
    }
    return t;
}

/// Hexagon contraction: maps a table on diameter d to one on d-2 by the
/// ratio of displaced values around mu = (r+1, s, t+1), with value 1 used
/// outside the triangle.
template <FieldType F>
ValueFunction<F> hexagon_ratio(const ValueFunction<F>& f) {
    int d = f.d();
    if (d < 2) throw DiameterTooSmall("hexagon ratio needs diameter >= 2");
    std::vector<typename F::Element> values;
    values.reserve(triangle_size(d - 2));
    for (const Location& tau : locations(d - 2)) {
        Hexagon h = hexagon({tau.r + 1, tau.s, tau.t + 1});
        auto num = f.value_or_one(h.plus_alpha) * f.value_or_one(h.plus_beta) * f.value_or_one(h.plus_gamma);
        auto den = f.value_or_one(h.minus_alpha) * f.value_or_one(h.minus_beta) * f.value_or_one(h.minus_gamma);
        values.push_back(num / den);
    }
    return ValueFunction<F>(f.field(), d - 2, std::move(values));
}

/// A value function is fine when it equals 1 on the whole 2-boundary and
/// 3-boundary (s = 0 or t = 0).
template <FieldType F>
bool is_fine(const ValueFunction<F>& f) {
    const auto one = f.field().one();
    for (int i = 0; i <= f.d(); ++i) {
        if (!(f.at({i, f.d() - i, 0}) == one)) return false;
        if (!(f.at({i, 0, f.d() - i}) == one)) return false;
    }
    return true;
}

/// A matrix is nice when its top row and diagonal are all 1.
template <FieldType F>
bool is_nice(const Matrix<F>& t) {
    if (!t.is_square()) throw DimensionMismatch("niceness of a non-square matrix");
    const auto one = t.field().one();
    for (int i = 0; i < t.rows(); ++i)
        if (!(t(0, i) == one) || !(t(i, i) == one)) return false;
    return true;
}

/// The unique fine f on diameter g.d()+2 whose hexagon contraction is g.
/// Boundary values are 1; interior values are solved by induction on s-r,
/// each from the hexagon relation centered at (r+1, s-1, t).
template <FieldType F>
ValueFunction<F> hexagon_ratio_inverse_fine(const ValueFunction<F>& g) {
    const F& fld = g.field();
    int d = g.d() + 2;
    std::vector<typename F::Element> values(static_cast<std::size_t>(triangle_size(d)), fld.one());
    auto value_or_one = [&](const Location& x) {
        return in_triangle(x, d) ? values[static_cast<std::size_t>(location_index(x, d))] : fld.one();
    };
    // group by s - r, ascending; within a group any order works
    for (int diff = -d; diff <= d; ++diff) {
        for (const Location& x : locations(d)) {
            if (x.s - x.r != diff || x.s == 0 || x.t == 0) continue;
            auto num = value_or_one({x.r + 2, x.s - 2, x.t}) * value_or_one({x.r + 1, x.s, x.t - 1}) *
                       value_or_one({x.r, x.s - 1, x.t + 1});
            auto den = g.at({x.r, x.s - 1, x.t - 1}) * value_or_one({x.r + 1, x.s - 2, x.t + 1}) *
                       value_or_one({x.r + 2, x.s - 1, x.t - 1});
            values[static_cast<std::size_t>(location_index(x, d))] = num / den;
        }
    }
    return ValueFunction<F>(fld, d, std::move(values));
}

/// Canonical representative of a matrix under two-sided scaling by
/// invertible diagonals, together with the scaling witnesses:
/// nice = H T K with H_ii = T_0i / T_ii and K_ii = 1 / T_0i.
template <FieldType F>
struct NiceForm {
    Matrix<F> matrix;  // the nice representative
    Matrix<F> h, k;    // diagonal witnesses
};

template <FieldType F>
NiceForm<F> nice_form(const Matrix<F>& t) {
    if (!t.is_square()) throw DimensionMismatch("nice form of a non-square matrix");
    if (!t.is_upper_triangular()) throw NotUpperTriangular();
    if (!is_very_good(t)) throw NotVeryGood();
    const F& fld = t.field();
    int n = t.rows();
    Matrix<F> h(fld, n, n), k(fld, n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = t(0, i) / t(i, i);
        k(i, i) = fld.one() / t(0, i);
    }
    Matrix<F> nice(fld, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) nice(i, j) = h(i, i) * t(i, j) * k(j, j);
    return {std::move(nice), std::move(h), std::move(k)};
}

/// Two very good upper triangular matrices are equivalent when one is HTK
/// for invertible diagonal H, K; decided by comparing nice forms.
template <FieldType F>
bool matrices_equivalent(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("equivalence of matrices of different size");
    return nice_form(a).matrix == nice_form(b).matrix;
}

/// Canonical representative of a value function under the induced scaling
/// equivalence; routed through matrices: fine(f) = D(nice(D^{-1}(f))).
template <FieldType F>
ValueFunction<F> fine_form(const ValueFunction<F>& f) {
    return window_determinants(nice_form(matrix_from_determinants(f)).matrix);
}

template <FieldType F>
bool vf_equivalent(const ValueFunction<F>& a, const ValueFunction<F>& b) {
    if (a.d() != b.d()) throw DimensionMismatch("equivalence of tables of different diameter");
    return fine_form(a) == fine_form(b);
}

/// Seeded random value function with nonzero values.
template <FieldType F>
ValueFunction<F> random_value_function(const F& field, int d, std::mt19937_64& rng) {
    std::vector<typename F::Element> values;
    values.reserve(triangle_size(d));
    for (int i = 0; i < triangle_size(d); ++i) values.push_back(field.random_nonzero(rng));
    return ValueFunction<F>(field, d, std::move(values));
}

/// Seeded random very good upper triangular matrix: the preimage of a
/// random value table under the window-determinant bijection. Deterministic
/// for a fixed seed; the output is very good by construction.
template <FieldType F>
Matrix<F> random_very_good(const F& field, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return matrix_from_determinants(random_value_function(field, d, rng));
}

}  // namespace ba
