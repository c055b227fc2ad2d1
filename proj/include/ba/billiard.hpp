#pragma once

#include <utility>
#include <vector>

#include "ba/errors.hpp"
#include "ba/matrix.hpp"
#include "ba/triangle.hpp"
#include "ba/valuefn.hpp"

namespace ba {

/// Concrete billiard array attached to a very good upper triangular T: one
/// spanning vector per location, stored as its coefficient vector in the
/// v-basis (v_j = column j of T). The coefficients are normalized so that
/// c_t(lambda) = 1, with support confined to indices t..d-r; coordinates in
/// the standard basis are recovered on demand as T*c.
template <FieldType F>
class ConcreteBilliardArray {
public:
    using Element = typename F::Element;

    ConcreteBilliardArray(Matrix<F> t, std::vector<std::vector<Element>> coeffs)
        : t_(std::move(t)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != triangle_size(d())) throw DimensionMismatch("wrong table size");
    }

    int d() const { return t_.rows() - 1; }
    const F& field() const { return t_.field(); }
    const Matrix<F>& matrix() const { return t_; }

    /// All coefficient vectors, in canonical location order.
    const std::vector<std::vector<Element>>& table() const { return coeffs_; }

    /// Coefficients in the v-basis, as a full length-(d+1) vector.
    const std::vector<Element>& coefficients(const Location& x) const {
        return coeffs_[static_cast<std::size_t>(location_index(x, d()))];
    }

    /// Coordinates in the standard basis: T * c.
    std::vector<Element> ambient(const Location& x) const { return t_.apply(coefficients(x)); }

private:
    Matrix<F> t_;
    std::vector<std::vector<Element>> coeffs_;
};

/// Builds the standard concrete billiard array of T. For lambda = (r,s,t)
/// with s = 0 the vector is v_t; otherwise c_t = 1 and the tail
/// (c_{t+1}, ..., c_{d-r}) solves  T[t+1, d-r] * tail = -(T_{0t},...,T_{s-1,t}).
template <FieldType F>
ConcreteBilliardArray<F> standard_cba(const Matrix<F>& t) {
    if (!t.is_square()) throw DimensionMismatch("billiard array of a non-square matrix");
    if (!t.is_upper_triangular()) throw NotUpperTriangular();
    if (!is_very_good(t)) throw NotVeryGood();
    const F& f = t.field();
    int d = t.rows() - 1;
    std::vector<std::vector<typename F::Element>> coeffs;
    coeffs.reserve(triangle_size(d));
    for (const Location& x : locations(d)) {
        std::vector<typename F::Element> c(static_cast<std::size_t>(d) + 1, f.zero());
        c[static_cast<std::size_t>(x.t)] = f.one();
        if (x.s > 0) {
            Matrix<F> block = window(t, x.t + 1, d - x.r);  // s x s
            std::vector<typename F::Element> rhs;
            rhs.reserve(static_cast<std::size_t>(x.s));
            for (int i = 0; i < x.s; ++i) rhs.push_back(-t(i, x.t));
            std::vector<typename F::Element> tail = linsolve(block, rhs);
            for (int i = 0; i < x.s; ++i) c[static_cast<std::size_t>(x.t + 1 + i)] = tail[static_cast<std::size_t>(i)];
        }
        coeffs.push_back(std::move(c));
    }
    return ConcreteBilliardArray<F>(t, std::move(coeffs));
}

namespace detail {

// Stacks the listed coordinate vectors as matrix rows.
template <FieldType F>
Matrix<F> stack_rows(const F& field, const std::vector<const std::vector<typename F::Element>*>& rows) {
    int n = rows.empty() ? 0 : static_cast<int>(rows.front()->size());
    Matrix<F> m(field, static_cast<int>(rows.size()), n);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < n; ++j) m(i, j) = (*rows[static_cast<std::size_t>(i)])[static_cast<std::size_t>(j)];
    return m;
}

}  // namespace detail

/// The table-level routines below operate on any assignment of coordinate
/// vectors to locations (in canonical order), so the same brace machinery
/// serves both the standard array and arrays read off a subspace table.
/// Coordinates may be taken in any fixed basis.
template <FieldType F>
bool verify_billiard_table(const F& field, int d, const std::vector<std::vector<typename F::Element>>& vecs) {
    if (static_cast<int>(vecs.size()) != triangle_size(d)) throw DimensionMismatch("wrong table size");
    auto vec_at = [&](const Location& x) { return &vecs[static_cast<std::size_t>(location_index(x, d))]; };
    for (const auto& v : vecs) {
        bool nonzero = false;
        for (const auto& e : v)
            if (!is_zero(e)) { nonzero = true; break; }
        if (!nonzero) return false;
    }
    for (int eta = 1; eta <= 3; ++eta)
        for (const auto& line : eta_lines(d, eta)) {
            std::vector<const std::vector<typename F::Element>*> rows;
            for (const Location& x : line) rows.push_back(vec_at(x));
            Matrix<F> m = detail::stack_rows(field, rows);
            if (rank(m) != m.rows()) return false;  // line vectors must be independent
        }
    for (const BlackClique& c : black_cliques(d)) {
        Matrix<F> m = detail::stack_rows(field, {vec_at(c.cells[0]), vec_at(c.cells[1]), vec_at(c.cells[2])});
        if (rank(m) == 3) return false;  // black-clique vectors must be dependent
    }
    return true;
}

/// The brace scalar along an edge: the unique nonzero x such that
/// B_lambda + x * B_mu lies in the line of the edge's completion.
template <FieldType F>
typename F::Element edge_ratio_of_table(const F& field, int d,
                                        const std::vector<std::vector<typename F::Element>>& vecs,
                                        const Location& lambda, const Location& mu) {
    if (!in_triangle(lambda, d) || !in_triangle(mu, d)) throw NotInTriangle();
    Location nu = completion(lambda, mu, d);  // throws NotAdjacent when needed
    const auto& vl = vecs[static_cast<std::size_t>(location_index(lambda, d))];
    const auto& vm = vecs[static_cast<std::size_t>(location_index(mu, d))];
    const auto& vn = vecs[static_cast<std::size_t>(location_index(nu, d))];
    // solve vl + x*vm + y*vn = 0; the solution exists and is unique
    int n = static_cast<int>(vl.size());
    Matrix<F> aug(field, n, 3);
    for (int i = 0; i < n; ++i) {
        aug(i, 0) = vm[static_cast<std::size_t>(i)];
        aug(i, 1) = vn[static_cast<std::size_t>(i)];
        aug(i, 2) = -vl[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = detail::rref_in_place(aug);
    if (pivots != std::vector<int>{0, 1}) throw InternalError("brace relation is not uniquely solvable");
    for (int i = 2; i < n; ++i)
        if (!is_zero(aug(i, 2))) throw InternalError("brace relation is inconsistent");
    auto x = aug(0, 2);
    if (is_zero(x)) throw InternalError("brace scalar is zero");
    return x;
}

/// Product of the three edge ratios around the white clique of tau, taken
/// in the clique's fixed cyclic order.
template <FieldType F>
typename F::Element bvalue_brace_of_table(const F& field, int d,
                                          const std::vector<std::vector<typename F::Element>>& vecs,
                                          const Location& tau) {
    WhiteClique c = white_clique_at(tau, d);
    return edge_ratio_of_table(field, d, vecs, c.lambda, c.mu) *
           edge_ratio_of_table(field, d, vecs, c.mu, c.nu) *
           edge_ratio_of_table(field, d, vecs, c.nu, c.lambda);
}

template <FieldType F>
bool verify_billiard(const ConcreteBilliardArray<F>& cba) {
    return verify_billiard_table(cba.field(), cba.d(), cba.table());
}

template <FieldType F>
typename F::Element edge_ratio(const ConcreteBilliardArray<F>& cba, const Location& lambda, const Location& mu) {
    return edge_ratio_of_table(cba.field(), cba.d(), cba.table(), lambda, mu);
}

template <FieldType F>
typename F::Element bvalue_brace(const ConcreteBilliardArray<F>& cba, const Location& tau) {
    if (cba.d() < 2) throw DiameterTooSmall("B-values need diameter >= 2");
    return bvalue_brace_of_table(cba.field(), cba.d(), cba.table(), tau);
}

namespace detail {

// Hexagon determinant ratio at tau; assumes T already known very good.
template <FieldType F>
typename F::Element bvalue_det_at(const Matrix<F>& t, const Location& tau) {
    const F& f = t.field();
    int d = t.rows() - 1;
    auto windet = [&](const Location& x) {
        return in_triangle(x, d) ? det(window(t, x.t, d - x.r)) : f.one();
    };
    Hexagon h = hexagon({tau.r + 1, tau.s, tau.t + 1});
    auto num = windet(h.plus_alpha) * windet(h.plus_beta) * windet(h.plus_gamma);
    auto den = windet(h.minus_alpha) * windet(h.minus_beta) * windet(h.minus_gamma);
    return num / den;
}

}  // namespace detail

/// B-value of the white clique of tau straight from window determinants:
/// with mu = (r+1, s, t+1), the product of det T[mu+root] over the three
/// positive displacements divided by the product over the three negative
/// ones, where det of an out-of-triangle window is 1.
template <FieldType F>
typename F::Element bvalue_det(const Matrix<F>& t, const Location& tau) {
    if (!t.is_square()) throw DimensionMismatch("B-values of a non-square matrix");
    int d = t.rows() - 1;
    if (d < 2) throw DiameterTooSmall("B-values need diameter >= 2");
    if (!in_triangle(tau, d - 2)) throw NotInTriangle();
    if (!is_very_good(t)) throw NotVeryGood();
    return detail::bvalue_det_at(t, tau);
}

/// The full B-value table of T on the triangle of diameter d-2, computed by
/// the determinant formula.
template <FieldType F>
ValueFunction<F> value_function_hat(const Matrix<F>& t) {
    if (!t.is_square()) throw DimensionMismatch("B-values of a non-square matrix");
    int d = t.rows() - 1;
    if (d < 2) throw DiameterTooSmall("B-values need diameter >= 2");
    if (!is_very_good(t)) throw NotVeryGood();
    std::vector<typename F::Element> values;
    values.reserve(triangle_size(d - 2));
    for (const Location& tau : locations(d - 2)) values.push_back(detail::bvalue_det_at(t, tau));
    return ValueFunction<F>(t.field(), d - 2, std::move(values));
}

}  // namespace ba
