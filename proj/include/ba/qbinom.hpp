#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "ba/errors.hpp"
#include "ba/field.hpp"
#include "ba/matrix.hpp"
#include "ba/triangle.hpp"

namespace ba {

/// Polynomial in q with arbitrary-precision integer coefficients, stored in
/// ascending powers with no trailing zeros (the zero polynomial is empty).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(const BigInt& value) { return IntPolynomial({value}); }

    bool is_zero_poly() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : BigInt(0);
    }
    const std::vector<BigInt>& coeffs() const { return c_; }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return IntPolynomial(std::move(out));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(out));
    }

    /// Product with q^k.
    IntPolynomial shifted(int k) const {
        if (is_zero_poly()) return {};
        std::vector<BigInt> out(c_.size() + static_cast<std::size_t>(k), BigInt(0));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + static_cast<std::size_t>(k)] = c_[i];
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    /// Horner evaluation at a field element.
    template <FieldType F>
    typename F::Element eval(const F& field, const typename F::Element& x) const {
        auto acc = field.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + field.from_bigint(c_[i]);
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) {
        if (p.is_zero_poly()) return os << "0";
        bool first = true;
        for (std::size_t i = 0; i < p.c_.size(); ++i) {
            if (p.c_[i] == 0) continue;
            if (!first) os << " + ";
            os << p.c_[i];
            if (i > 0) os << "*q^" << i;
            first = false;
        }
        return os;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
inline IntPolynomial qint(int n) {
    if (n < 0) throw IndexOutOfRange("q-integer of a negative integer");
    return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
inline IntPolynomial qfact(int n) {
    if (n < 0) throw IndexOutOfRange("q-factorial of a negative integer");
    IntPolynomial acc = IntPolynomial::constant(1);
    for (int i = 1; i <= n; ++i) acc = acc * qint(i);
    return acc;
}

/// Gaussian binomial coefficient as a polynomial in q, built division-free
/// from the Pascal-type recurrence
///   [n+1 choose k] = [n choose k] + q^{n+1-k} [n choose k-1];
/// zero when k < 0 or k > n.
inline IntPolynomial qbinomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return {};
    // row-by-row table of [m choose j] for j <= k
    std::vector<IntPolynomial> row(static_cast<std::size_t>(k) + 1);
    row[0] = IntPolynomial::constant(1);
    for (int m = 1; m <= n; ++m)
        for (int j = std::min(m, k); j >= 1; --j) {
            // entry j currently holds [m-1 choose j], entry j-1 holds [m-1 choose j-1]
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)].shifted(m - j);
        }
    return row[static_cast<std::size_t>(k)];
}

/// The q-binomial matrix of diameter d: T_ij = [j choose i]_q evaluated at
/// q. Upper triangular, with top row and diagonal equal to 1; very good for
/// every nonzero q.
template <FieldType F>
Matrix<F> qbinom_matrix(const F& field, int d, const typename F::Element& q) {
    if (is_zero(q)) throw ZeroQ();
    Matrix<F> t(field, d + 1, d + 1);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= j; ++i) t(i, j) = qbinomial(j, i).eval(field, q);
    return t;
}

/// Closed form for the window determinants of the q-binomial matrix:
/// det T[i,j] = q^{i (j-i) (j-i+1) / 2}.
template <FieldType F>
typename F::Element qbinom_det_closed(const F& field, int d, int i, int j, const typename F::Element& q) {
    if (is_zero(q)) throw ZeroQ();
    if (i < 0 || j > d || i > j) throw IndexOutOfRange("window indices must satisfy 0 <= i <= j <= d");
    unsigned long long exp = static_cast<unsigned long long>(i) * static_cast<unsigned long long>(j - i) *
                             static_cast<unsigned long long>(j - i + 1) / 2;
    return field_pow(field, q, exp);
}

}  // namespace ba
