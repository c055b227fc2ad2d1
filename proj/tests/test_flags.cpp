#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ba/ba.hpp"
#include "oracles.hpp"

using ba::Flag;
using ba::intersect;
using ba::Location;
using ba::Matrix;
using ba::PrimeField;
using ba::RationalField;
using ba::Subspace;
using oracles::mat;

namespace {

const RationalField Q;

template <ba::FieldType F>
Subspace<F> span_of(const Matrix<F>& rows) { return Subspace<F>::span(rows); }

template <ba::FieldType F>
Matrix<F> random_ut_invertible(const F& f, int n, std::mt19937_64& rng) {
    Matrix<F> t(f, n, n);
    for (int i = 0; i < n; ++i) {
        t(i, i) = f.random_nonzero(rng);
        for (int j = i + 1; j < n; ++j) t(i, j) = f.random_element(rng);
    }
    return t;
}

}  // namespace

TEST_CASE("subspace intersection") {
    auto e01 = span_of(mat(Q, {{1, 0, 0}, {0, 1, 0}}));
    auto e12 = span_of(mat(Q, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(intersect(e01, e01) == e01);
    CHECK(intersect(e01, e12) == span_of(mat(Q, {{0, 1, 0}})));
    auto e0 = span_of(mat(Q, {{1, 0}}));
    auto e1 = span_of(mat(Q, {{0, 1}}));
    CHECK(intersect(e0, e1).is_zero_space());
    CHECK(intersect(e0, e1) == Subspace<RationalField>::zero(Q, 2));
    // canonical representation: the same space from messy generators
    CHECK(span_of(mat(Q, {{2, 2, 0}, {1, 0, 0}, {3, 2, 0}})) == e01);
}

TEST_CASE("flags induced by bases") {
    auto std2 = ba::flag_from_basis(Matrix<RationalField>::identity(Q, 2));
    CHECK(std2[0] == span_of(mat(Q, {{1, 0}})));
    CHECK(std2[1] == Subspace<RationalField>::full(Q, 2));
    auto inverted = ba::flag_from_basis(mat(Q, {{0, 1}, {1, 0}}));
    CHECK(inverted[0] == span_of(mat(Q, {{0, 1}})));
    CHECK_THROWS_AS(ba::flag_from_basis(mat(Q, {{1, 1}, {1, 1}})), ba::NotABasis);

    // an invertible upper triangular matrix's columns induce the standard flag
    auto t = mat(Q, {{1, 2, -1}, {0, 3, 4}, {0, 0, 5}});
    Matrix<RationalField> cols(Q, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cols(i, j) = t(j, i);
    CHECK(ba::flag_from_basis(cols) == ba::flag_from_basis(Matrix<RationalField>::identity(Q, 3)));
}

TEST_CASE("the three flags of an upper triangular matrix") {
    auto t = mat(Q, {{1, 1}, {0, 1}});
    auto flags = ba::flags_from_matrix(t);
    CHECK(flags[2][0] == span_of(mat(Q, {{1, 1}})));     // last column of T
    CHECK(flags[0][1] == Subspace<RationalField>::full(Q, 2));
    CHECK(flags[1][1] == Subspace<RationalField>::full(Q, 2));
    CHECK(flags[2][1] == Subspace<RationalField>::full(Q, 2));

    auto id_flags = ba::flags_from_matrix(Matrix<RationalField>::identity(Q, 2));
    CHECK(id_flags[1][0] == span_of(mat(Q, {{0, 1}})));
    CHECK(id_flags[2][0] == span_of(mat(Q, {{0, 1}})));

    CHECK_THROWS_AS(ba::flags_from_matrix(mat(Q, {{1, 0}, {1, 1}})), ba::NotUpperTriangular);
    CHECK_THROWS_AS(ba::flags_from_matrix(mat(Q, {{1, 1}, {0, 0}})), ba::SingularMatrix);
}

TEST_CASE("opposite flags") {
    auto basis = mat(Q, {{1, 2, 0}, {0, 1, 1}, {1, 0, 1}});
    Matrix<RationalField> rev(Q, 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rev(i, j) = basis(2 - i, j);
    auto f = ba::flag_from_basis(basis);
    auto g = ba::flag_from_basis(rev);
    CHECK(ba::is_opposite(f, g));
    CHECK_FALSE(ba::is_opposite(f, f));

    auto opp = ba::flags_from_matrix(mat(Q, {{1, 1}, {0, 1}}));
    CHECK(ba::is_opposite(opp[1], opp[2]));
    auto not_opp = ba::flags_from_matrix(Matrix<RationalField>::identity(Q, 2));
    CHECK_FALSE(ba::is_opposite(not_opp[1], not_opp[2]));
}

TEST_CASE("the cheap oppositeness criterion agrees with the full condition") {
    std::mt19937_64 rng(5);
    const PrimeField F5(5);
    for (int rep = 0; rep < 30; ++rep) {
        int d = 1 + static_cast<int>(rng() % 3);
        auto t = random_ut_invertible(F5, d + 1, rng);
        auto flags = ba::flags_from_matrix(t);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                if (a == b) continue;
                CHECK(ba::is_opposite(flags[a], flags[b]) == oracles::is_opposite_full(flags[a], flags[b]));
            }
    }
}

TEST_CASE("pointwise detection of non-opposite layers") {
    // the middle-layer intersection U'_i n U''_{d-1-i} vanishes exactly when
    // the right-anchored window starting at column i+1 is invertible
    std::mt19937_64 rng(9);
    const PrimeField F5(5);
    for (int rep = 0; rep < 30; ++rep) {
        int d = 1 + static_cast<int>(rng() % 3);
        auto t = random_ut_invertible(F5, d + 1, rng);
        auto flags = ba::flags_from_matrix(t);
        for (int i = 0; i + 1 <= d; ++i) {
            bool zero_meet = intersect(flags[1][i], flags[2][d - 1 - i]).is_zero_space();
            CHECK(zero_meet == !is_zero(det(window(t, i + 1, d))));
        }
    }
}

TEST_CASE("opposite flags induce a decomposition") {
    std::mt19937_64 rng(13);
    const PrimeField F101(101);
    for (int rep = 0; rep < 10; ++rep) {
        int d = 1 + static_cast<int>(rng() % 3);
        auto t = random_ut_invertible(F101, d + 1, rng);
        auto flags = ba::flags_from_matrix(t);
        if (!ba::is_opposite(flags[1], flags[2])) continue;
        Matrix<PrimeField> stacked(F101, d + 1, d + 1);
        for (int i = 0; i <= d; ++i) {
            auto meet = intersect(flags[1][i], flags[2][d - i]);
            REQUIRE(meet.dim() == 1);
            for (int j = 0; j <= d; ++j) stacked(i, j) = meet.basis()(0, j);
        }
        CHECK(rank(stacked) == d + 1);  // the one-dimensional pieces sum directly
    }
}

TEST_CASE("total opposition") {
    auto qb = ba::flags_from_matrix(ba::qbinom_matrix(Q, 3, Q.from_int(2)));
    CHECK(ba::is_totally_opposite(qb[0], qb[1], qb[2]));
    auto id = ba::flags_from_matrix(Matrix<RationalField>::identity(Q, 3));
    CHECK_FALSE(ba::is_totally_opposite(id[0], id[1], id[2]));
    auto d0 = ba::flags_from_matrix(Matrix<RationalField>::identity(Q, 1));
    CHECK(ba::is_totally_opposite(d0[0], d0[1], d0[2]));  // vacuous at diameter 0
}

TEST_CASE("total opposition matches the very good predicate") {
    std::mt19937_64 rng(17);
    const PrimeField F5(5);
    const PrimeField F101(101);
    int mixed[2] = {0, 0};
    for (int rep = 0; rep < 60; ++rep) {
        int d = 1 + static_cast<int>(rng() % 4);
        auto t = random_ut_invertible(F5, d + 1, rng);
        bool vg = is_very_good(t);
        auto flags = ba::flags_from_matrix(t);
        CHECK(ba::is_totally_opposite(flags[0], flags[1], flags[2]) == vg);
        mixed[vg ? 1 : 0] += 1;
    }
    CHECK(mixed[0] > 0);
    CHECK(mixed[1] > 0);
    for (int rep = 0; rep < 10; ++rep) {
        int d = 1 + static_cast<int>(rng() % 4);
        auto t = random_ut_invertible(F101, d + 1, rng);
        auto flags = ba::flags_from_matrix(t);
        CHECK(ba::is_totally_opposite(flags[0], flags[1], flags[2]) == is_very_good(t));
        auto tq = random_ut_invertible(Q, d + 1, rng);
        auto fq = ba::flags_from_matrix(tq);
        CHECK(ba::is_totally_opposite(fq[0], fq[1], fq[2]) == is_very_good(tq));
    }
}

TEST_CASE("restricted sequences stay mutually opposite") {
    // for a totally opposite triple and each n, cutting everything down to
    // the (d-n)-th component of the first flag again yields mutually
    // opposite flags on that subspace
    std::mt19937_64 rng(19);
    const PrimeField F101(101);
    for (int rep = 0; rep < 5; ++rep) {
        int d = 2 + static_cast<int>(rng() % 2);
        auto t = ba::random_very_good(F101, d, rng());
        auto flags = ba::flags_from_matrix(t);
        REQUIRE(ba::is_totally_opposite(flags[0], flags[1], flags[2]));
        for (int n = 0; n <= d; ++n) {
            std::vector<Subspace<PrimeField>> w, wp, wpp;
            for (int i = 0; i <= d - n; ++i) {
                w.push_back(flags[0][i]);
                wp.push_back(intersect(flags[0][d - n], flags[1][n + i]));
                wpp.push_back(intersect(flags[0][d - n], flags[2][n + i]));
            }
            Flag<PrimeField> fw(w), fwp(wp), fwpp(wpp);
            CHECK(ba::is_opposite(fw, fwp));
            CHECK(ba::is_opposite(fw, fwpp));
            CHECK(ba::is_opposite(fwp, fwpp));
        }
    }
}

TEST_CASE("billiard table from three flags") {
    auto t = mat(Q, {{1, 1, 1}, {0, 1, 3}, {0, 0, 1}});
    auto flags = ba::flags_from_matrix(t);
    auto cells = ba::billiard_from_flags(flags[0], flags[1], flags[2]);
    // bottom-left boundary carries the u-basis, bottom-right the v-basis
    CHECK(cells.at({1, 1, 0}) == span_of(mat(Q, {{0, 1, 0}})));
    CHECK(cells.at({0, 2, 0}) == span_of(mat(Q, {{0, 0, 1}})));
    CHECK(cells.at({1, 0, 1}) == span_of(mat(Q, {{1, 1, 0}})));  // column 1 of T
    CHECK(cells.at({0, 0, 2}) == span_of(mat(Q, {{1, 3, 1}})));  // column 2 of T
    CHECK(cells.at({0, 1, 1}) == span_of(mat(Q, {{0, 2, 1}})));  // v1 - v2, rescaled

    auto id = ba::flags_from_matrix(Matrix<RationalField>::identity(Q, 3));
    CHECK_THROWS_AS(ba::billiard_from_flags(id[0], id[1], id[2]), ba::NotTotallyOpposite);
}
