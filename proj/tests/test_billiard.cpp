#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ba/ba.hpp"
#include "oracles.hpp"

using ba::ConcreteBilliardArray;
using ba::Location;
using ba::Matrix;
using ba::PrimeField;
using ba::RationalField;
using oracles::mat;
using oracles::vec;

namespace {
const RationalField Q;

Matrix<RationalField> example_t() { return mat(Q, {{1, 1, 1}, {0, 1, 3}, {0, 0, 1}}); }
}  // namespace

TEST_CASE("standard array coefficients") {
    auto cba = ba::standard_cba(example_t());
    CHECK(cba.coefficients({2, 0, 0}) == vec(Q, {1, 0, 0}));   // s = 0: plain v_0
    CHECK(cba.coefficients({1, 0, 1}) == vec(Q, {0, 1, 0}));   // s = 0: plain v_1
    CHECK(cba.coefficients({0, 1, 1}) == vec(Q, {0, 1, -1}));  // v_1 - v_2
    CHECK(cba.coefficients({1, 1, 0}) == vec(Q, {1, -1, 0}));
    // ambient coordinates are T * c
    CHECK(cba.ambient({0, 1, 1}) == vec(Q, {0, -2, -1}));
    CHECK(cba.ambient({1, 1, 0}) == vec(Q, {0, -1, 0}));

    CHECK_THROWS_AS(ba::standard_cba(Matrix<RationalField>::identity(Q, 3)), ba::NotVeryGood);
    CHECK_THROWS_AS(ba::standard_cba(mat(Q, {{1, 1}, {2, 1}})), ba::NotUpperTriangular);
}

TEST_CASE("coefficient normalization and support") {
    std::mt19937_64 rng(3);
    const PrimeField F101(101);
    for (int rep = 0; rep < 6; ++rep) {
        int d = 2 + rep % 4;
        auto t = ba::random_very_good(F101, d, rng());
        auto cba = ba::standard_cba(t);
        for (const Location& x : ba::locations(d)) {
            const auto& c = cba.coefficients(x);
            CHECK(c[static_cast<std::size_t>(x.t)] == F101.one());
            for (int i = 0; i <= d; ++i)
                if (i < x.t || i > d - x.r) CHECK(is_zero(c[static_cast<std::size_t>(i)]));
        }
    }
}

TEST_CASE("billiard axioms hold for standard arrays") {
    CHECK(ba::verify_billiard(ba::standard_cba(example_t())));

    // a table that repeats a vector along a 1-line fails
    auto cba = ba::standard_cba(example_t());
    auto table = cba.table();
    table[ba::location_index({0, 1, 1}, 2)] = table[ba::location_index({0, 0, 2}, 2)];
    CHECK_FALSE(ba::verify_billiard_table(Q, 2, table));

    // diameter 0: a single nonzero vector
    auto t0 = mat(Q, {{5}});
    CHECK(ba::verify_billiard(ba::standard_cba(t0)));
}

TEST_CASE("edge ratios") {
    auto cba = ba::standard_cba(example_t());
    CHECK(ba::edge_ratio(cba, {1, 0, 1}, {1, 1, 0}) == Q.one());
    CHECK(ba::edge_ratio(cba, {1, 1, 0}, {0, 1, 1}) == -Q.parse("1/2"));
    CHECK(ba::edge_ratio(cba, {0, 1, 1}, {1, 0, 1}) == -Q.one());  // alpha edge
    CHECK_THROWS_AS(ba::edge_ratio(cba, {2, 0, 0}, {0, 1, 1}), ba::NotAdjacent);

    // each alpha-displaced edge carries ratio -1, and reversing an edge
    // inverts its ratio
    std::mt19937_64 rng(29);
    const PrimeField F101(101);
    for (int rep = 0; rep < 4; ++rep) {
        int d = 2 + rep;
        auto t = ba::random_very_good(F101, d, rng());
        auto c = ba::standard_cba(t);
        for (const Location& x : ba::locations(d)) {
            Location xa = x + ba::root_alpha;
            if (ba::in_triangle(xa, d)) CHECK(ba::edge_ratio(c, x, xa) == -F101.one());
        }
        for (const ba::BlackClique& bc : ba::black_cliques(d))
            for (int i = 0; i < 3; ++i) {
                const Location &a = bc.cells[static_cast<std::size_t>(i)],
                               &b = bc.cells[static_cast<std::size_t>((i + 1) % 3)];
                CHECK(ba::edge_ratio(c, a, b) * ba::edge_ratio(c, b, a) == F101.one());
            }
    }
}

TEST_CASE("standardness along black cliques") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 3; ++rep) {
        int d = 2 + rep;
        auto t = ba::random_very_good(Q, d, rng());
        auto cba = ba::standard_cba(t);
        for (const ba::BlackClique& c : ba::black_cliques(d)) {
            // B(lambda) - B(mu) must lie in the line of B(nu)
            auto diff = cba.coefficients(c.cells[0]);
            const auto& mu = cba.coefficients(c.cells[1]);
            for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
            Matrix<RationalField> stacked(Q, 2, d + 1);
            for (int j = 0; j <= d; ++j) {
                stacked(0, j) = diff[static_cast<std::size_t>(j)];
                stacked(1, j) = cba.coefficients(c.cells[2])[static_cast<std::size_t>(j)];
            }
            CHECK(rank(stacked) == 1);
        }
    }
}

TEST_CASE("B-values of the running example") {
    auto t = example_t();
    auto cba = ba::standard_cba(t);
    CHECK(ba::bvalue_brace(cba, {0, 0, 0}) == Q.parse("1/2"));
    CHECK(ba::bvalue_det(t, {0, 0, 0}) == Q.parse("1/2"));
    auto vf = ba::value_function_hat(t);
    CHECK(vf.d() == 0);
    CHECK(vf.at({0, 0, 0}) == Q.parse("1/2"));

    CHECK_THROWS_AS(ba::bvalue_det(mat(Q, {{1, 1}, {0, 1}}), {0, 0, 0}), ba::DiameterTooSmall);
    CHECK_THROWS_AS(ba::value_function_hat(mat(Q, {{1}})), ba::DiameterTooSmall);
    CHECK_THROWS_AS(ba::bvalue_det(t, {1, 0, 0}), ba::NotInTriangle);
}

TEST_CASE("B-values of the q-binomial family") {
    for (long long qv : {2, 3}) {
        for (int d = 2; d <= 4; ++d) {
            auto t = ba::qbinom_matrix(Q, d, Q.from_int(qv));
            auto cba = ba::standard_cba(t);
            auto expected = Q.one() / Q.from_int(qv);
            for (const Location& tau : ba::locations(d - 2)) {
                CHECK(ba::bvalue_det(t, tau) == expected);
                CHECK(ba::bvalue_brace(cba, tau) == expected);
            }
        }
    }
    // q = 1 gives the binomial matrix: every B-value is 1
    auto pascal = ba::qbinom_matrix(Q, 4, Q.one());
    auto vf = ba::value_function_hat(pascal);
    CHECK(vf == ba::ValueFunction<RationalField>::constant(Q, 2, Q.one()));
}

TEST_CASE("the determinant and brace methods agree with the flag route") {
    std::mt19937_64 rng(37);
    const PrimeField F101(101);
    for (int rep = 0; rep < 8; ++rep) {
        int d = 2 + rep % 4;
        auto run = [&](const auto& field) {
            auto t = ba::random_very_good(field, d, rng());
            auto cba = ba::standard_cba(t);
            auto flags = ba::flags_from_matrix(t);
            auto cells = ba::billiard_from_flags(flags[0], flags[1], flags[2]);
            for (const Location& x : ba::locations(d)) {
                auto expect = ba::Subspace<std::decay_t<decltype(field)>>::span_vector(field, cba.ambient(x));
                CHECK(cells.at(x) == expect);
            }
            for (const Location& tau : ba::locations(d - 2))
                CHECK(ba::bvalue_det(t, tau) == ba::bvalue_brace(cba, tau));
        };
        run(Q);
        run(F101);
    }
}

TEST_CASE("B-values are invariant under diagonal rescaling") {
    std::mt19937_64 rng(41);
    const PrimeField F101(101);
    for (int rep = 0; rep < 6; ++rep) {
        int d = 2 + rep % 3;
        auto t = ba::random_very_good(F101, d, rng());
        Matrix<PrimeField> h(F101, d + 1, d + 1), k(F101, d + 1, d + 1);
        for (int i = 0; i <= d; ++i) {
            h(i, i) = F101.random_nonzero(rng);
            k(i, i) = F101.random_nonzero(rng);
        }
        CHECK(ba::value_function_hat(h * t * k) == ba::value_function_hat(t));
    }
}

TEST_CASE("all B-values are nonzero") {
    std::mt19937_64 rng(43);
    for (int rep = 0; rep < 4; ++rep) {
        auto t = ba::random_very_good(Q, 4, rng());
        for (const auto& v : ba::value_function_hat(t).values()) CHECK_FALSE(is_zero(v));
    }
}
