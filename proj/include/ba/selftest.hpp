#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ba/billiard.hpp"
#include "ba/flags.hpp"
#include "ba/matrix.hpp"
#include "ba/valuefn.hpp"

namespace ba {

/// Options for the seeded invariant suite. `inject_fault` corrupts one
/// oracle comparison in the first trial; it exists so tests can confirm the
/// harness actually notices a broken oracle.
struct SelftestOptions {
    int d = 4;
    int trials = 20;
    std::uint64_t seed = 0;
    bool inject_fault = false;
};

struct SelftestResult {
    bool ok = true;
    int checks = 0;
    int failures = 0;
    std::string report;
};

namespace detail {

struct CheckCounter {
    std::string name;
    int passed = 0;
    int total = 0;
};

template <FieldType F>
Matrix<F> random_upper_triangular_invertible(const F& field, int n, std::mt19937_64& rng) {
    Matrix<F> t(field, n, n);
    for (int i = 0; i < n; ++i) {
        t(i, i) = field.random_nonzero(rng);
        for (int j = i + 1; j < n; ++j) t(i, j) = field.random_element(rng);
    }
    return t;
}

template <FieldType F>
Matrix<F> random_invertible_diagonal(const F& field, int n, std::mt19937_64& rng) {
    Matrix<F> m(field, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = field.random_nonzero(rng);
    return m;
}

}  // namespace detail

inline std::string field_name(const RationalField&) { return "rational"; }
inline std::string field_name(const PrimeField& f) { return "gf:" + std::to_string(f.modulus()); }

/// Runs the cross-oracle and round-trip invariant suites on seeded random
/// instances. Deterministic: identical options produce identical reports.
template <FieldType F>
SelftestResult run_selftest(const F& field, const SelftestOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<detail::CheckCounter> counters = {
        {"billiard axioms"},
        {"standard braces (black cliques)"},
        {"B-values: determinant vs brace"},
        {"B-values: flag intersections"},
        {"determinant table round trip"},
        {"B-values vs table contraction"},
        {"contraction round trips"},
        {"canonical forms and rescaling"},
        {"total opposition vs very good"},
    };
    auto check = [&](std::size_t idx, bool pass) {
        counters[idx].total += 1;
        if (pass) counters[idx].passed += 1;
    };

    for (int trial = 0; trial < opt.trials; ++trial) {
        int d = (opt.d >= 3) ? 2 + trial % (opt.d - 1) : opt.d;
        Matrix<F> t = matrix_from_determinants(random_value_function(field, d, rng));
        ConcreteBilliardArray<F> cba = standard_cba(t);

        check(0, verify_billiard(cba));

        {
            bool pass = true;
            for (const BlackClique& c : black_cliques(d)) {
                // lambda - mu must lie in the line of nu, i.e. the edge ratio
                // along the alpha-displacement is -1
                auto ratio = edge_ratio(cba, c.cells[0], c.cells[1]);
                if (!(ratio == -field.one())) { pass = false; break; }
            }
            check(1, pass);
        }

        if (d >= 2) {
            bool pass = true;
            bool first = true;
            for (const Location& tau : locations(d - 2)) {
                auto lhs = bvalue_det(t, tau);
                if (opt.inject_fault && trial == 0 && first) lhs = lhs + field.one();
                first = false;
                if (!(lhs == bvalue_brace(cba, tau))) { pass = false; break; }
            }
            check(2, pass);
        }

        {
            auto flags = flags_from_matrix(t);
            SubspaceTable<F> cells = billiard_from_flags(flags[0], flags[1], flags[2]);
            bool pass = true;
            for (const Location& x : locations(d))
                if (cells.at(x) != Subspace<F>::span_vector(field, cba.ambient(x))) { pass = false; break; }
            check(3, pass);
        }

        {
            ValueFunction<F> f = window_determinants(t);
            check(4, matrix_from_determinants(f) == t);
            if (d >= 2) check(5, hexagon_ratio(f) == value_function_hat(t));
            if (d >= 2) {
                ValueFunction<F> g = random_value_function(field, d - 2, rng);
                bool pass = hexagon_ratio(hexagon_ratio_inverse_fine(g)) == g;
                pass = pass && hexagon_ratio_inverse_fine(hexagon_ratio(f)) == fine_form(f);
                check(6, pass);
            }
        }

        {
            NiceForm<F> nice = nice_form(t);
            bool pass = is_nice(nice.matrix) && nice_form(nice.matrix).matrix == nice.matrix;
            pass = pass && nice.h * t * nice.k == nice.matrix;
            Matrix<F> h = detail::random_invertible_diagonal(field, d + 1, rng);
            Matrix<F> k = detail::random_invertible_diagonal(field, d + 1, rng);
            Matrix<F> scaled = h * t * k;
            pass = pass && matrices_equivalent(t, scaled);
            if (d >= 2) pass = pass && value_function_hat(scaled) == value_function_hat(t);
            check(7, pass);
        }

        {
            Matrix<F> u = detail::random_upper_triangular_invertible(field, d + 1, rng);
            auto flags = flags_from_matrix(u);
            bool pass = is_totally_opposite(flags[0], flags[1], flags[2]) == is_very_good(u);
            pass = pass && is_very_good(u) == is_very_good(inverse(u));
            check(8, pass);
        }
    }

    SelftestResult result;
    std::ostringstream os;
    os << "selftest: field=" << field_name(field) << " d=" << opt.d << " trials=" << opt.trials
       << " seed=" << opt.seed << "\n";
    for (const auto& c : counters) {
        os << "  " << c.name;
        for (std::size_t i = c.name.size(); i < 36; ++i) os << (i % 2 ? '.' : ' ');
        os << ' ' << c.passed << '/' << c.total << "\n";
        result.checks += c.total;
        result.failures += c.total - c.passed;
    }
    result.ok = result.failures == 0;
    os << "selftest: " << (result.ok ? "PASS" : "FAIL") << " (" << opt.trials << " trials, " << result.checks
       << " checks, " << result.failures << " failures)\n";
    result.report = os.str();
    return result;
}

}  // namespace ba
