#pragma once

#include <concepts>
#include <cstdint>

#include "ba/prime_field.hpp"
#include "ba/rational.hpp"

namespace ba {

/// A field handle: a lightweight value describing a computable field and
/// manufacturing its elements. Elements support exact +,-,*,/ (division by
/// zero throws), negation and structural equality.
template <class F>
concept FieldType = requires(const F& f, const typename F::Element& a, const typename F::Element& b) {
    { f.zero() } -> std::same_as<typename F::Element>;
    { f.one() } -> std::same_as<typename F::Element>;
    { f.from_int(std::int64_t{}) } -> std::same_as<typename F::Element>;
    { a + b } -> std::same_as<typename F::Element>;
    { a - b } -> std::same_as<typename F::Element>;
    { a * b } -> std::same_as<typename F::Element>;
    { a / b } -> std::same_as<typename F::Element>;
    { -a } -> std::same_as<typename F::Element>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

template <FieldType F>
typename F::Element field_pow(const F& field, typename F::Element base, unsigned long long exp) {
    auto acc = field.one();
    while (exp != 0) {
        if (exp & 1) acc = acc * base;
        base = base * base;
        exp >>= 1;
    }
    return acc;
}

}  // namespace ba
