#pragma once

#include <concepts>
#include <string>

namespace qc {

/// Contract every exact coefficient field satisfies. The polynomial,
/// linear-algebra and Groebner engines are generic over this, so they run
/// over Q and Q(w) uniformly.
template <typename F>
concept Field = std::regular<F> && std::constructible_from<F, int> &&
    requires(const F x, const F y) {
        { x + y } -> std::same_as<F>;
        { x - y } -> std::same_as<F>;
        { x * y } -> std::same_as<F>;
        { x / y } -> std::same_as<F>;
        { -x } -> std::same_as<F>;
        { x.inverse() } -> std::same_as<F>;
        { x.is_zero() } -> std::same_as<bool>;
        { x.is_one() } -> std::same_as<bool>;
        { F::zero() } -> std::same_as<F>;
        { F::one() } -> std::same_as<F>;
        { x.to_string() } -> std::same_as<std::string>;
    };

}  // namespace qc
