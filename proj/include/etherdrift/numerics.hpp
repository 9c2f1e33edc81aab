#pragma once

#include <cstddef>
#include <span>

#include "etherdrift/vec3.hpp"

namespace etherdrift::numerics {

/// Fixed-shape pairwise (cascade) summation. The tree depends only on the
/// input length, so results are reproducible regardless of how the terms were
/// produced.
template <typename T>
T pairwise_sum(std::span<const T> terms) {
    constexpr std::size_t kLeaf = 8;
    if (terms.size() <= kLeaf) {
        T acc{};
        for (const T& t : terms) acc += t;
        return acc;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

/// Composite trapezoid rule for uniformly spaced samples.
double trapezoid(std::span<const double> samples, double spacing);

}  // namespace etherdrift::numerics
