#pragma once

#include <cstddef>
#include <span>

namespace smax {

/// Selects the OpenMP kernel or the serial reference loop it is tested against.
enum class Execution { OpenMP, Serial };

/// Pairwise sum with a fixed recursion shape. The result depends only on the
/// input order, never on how the inputs were produced, so reductions over
/// per-row or per-trial partials are bit-stable across thread counts.
[[nodiscard]] inline double pairwise_sum(std::span<const double> values) {
    constexpr std::size_t kLeaf = 8;
    if (values.size() <= kLeaf) {
        double acc = 0.0;
        for (double v : values) {
            acc += v;
        }
        return acc;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

}  // namespace smax
