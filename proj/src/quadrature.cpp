#include "smax/quadrature.hpp"

#include <array>

#include <boost/math/quadrature/gauss.hpp>

namespace smax::detail {

namespace {

// Gauss-Legendre nodes and weights mapped to [0, 1].
template <unsigned Points>
std::array<std::pair<double, double>, Points> unit_interval_gauss() {
    using Rule = boost::math::quadrature::gauss<double, Points>;
    const auto& x = Rule::abscissa();
    const auto& w = Rule::weights();
    std::array<std::pair<double, double>, Points> out{};
    std::size_t n = 0;
    // Boost stores the non-negative half; for odd counts x[0] = 0.
    for (std::size_t k = 0; k < x.size(); ++k) {
        out[n++] = {0.5 * (1.0 + x[k]), 0.5 * w[k]};
        if (x[k] != 0.0) {
            out[n++] = {0.5 * (1.0 - x[k]), 0.5 * w[k]};
        }
    }
    return out;
}

}  // namespace

CellRule make_cell_rule(QuadratureScheme scheme) {
    CellRule rule;
    if (scheme == QuadratureScheme::Midpoint) {
        rule.square = {{0.5, 0.5, 1.0}};
        rule.diagonal = {{1.0 / 3.0, 2.0 / 3.0, 0.5}, {2.0 / 3.0, 1.0 / 3.0, 0.5}};
        return rule;
    }
    const auto g = unit_interval_gauss<3>();
    for (const auto& [x, wx] : g) {
        for (const auto& [y, wy] : g) {
            rule.square.push_back({x, y, wx * wy});
            // Triangle u < v collapsed onto the unit square: v = x, u = x * y.
            rule.diagonal.push_back({x * y, x, wx * wy * x});
            rule.diagonal.push_back({x, x * y, wx * wy * x});
        }
    }
    return rule;
}

}  // namespace smax::detail
