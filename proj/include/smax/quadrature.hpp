#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "smax/parallel.hpp"

namespace smax {

enum class QuadratureScheme {
    /// Cell midpoints off the diagonal, triangle centroids on it.
    Midpoint,
    /// 3x3 Gauss-Legendre per cell; diagonal cells are split along a = b and
    /// each half integrated with a collapsed (Duffy) Gauss-Legendre rule.
    GaussLegendre,
};

/// Composite rule over the unit square on a res x res cell grid. The cells on
/// the diagonal are split into two triangles, so no node ever lies on a = b
/// (where the integrands have a kink) or on the boundary of the square.
struct QuadratureConfig {
    QuadratureScheme scheme = QuadratureScheme::GaussLegendre;
    int resolution = 512;
    /// Keep doubling until successive estimates differ by less than rel_tol.
    bool refine = true;
    double rel_tol = 1e-4;
    int max_resolution = 4096;
};

struct QuadratureResult {
    std::vector<double> values;
    int resolution = 0;
    /// Max relative change over components at the last doubling (0 without refinement).
    double rel_change = 0.0;
};

class QuadratureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Node {
    double u;
    double v;
    double w;
};

struct CellRule {
    std::vector<Node> square;    // off-diagonal cells
    std::vector<Node> diagonal;  // both triangles of a diagonal cell
};

[[nodiscard]] CellRule make_cell_rule(QuadratureScheme scheme);

template <class F>
void accumulate_cell(F& f, std::span<const Node> nodes, double a0, double b0, double h, std::span<double> tmp,
                     std::span<double> acc) {
    for (const Node& node : nodes) {
        f(a0 + node.u * h, b0 + node.v * h, tmp);
        for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k] += node.w * tmp[k];
        }
    }
}

template <class F>
void accumulate_row(F& f, const CellRule& rule, int i, int res, std::span<double> tmp, std::span<double> acc) {
    const double h = 1.0 / res;
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int j = 0; j < res; ++j) {
        const auto& nodes = i == j ? rule.diagonal : rule.square;
        accumulate_cell(f, std::span<const Node>(nodes), i * h, j * h, h, tmp, acc);
    }
}

}  // namespace detail

/// One grid level. `f(a, b, out)` writes `components` integrand values for the
/// point (a, b). OpenMP over rows of the grid; row partials are combined with
/// pairwise_sum, so the result is identical for any thread count.
template <class F>
[[nodiscard]] std::vector<double> integrate_grid(F f, std::size_t components, int res, QuadratureScheme scheme) {
    const detail::CellRule rule = detail::make_cell_rule(scheme);
    std::vector<double> rows(static_cast<std::size_t>(res) * components);
#pragma omp parallel
    {
        F local = f;
        std::vector<double> tmp(components);
#pragma omp for schedule(static)
        for (int i = 0; i < res; ++i) {
            detail::accumulate_row(local, rule, i, res, tmp,
                                   std::span<double>(rows).subspan(static_cast<std::size_t>(i) * components, components));
        }
    }
    const double cell_area = 1.0 / (static_cast<double>(res) * res);
    std::vector<double> column(res);
    std::vector<double> out(components);
    for (std::size_t k = 0; k < components; ++k) {
        for (int i = 0; i < res; ++i) {
            column[i] = rows[static_cast<std::size_t>(i) * components + k];
        }
        out[k] = pairwise_sum(column) * cell_area;
    }
    return out;
}

/// Serial reference for integrate_grid: one running sum over every node.
template <class F>
[[nodiscard]] std::vector<double> integrate_grid_serial(F f, std::size_t components, int res,
                                                        QuadratureScheme scheme) {
    const detail::CellRule rule = detail::make_cell_rule(scheme);
    const double h = 1.0 / res;
    std::vector<double> tmp(components);
    std::vector<double> total(components, 0.0);
    for (int i = 0; i < res; ++i) {
        for (int j = 0; j < res; ++j) {
            const auto& nodes = i == j ? rule.diagonal : rule.square;
            detail::accumulate_cell(f, std::span<const detail::Node>(nodes), i * h, j * h, h, tmp, total);
        }
    }
    for (double& v : total) {
        v *= h * h;
    }
    return total;
}

/// Integrates over [0,1]^2 with resolution doubling until every component
/// changes by less than cfg.rel_tol. Throws QuadratureError if that does not
/// happen by cfg.max_resolution.
template <class F>
[[nodiscard]] QuadratureResult integrate_unit_square(F f, std::size_t components, const QuadratureConfig& cfg,
                                                     Execution exec = Execution::OpenMP) {
    if (cfg.resolution < 32) {
        throw std::invalid_argument("quadrature resolution must be at least 32");
    }
    if (cfg.refine && cfg.max_resolution < 2 * cfg.resolution) {
        throw std::invalid_argument("max_resolution must allow at least one doubling");
    }
    auto level = [&](int res) {
        return exec == Execution::OpenMP ? integrate_grid(f, components, res, cfg.scheme)
                                         : integrate_grid_serial(f, components, res, cfg.scheme);
    };
    QuadratureResult result{level(cfg.resolution), cfg.resolution, 0.0};
    if (!cfg.refine) {
        return result;
    }
    for (int res = cfg.resolution * 2; res <= cfg.max_resolution; res *= 2) {
        std::vector<double> finer = level(res);
        double change = 0.0;
        for (std::size_t k = 0; k < components; ++k) {
            const double scale = std::max(std::abs(finer[k]), 1e-300);
            change = std::max(change, std::abs(finer[k] - result.values[k]) / scale);
        }
        result = {std::move(finer), res, change};
        if (change < cfg.rel_tol) {
            return result;
        }
    }
    throw QuadratureError("quadrature did not converge to relative " + std::to_string(cfg.rel_tol) +
                          " by resolution " + std::to_string(cfg.max_resolution) + " (last change " +
                          std::to_string(result.rel_change) + ")");
}

}  // namespace smax
