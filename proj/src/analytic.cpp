#include "smax/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "smax/logic.hpp"

namespace smax {

namespace {

void require_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

bool on_boundary(double p) { return p == 0.0 || p == 1.0; }

// 1 / (1 + exp(-z)) without overflow for either sign of z.
double logistic(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

double StationaryDistribution::mean() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += static_cast<double>(i) * probs[i];
    }
    return acc;
}

double StationaryDistribution::upper_half() const {
    double acc = 0.0;
    for (std::size_t i = probs.size() / 2; i < probs.size(); ++i) {
        acc += probs[i];
    }
    return acc;
}

StationaryDistribution stationary_from_log_ratio(double log_ratio, int m) {
    if (m < 2) {
        throw std::invalid_argument("a linear FSM needs at least two states");
    }
    if (!std::isfinite(log_ratio)) {
        throw BoundaryInputError("state ratio is 0 or infinite; use the boundary limit");
    }
    const double peak = log_ratio > 0.0 ? log_ratio * (m - 1) : 0.0;
    StationaryDistribution dist{std::vector<double>(static_cast<std::size_t>(m))};
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
        dist.probs[i] = std::exp(log_ratio * i - peak);
        total += dist.probs[i];
    }
    for (double& p : dist.probs) {
        p /= total;
    }
    return dist;
}

StationaryDistribution stationary_plain(double x, int m) {
    require_probability(x, "x");
    if (on_boundary(x)) {
        throw BoundaryInputError("plain FSM input probability is 0 or 1; use the boundary limit");
    }
    return stationary_from_log_ratio(std::log(x) - std::log1p(-x), m);
}

double enabled_log_ratio(double a, double b) {
    require_probability(a, "a");
    require_probability(b, "b");
    if (on_boundary(a) || on_boundary(b)) {
        throw BoundaryInputError("enabled FSM inputs include 0 or 1; use the boundary limit");
    }
    // a(1-b) - b(1-a) = a - b.
    return std::log1p((a - b) / (b * (1.0 - a)));
}

StationaryDistribution stationary_enabled(double a, double b, int m) {
    return stationary_from_log_ratio(enabled_log_ratio(a, b), m);
}

double stanh_closed(double x, int m) {
    require_even_states(m);
    require_probability(x, "x");
    if (x == 0.0 || x == 1.0) {
        return x;
    }
    return logistic(0.5 * m * (std::log(x) - std::log1p(-x)));
}

ClosedFormResult smax_li_closed(double a, double b, int m) {
    require_even_states(m);
    require_probability(a, "a");
    require_probability(b, "b");
    if (a == b) {
        return {a, ClosedFormBranch::LimitAEqualsB};
    }
    if (std::abs(a - b) == 1.0) {
        return {1.0, ClosedFormBranch::Boundary};
    }
    // ln((1 + a - b) / (1 + b - a))
    const double log_q = std::log1p(2.0 * (a - b) / (1.0 + b - a));
    return {a + (b - a) * logistic(-0.5 * m * log_q), ClosedFormBranch::Regular};
}

ClosedFormResult smax_yu_closed(double a, double b, int m) {
    require_even_states(m);
    require_probability(a, "a");
    require_probability(b, "b");
    if (a == b) {
        return {a, ClosedFormBranch::LimitAEqualsB};
    }
    if (on_boundary(a) || on_boundary(b)) {
        return {std::max(a, b), ClosedFormBranch::Boundary};
    }
    const double log_r = enabled_log_ratio(a, b);
    return {a + (b - a) * logistic(-0.5 * m * log_r), ClosedFormBranch::Regular};
}

ClosedFormResult smax_novel_closed(double a, double b, int m) {
    if (m < 2) {
        throw std::invalid_argument("the shift-register circuit needs M >= 2 (L >= 1)");
    }
    require_probability(a, "a");
    require_probability(b, "b");
    if (on_boundary(a) || on_boundary(b)) {
        return {std::max(a, b), ClosedFormBranch::Boundary};
    }
    if (a == b) {
        // First-order expansion of the ratio around a = b.
        return {b + b * (1.0 - b) / m, ClosedFormBranch::LimitAEqualsB};
    }
    // ln(b(1-a) / (a(1-b))); b(1-a) - a(1-b) = b - a.
    const double log_r = std::log1p((b - a) / (a * (1.0 - b)));
    return {b + (b - a) / std::expm1(m * log_r), ClosedFormBranch::Regular};
}

ClosedFormResult smax_closed(Architecture arch, double a, double b, int m) {
    switch (arch) {
        case Architecture::Li: return smax_li_closed(a, b, m);
        case Architecture::Yu: return smax_yu_closed(a, b, m);
        case Architecture::Novel: return smax_novel_closed(a, b, m);
    }
    throw std::invalid_argument("unknown architecture");
}

ClosedFormResult smin_closed(Architecture arch, double a, double b, int m) {
    if (arch == Architecture::Novel) {
        const ClosedFormResult dual = smax_novel_closed(1.0 - a, 1.0 - b, m);
        return {1.0 - dual.c, dual.branch};
    }
    const ClosedFormResult max = smax_closed(arch, a, b, m);
    return {a + b - max.c, max.branch};
}

}  // namespace smax
