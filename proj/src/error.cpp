#include "smax/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "smax/analytic.hpp"
#include "smax/generator.hpp"

namespace smax {

namespace {

void require_states(int m) {
    if (m < 2) {
        throw std::invalid_argument("the shift-register circuit needs M >= 2 (L >= 1)");
    }
}

void require_stream_length(std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("stream length must be at least 1");
    }
}

bool on_boundary(double a, double b) { return a <= 0.0 || a >= 1.0 || b <= 0.0 || b >= 1.0; }

// Mean of P_i ~ exp(i x) on {0..M-1} for x < 0.
double truncated_geometric_mean(double x, int m) {
    if (std::abs(x) * m < 1e-4) {
        return 0.5 * (m - 1) + x * (static_cast<double>(m) * m - 1.0) / 12.0;
    }
    return 1.0 / std::expm1(-x) - m / std::expm1(-m * x);
}

}  // namespace

ChainSummary enabled_chain_summary(double a, double b, int m) {
    require_states(m);
    const double up = a * (1.0 - b);
    const double down = b * (1.0 - a);
    if (up == 0.0) {
        return {1.0, 0.0, 0.0};
    }
    if (down == 0.0) {
        return {0.0, 1.0, static_cast<double>(m - 1)};
    }
    const double x = enabled_log_ratio(a, b);
    if (x == 0.0) {
        const double uniform = 1.0 / m;
        return {uniform, uniform, 0.5 * (m - 1)};
    }
    if (x < 0.0) {
        const double p_first = std::expm1(x) / std::expm1(m * x);
        return {p_first, std::exp((m - 1) * x) * p_first, truncated_geometric_mean(x, m)};
    }
    // Mirror image of the x < 0 chain.
    const double p_last = std::expm1(-x) / std::expm1(-m * x);
    return {std::exp(-(m - 1) * x) * p_last, p_last, (m - 1) - truncated_geometric_mean(-x, m)};
}

double p_err_right(double a, double b, int m) {
    require_states(m);
    if (on_boundary(a, b)) {
        return 0.0;
    }
    return enabled_chain_summary(a, b, m).p_last * a * (1.0 - b);
}

double p_err_left(double a, double b, int m) {
    require_states(m);
    if (on_boundary(a, b)) {
        return 0.0;
    }
    return enabled_chain_summary(a, b, m).p_first * b * (1.0 - a);
}

double expected_added(std::uint64_t n, double a, double b, int m) {
    return static_cast<double>(n) * p_err_left(a, b, m);
}

double expected_remaining(double a, double b, int m) { return enabled_chain_summary(a, b, m).mean_state; }

double p_err_a_gt_b(double a, double b, int m, std::uint64_t n) {
    require_stream_length(n);
    return std::abs(p_err_left(a, b, m) - expected_remaining(a, b, m) / static_cast<double>(n));
}

double expected_abs_error(Architecture arch, int m, const QuadratureConfig& quad, Execution exec) {
    validate_states(arch, m);
    auto integrand = [arch, m](double a, double b, std::span<double> out) {
        out[0] = std::abs(std::max(a, b) - smax_closed(arch, a, b, m).c);
    };
    return integrate_unit_square(integrand, 1, quad, exec).values[0];
}

ErrorProbabilities error_probabilities(int m, std::span<const std::uint64_t> ns, const QuadratureConfig& quad,
                                       Execution exec) {
    require_states(m);
    std::vector<double> inverse_lengths;
    for (std::uint64_t n : ns) {
        require_stream_length(n);
        inverse_lengths.push_back(1.0 / static_cast<double>(n));
    }
    const std::size_t k = inverse_lengths.size();
    // Components 0..k-1 are the finite lengths, component k the n -> infinity limit.
    auto integrand = [m, inverse_lengths, k](double a, double b, std::span<double> out) {
        const ChainSummary chain = enabled_chain_summary(a, b, m);
        if (a <= b) {
            std::fill(out.begin(), out.end(), chain.p_last * a * (1.0 - b));
            return;
        }
        const double left = chain.p_first * b * (1.0 - a);
        for (std::size_t i = 0; i < k; ++i) {
            out[i] = std::abs(left - chain.mean_state * inverse_lengths[i]);
        }
        out[k] = left;
    };
    QuadratureResult result = integrate_unit_square(integrand, k + 1, quad, exec);
    ErrorProbabilities probs;
    probs.lower_bound = result.values[k];
    result.values.pop_back();
    probs.per_length = std::move(result.values);
    return probs;
}

double expected_error_probability(int m, std::uint64_t n, const QuadratureConfig& quad, Execution exec) {
    const std::uint64_t ns[] = {n};
    return error_probabilities(m, ns, quad, exec).per_length[0];
}

double lower_bound(int m, const QuadratureConfig& quad, Execution exec) {
    return error_probabilities(m, {}, quad, exec).lower_bound;
}

std::vector<ErrorReport> optimal_lengths(std::span<const std::uint64_t> ns, std::span<const int> lengths,
                                         const QuadratureConfig& quad) {
    if (lengths.empty()) {
        throw std::invalid_argument("the register length range is empty");
    }
    std::vector<ErrorReport> reports(ns.size());
    for (std::size_t i = 0; i < ns.size(); ++i) {
        reports[i].n = ns[i];
    }
    for (int l : lengths) {
        if (l < 1) {
            throw std::invalid_argument("shift register length must be at least 1");
        }
        const ErrorProbabilities probs = error_probabilities(l + 1, ns, quad);
        for (std::size_t i = 0; i < ns.size(); ++i) {
            reports[i].rows.push_back({l, probs.per_length[i], probs.lower_bound, std::nullopt});
        }
    }
    for (ErrorReport& report : reports) {
        double best = std::numeric_limits<double>::infinity();
        for (const ErrorRow& row : report.rows) {
            if (row.analytic < best || (row.analytic == best && row.l < report.l_opt)) {
                best = row.analytic;
                report.l_opt = row.l;
            }
        }
    }
    return reports;
}

ErrorReport optimal_length(std::uint64_t n, std::span<const int> lengths, const QuadratureConfig& quad) {
    const std::uint64_t ns[] = {n};
    return optimal_lengths(ns, lengths, quad).front();
}

double trial_error(std::uint64_t n, int l, std::uint64_t master_seed, std::uint64_t trial) {
    const StreamGenerator gen{SngMode::PseudoRandom, master_seed};
    auto engine = make_engine(gen, derive_seed(master_seed, 0, trial));
    const double a = uniform01(engine);
    const double b = uniform01(engine);
    const BitStream sa = generate(a, n, gen, derive_seed(master_seed, 1, trial));
    const BitStream sb = generate(b, n, gen, derive_seed(master_seed, 2, trial));
    const CircuitRun run = smax_novel(sa, sb, l);
    const auto reference = static_cast<double>(std::max(ones(sa), ones(sb)));
    return std::abs(static_cast<double>(ones(run.output)) - reference) / static_cast<double>(n);
}

MonteCarloEstimate monte_carlo_error(std::uint64_t n, int l, std::uint64_t trials, std::uint64_t master_seed) {
    if (trials == 0) {
        throw std::invalid_argument("at least one trial is required");
    }
    require_stream_length(n);
    require_states(l + 1);
    std::vector<double> errors(trials);
    const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t t = 0; t < count; ++t) {
        errors[t] = trial_error(n, l, master_seed, static_cast<std::uint64_t>(t));
    }
    const double mean = pairwise_sum(errors) / static_cast<double>(trials);
    if (trials == 1) {
        return {mean, 0.0, trials};
    }
    for (double& e : errors) {
        e = (e - mean) * (e - mean);
    }
    const double variance = pairwise_sum(errors) / static_cast<double>(trials - 1);
    return {mean, std::sqrt(variance / static_cast<double>(trials)), trials};
}

MonteCarloEstimate monte_carlo_error_serial(std::uint64_t n, int l, std::uint64_t trials,
                                            std::uint64_t master_seed) {
    if (trials == 0) {
        throw std::invalid_argument("at least one trial is required");
    }
    require_stream_length(n);
    require_states(l + 1);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double e = trial_error(n, l, master_seed, t);
        sum += e;
        sum_sq += e * e;
    }
    const auto count = static_cast<double>(trials);
    const double mean = sum / count;
    if (trials == 1) {
        return {mean, 0.0, trials};
    }
    const double variance = std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0));
    return {mean, std::sqrt(variance / count), trials};
}

}  // namespace smax
