#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smax/circuits.hpp"
#include "smax/parallel.hpp"
#include "smax/quadrature.hpp"

namespace smax {

/// O(1) summary of the enabled chain (up a(1-b), down b(1-a)) of the
/// shift-register circuit: P_0, P_{M-1} and the expected occupancy.
/// Degenerate inputs use the limits of a chain started empty.
struct ChainSummary {
    double p_first = 0.0;
    double p_last = 0.0;
    double mean_state = 0.0;
};
[[nodiscard]] ChainSummary enabled_chain_summary(double a, double b, int m);

/// Right-overflow error probability for a <= b: P_{M-1} a (1 - b). 0 on the boundary.
[[nodiscard]] double p_err_right(double a, double b, int m);
/// Left-overflow error probability for a > b: P_0 b (1 - a). 0 on the boundary.
[[nodiscard]] double p_err_left(double a, double b, int m);
/// Expected number of left-overflow ones added over n cycles.
[[nodiscard]] double expected_added(std::uint64_t n, double a, double b, int m);
/// Expected ones left in the register, sum_i i P_i.
[[nodiscard]] double expected_remaining(double a, double b, int m);
/// Finite-stream error probability for a > b: |P_{e,0} - E_r / n|.
[[nodiscard]] double p_err_a_gt_b(double a, double b, int m, std::uint64_t n);

/// Expected |max(a, b) - c(a, b, M)| for a, b uniform on [0, 1].
[[nodiscard]] double expected_abs_error(Architecture arch, int m, const QuadratureConfig& quad = {},
                                        Execution exec = Execution::OpenMP);

/// Expected error probability of the shift-register circuit with M = L + 1
/// states on streams of length n.
[[nodiscard]] double expected_error_probability(int m, std::uint64_t n, const QuadratureConfig& quad = {},
                                                Execution exec = Execution::OpenMP);
/// The n -> infinity limit of expected_error_probability.
[[nodiscard]] double lower_bound(int m, const QuadratureConfig& quad = {}, Execution exec = Execution::OpenMP);

/// expected_error_probability for several stream lengths plus the lower bound,
/// from one quadrature pass.
struct ErrorProbabilities {
    std::vector<double> per_length;
    double lower_bound = 0.0;
};
[[nodiscard]] ErrorProbabilities error_probabilities(int m, std::span<const std::uint64_t> ns,
                                                     const QuadratureConfig& quad = {},
                                                     Execution exec = Execution::OpenMP);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

struct ErrorRow {
    int l = 0;
    double analytic = 0.0;
    double lower_bound = 0.0;
    std::optional<MonteCarloEstimate> empirical;
};

/// Analytic error probability per register length for one stream length.
struct ErrorReport {
    std::uint64_t n = 0;
    std::vector<ErrorRow> rows;
    /// Argmin of the analytic column; ties go to the smaller L.
    int l_opt = 0;
};

/// Evaluates every L in `lengths` (M = L + 1) and picks the optimum.
[[nodiscard]] ErrorReport optimal_length(std::uint64_t n, std::span<const int> lengths,
                                         const QuadratureConfig& quad = {});
/// Same as optimal_length for several n, sharing one quadrature pass per L.
[[nodiscard]] std::vector<ErrorReport> optimal_lengths(std::span<const std::uint64_t> ns,
                                                       std::span<const int> lengths,
                                                       const QuadratureConfig& quad = {});

/// Error of one simulated trial: draws a, b uniformly, generates independent
/// streams of length n, runs smax_novel and returns |o(C) - max(o(A), o(B))| / n.
[[nodiscard]] double trial_error(std::uint64_t n, int l, std::uint64_t master_seed, std::uint64_t trial);

/// Mean and standard error of trial_error over `trials` trials. Trials run
/// under OpenMP and are reduced in trial order, so the result depends only on
/// the arguments.
[[nodiscard]] MonteCarloEstimate monte_carlo_error(std::uint64_t n, int l, std::uint64_t trials,
                                                   std::uint64_t master_seed);
/// Serial reference for monte_carlo_error.
[[nodiscard]] MonteCarloEstimate monte_carlo_error_serial(std::uint64_t n, int l, std::uint64_t trials,
                                                          std::uint64_t master_seed);

}  // namespace smax
