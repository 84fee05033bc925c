#pragma once

#include <stdexcept>
#include <vector>

#include "smax/circuits.hpp"

namespace smax {

/// Raised when a chain parameterization sits on the boundary a, b in {0, 1}
/// where the stationary distribution degenerates; callers use limit branches.
class BoundaryInputError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Steady-state probabilities P_0 .. P_{M-1} of a saturating linear FSM.
struct StationaryDistribution {
    std::vector<double> probs;

    [[nodiscard]] int num_states() const { return static_cast<int>(probs.size()); }
    [[nodiscard]] double first() const { return probs.front(); }
    [[nodiscard]] double last() const { return probs.back(); }
    /// Expected state, sum_i i P_i.
    [[nodiscard]] double mean() const;
    /// Mass of the upper half, states M/2 .. M-1.
    [[nodiscard]] double upper_half() const;
};

/// Geometric distribution P_i proportional to r^i, given ln r. Computed in log
/// space so large |M ln r| cannot overflow; ln r = 0 gives the uniform vector.
[[nodiscard]] StationaryDistribution stationary_from_log_ratio(double log_ratio, int m);

/// Plain chain: up with probability x, down with 1 - x. Needs 0 < x < 1.
[[nodiscard]] StationaryDistribution stationary_plain(double x, int m);
/// Enabled chain: up with a(1-b), down with b(1-a). Needs 0 < a, b < 1.
[[nodiscard]] StationaryDistribution stationary_enabled(double a, double b, int m);

/// ln(a(1-b) / (b(1-a))), written as log1p((a-b) / (b(1-a))) so it stays
/// accurate when a is close to b. Needs 0 < a, b < 1.
[[nodiscard]] double enabled_log_ratio(double a, double b);

/// STanh transfer t / (1 + t), t = (x / (1-x))^(M/2). x = 0 and x = 1 map to
/// their limits. Throws std::invalid_argument for odd M or x outside [0, 1].
[[nodiscard]] double stanh_closed(double x, int m);

enum class ClosedFormBranch { Regular, LimitAEqualsB, Boundary };

struct ClosedFormResult {
    double c = 0.0;
    ClosedFormBranch branch = ClosedFormBranch::Regular;
};

/// c = a + (b - a) / (1 + ((1 + a - b) / (1 + b - a))^(M/2)).
[[nodiscard]] ClosedFormResult smax_li_closed(double a, double b, int m);
/// c = a + (b - a) / (1 + (a(1-b) / (b(1-a)))^(M/2)); boundaries give max(a, b).
[[nodiscard]] ClosedFormResult smax_yu_closed(double a, double b, int m);
/// c = b + (b - a) / ((b(1-a) / (a(1-b)))^M - 1) with M = L + 1.
/// At a = b the 0/0 resolves to b + b(1-b)/M; boundaries give max(a, b).
[[nodiscard]] ClosedFormResult smax_novel_closed(double a, double b, int m);

[[nodiscard]] ClosedFormResult smax_closed(Architecture arch, double a, double b, int m);
/// Li/Yu: a + b - c_max(a, b). Novel: 1 - c_max(1 - a, 1 - b).
[[nodiscard]] ClosedFormResult smin_closed(Architecture arch, double a, double b, int m);

}  // namespace smax
