#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smax/circuits.hpp"
#include "smax/quadrature.hpp"

namespace smax::cli {

/// Bad flags or ranges; maps to exit code 2.
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// start:stop:step, inclusive of stop within half a step. "x" alone is the
/// single value x; "start:stop" uses step 1.
struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    [[nodiscard]] std::vector<double> values() const;
};

[[nodiscard]] Range parse_range(std::string_view text);
/// Comma list of integers or integer ranges, e.g. "16,64" or "2:50:2".
[[nodiscard]] std::vector<int> parse_int_list(std::string_view text);
/// Comma list of stream lengths; accepts 1e4-style literals if they are integral.
[[nodiscard]] std::vector<std::uint64_t> parse_length_list(std::string_view text);

/// Real formatting used in every CSV: 9 significant digits, scientific.
[[nodiscard]] std::string format_real(double value);

enum class Command { Curve, AbsError, ErrorVsLength, OptimalLength, Simulate };

struct SweepSpec {
    Command command = Command::Curve;
    Architecture arch = Architecture::Novel;
    bool minimum = false;
    double a = 0.5;
    double b = 0.5;  // simulate only
    Range b_range{0.4, 0.6, 0.01};
    std::vector<int> states{16, 64};
    std::vector<int> lengths;
    std::vector<std::uint64_t> stream_lengths{1000, 10000, 30000, 50000, 100000};
    std::uint64_t n = 1000000;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    QuadratureConfig quad;
    bool same_streams = false;
    std::string dump_path;
};

void cmd_curve(const SweepSpec& spec, std::ostream& out);
void cmd_abs_error(const SweepSpec& spec, std::ostream& out);
void cmd_error_vs_length(const SweepSpec& spec, std::ostream& out);
void cmd_optimal_length(const SweepSpec& spec, std::ostream& out);
void cmd_simulate(const SweepSpec& spec, std::ostream& out);

/// Parses argv, runs one command, writes CSV to `out` (or --output) and
/// diagnostics to `err`. Returns 0, 1 (numerical failure) or 2 (usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace smax::cli
