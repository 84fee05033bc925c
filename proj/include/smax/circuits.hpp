#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "smax/bitstream.hpp"

namespace smax {

/// The three stochastic max/min architectures.
///   Li    - stochastic comparator (input mux + STanh) driving the output mux.
///   Yu    - XOR-enabled two-input STanh driving the output mux.
///   Novel - XOR-enabled shift register of length L = M - 1.
enum class Architecture { Li, Yu, Novel };

[[nodiscard]] std::string_view to_string(Architecture arch);
/// Accepts "li", "yu", "novel". Throws std::invalid_argument otherwise.
[[nodiscard]] Architecture parse_architecture(std::string_view name);

/// Validates the size parameter: even M >= 2 for Li/Yu, M >= 2 (L >= 1) for Novel.
void validate_states(Architecture arch, int m);

/// Output of a shift-register circuit run plus its event counters.
struct CircuitRun {
    BitStream output;
    std::uint64_t right_overflows = 0;  // o_R: excess one emitted from a full register
    std::uint64_t left_overflows = 0;   // o_L: decrement requested on an empty register
    std::uint64_t remaining_ones = 0;   // o_S: occupancy after the last cycle
    int final_state = 0;
};

/// Li-style SMax. D = sel_half ? A : NOT B feeds an M-state STanh, whose
/// Moore output selects A (1) or B (0). sel_half must be an independent p = 1/2
/// stream. Throws std::invalid_argument on length mismatch or odd M.
[[nodiscard]] BitStream smax_li(const BitStream& a, const BitStream& b, const BitStream& sel_half, int m,
                                std::optional<int> initial_state = std::nullopt);
/// Li-style SMin: same datapath with the final multiplexer inputs exchanged.
[[nodiscard]] BitStream smin_li(const BitStream& a, const BitStream& b, const BitStream& sel_half, int m,
                                std::optional<int> initial_state = std::nullopt);

/// Yu-style SMax. The FSM steps in direction A[i] when A[i] XOR B[i] = 1.
[[nodiscard]] BitStream smax_yu(const BitStream& a, const BitStream& b, int m,
                                std::optional<int> initial_state = std::nullopt);
[[nodiscard]] BitStream smin_yu(const BitStream& a, const BitStream& b, int m,
                                std::optional<int> initial_state = std::nullopt);

/// Shift-register SMax with register length l, starting empty.
///
/// The register is tracked by its occupancy s (ones enter from the left,
/// zeros from the right, so the contents are always s left-aligned ones):
///   A = B        : C = B, s unchanged
///   A = 0, B = 1 : C = 1, s - 1 or a left overflow when s = 0
///   A = 1, B = 0 : C = (s == l), s + 1 or a right overflow when s = l
[[nodiscard]] CircuitRun smax_novel(const BitStream& a, const BitStream& b, int l);
/// NOT smax_novel(NOT A, NOT B, l); counters are those of the inner run.
[[nodiscard]] CircuitRun smin_novel(const BitStream& a, const BitStream& b, int l);

/// Residuals of the two counting identities for a smax_novel run:
///   o(C) - [o(B) + (o(A) - o(B)) + o_L - o_S]   and   o(C) - [o(B) + o_R].
/// Both are zero for every input.
struct BookkeepingResidual {
    std::int64_t excess_form = 0;
    std::int64_t overflow_form = 0;
};
[[nodiscard]] BookkeepingResidual bookkeeping_residual(const BitStream& a, const BitStream& b, const CircuitRun& run);

}  // namespace smax
