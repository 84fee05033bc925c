#pragma once

#include <optional>

#include "smax/bitstream.hpp"

namespace smax {

// Combinational elements. All gates are bitwise and throw
// std::invalid_argument on a length mismatch.

/// C = A AND B; P_C = P_A P_B for independent inputs.
[[nodiscard]] BitStream and_gate(const BitStream& a, const BitStream& b);
/// C = sel ? A : B; P_C = P_S P_A + (1 - P_S) P_B.
[[nodiscard]] BitStream mux_gate(const BitStream& a, const BitStream& b, const BitStream& sel);
/// C = A XOR B; P_C = P_A + P_B - 2 P_A P_B.
[[nodiscard]] BitStream xor_gate(const BitStream& a, const BitStream& b);
[[nodiscard]] BitStream not_gate(const BitStream& a);

/// Saturating M-state up/down chain with an enable input.
class LinearFsm {
  public:
    /// Throws std::invalid_argument if num_states < 2 or the state is out of range.
    LinearFsm(int num_states, int initial_state);

    [[nodiscard]] int num_states() const { return num_states_; }
    [[nodiscard]] int state() const { return state_; }

    void step(bool direction_up, bool enable) {
        if (!enable) {
            return;
        }
        if (direction_up) {
            if (state_ < num_states_ - 1) {
                ++state_;
            }
        } else if (state_ > 0) {
            --state_;
        }
    }

    /// Moore STanh output: 1 iff the current state is in the upper half.
    /// Throws std::invalid_argument for odd M.
    [[nodiscard]] bool stanh_output() const;

  private:
    int num_states_;
    int state_;
};

/// Throws std::invalid_argument unless m >= 2 and even.
void require_even_states(int m);

/// Plain STanh element. Each cycle emits the Moore output of the current
/// state, then steps up on X[i] = 1 and down otherwise. Starts at M/2 unless
/// an initial state is given.
[[nodiscard]] BitStream stanh_stream(const BitStream& x, int m, std::optional<int> initial_state = std::nullopt);

}  // namespace smax
